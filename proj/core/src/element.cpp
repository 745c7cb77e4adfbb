#include "qsg/element.hpp"

#include <sstream>

namespace qsg {

Monomial Monomial::make(const Semigroup& s, GIdeal ideal, GroupElem g) {
  s.check_elem(g);
  if (ideal.is_empty()) throw Error("monomial ideal must be nonempty");
  if (!contained_in_s(s, ideal))
    throw Error("monomial ideal not contained in S: " + ideal.str());
  GIdeal pulled = g_translate(s, s.inverse(g), ideal);
  if (!contained_in_s(s, pulled))
    throw Error("monomial ideal not contained in g.S: " + ideal.str() +
                " with g = " + g.str());
  return Monomial(std::move(ideal), std::move(g));
}

std::string Monomial::str() const {
  return "E_" + ideal_.str() + " L_" + g_.str();
}

Element Element::identity(const Semigroup& s) {
  return monomial(s, full_ideal(s), s.identity());
}

Element Element::projection(const Semigroup& s, const GIdeal& x) {
  if (x.is_empty()) return zero();
  return monomial(s, x, s.identity());
}

Element Element::monomial(const Semigroup& s, GIdeal x, GroupElem g,
                          QQi coeff) {
  Element e;
  if (x.is_empty() || coeff.is_zero()) return e;
  e.add_term(Monomial::make(s, std::move(x), std::move(g)), coeff);
  return e;
}

void Element::add_term(const Monomial& m, const QQi& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QQi Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QQi::zero() : it->second;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ")*" << m.str();
  }
  return os.str();
}

void GroupAlgebraElement::add_term(const GroupElem& g, const QQi& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element from_word(const Semigroup& s, const Word& w) {
  GIdeal x = act(s, w, full_ideal(s));
  return Element::monomial(s, std::move(x), evaluate(s, w));
}

Element generator(const Semigroup& s, const GroupElem& a) {
  if (!s.in_semigroup(a)) throw Error("generator: a not in S");
  return Element::monomial(s, translate_fwd(s, a, full_ideal(s)), a);
}

Element generator_star(const Semigroup& s, const GroupElem& a) {
  if (!s.in_semigroup(a)) throw Error("generator_star: a not in S");
  return Element::monomial(s, full_ideal(s), s.inverse(a));
}

Element product(const Semigroup& s, const Monomial& m1, const Monomial& m2) {
  GIdeal translated = g_translate(s, m1.g(), m2.ideal());
  GIdeal meet = intersect(s, m1.ideal(), translated);
  return Element::monomial(s, std::move(meet),
                           s.multiply(m1.g(), m2.g()));
}

Monomial adjoint(const Semigroup& s, const Monomial& m) {
  GroupElem gi = s.inverse(m.g());
  return Monomial::make(s, g_translate(s, gi, m.ideal()), gi);
}

Element add(const Element& x, const Element& y) {
  Element r = x;
  for (const auto& [m, c] : y.terms()) r.add_term(m, c);
  return r;
}

Element scale(const QQi& c, const Element& x) {
  Element r;
  for (const auto& [m, v] : x.terms()) r.add_term(m, c * v);
  return r;
}

Element mul(const Semigroup& s, const Element& x, const Element& y) {
  Element r;
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) {
      Element p = product(s, m1, m2);
      for (const auto& [m, c] : p.terms()) r.add_term(m, c1 * c2 * c);
    }
  return r;
}

Element star(const Semigroup& s, const Element& x) {
  Element r;
  for (const auto& [m, c] : x.terms()) r.add_term(adjoint(s, m), c.conj());
  return r;
}

bool is_projection(const Semigroup& s, const Monomial& m) {
  return m.g() == s.identity();
}

Element tau(const Semigroup& s, const GroupElem& p, const Element& x) {
  if (!s.in_semigroup(p)) throw Error("tau: p not in S");
  return mul(s, generator(s, p), mul(s, x, generator_star(s, p)));
}

QQi phi(const Semigroup& s, const GroupElem& k, const Element& x) {
  if (s.kind() == Kind::half_line)
    throw Error("phi requires a discrete instance");
  if (!s.in_semigroup(k)) throw Error("phi: k not in S");
  QQi sum;
  const GroupElem e = s.identity();
  for (const auto& [m, c] : x.terms())
    if (m.g() == e && member(s, k, m.ideal())) sum += c;
  return sum;
}

Report check_universal_relations(const Semigroup& s,
                                 const std::vector<RelationSample>& samples) {
  Report rep;
  rep.suite = "relations";

  rep.add("e_S_is_unit",
          Element::projection(s, full_ideal(s)) == Element::identity(s),
          "e_S != 1");
  rep.add("e_empty_is_zero",
          Element::projection(s, empty_ideal(s)) == Element::zero(),
          "e_empty != 0");

  int i = 0;
  for (const RelationSample& smp : samples) {
    const std::string tag = "#" + std::to_string(i++);
    const Element vp = generator(s, smp.p);
    const Element vq = generator(s, smp.q);
    const Element vp_star = generator_star(s, smp.p);
    const Element ex = Element::projection(s, smp.x);
    const Element ey = Element::projection(s, smp.y);

    rep.add("v_pq=v_p*v_q" + tag,
            generator(s, s.multiply(smp.p, smp.q)) == mul(s, vp, vq),
            "p=" + smp.p.str() + " q=" + smp.q.str());

    const Element lhs = mul(s, vp, mul(s, ex, vp_star));
    const Element rhs =
        Element::projection(s, translate_fwd(s, smp.p, smp.x));
    rep.add("v_p*e_X*v_p^*=e_pX" + tag, lhs == rhs,
            "p=" + smp.p.str() + " X=" + smp.x.str());

    rep.add("e_XY=e_X*e_Y" + tag,
            Element::projection(s, intersect(s, smp.x, smp.y)) ==
                mul(s, ex, ey),
            "X=" + smp.x.str() + " Y=" + smp.y.str());

    rep.add("tau_p(e_X)=e_pX" + tag,
            tau(s, smp.p, ex) ==
                Element::projection(s, translate_fwd(s, smp.p, smp.x)),
            "p=" + smp.p.str() + " X=" + smp.x.str());
  }
  return rep;
}

}  // namespace qsg
