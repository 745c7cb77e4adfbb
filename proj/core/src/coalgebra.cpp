#include "qsg/coalgebra.hpp"

#include <cmath>
#include <complex>
#include <tuple>
#include <vector>

namespace qsg {

void TensorElement::add_term(const Key& k, const QQi& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement delta(const Semigroup& s, const Element& x) {
  (void)s;
  TensorElement t;
  for (const auto& [m, c] : x.terms()) t.add_term({m, m}, c);
  return t;
}

TensorElement tensor_mul(const Semigroup& s, const TensorElement& a,
                         const TensorElement& b) {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Element left = product(s, ka.first, kb.first);
      if (left.is_zero()) continue;
      Element right = product(s, ka.second, kb.second);
      if (right.is_zero()) continue;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
          r.add_term({ml, mr}, ca * cb * cl * cr);
    }
  return r;
}

TensorElement tensor_star(const Semigroup& s, const TensorElement& a) {
  TensorElement r;
  for (const auto& [k, c] : a.terms())
    r.add_term({adjoint(s, k.first), adjoint(s, k.second)}, c.conj());
  return r;
}

bool coassoc_check(const Semigroup& s, const Element& x) {
  using Triple = std::tuple<Monomial, Monomial, Monomial>;
  std::map<Triple, QQi> lhs, rhs;
  TensorElement d = delta(s, x);
  for (const auto& [k, c] : d.terms()) {
    // delta applied to the left leg, then to the right leg
    TensorElement dl = delta(s, Element::monomial(s, k.first.ideal(),
                                                  k.first.g()));
    for (const auto& [kl, cl] : dl.terms()) {
      Triple t{kl.first, kl.second, k.second};
      auto [it, fresh] = lhs.emplace(t, c * cl);
      if (!fresh) it->second += c * cl;
    }
    TensorElement dr = delta(s, Element::monomial(s, k.second.ideal(),
                                                  k.second.g()));
    for (const auto& [kr, cr] : dr.terms()) {
      Triple t{k.first, kr.first, kr.second};
      auto [it, fresh] = rhs.emplace(t, c * cr);
      if (!fresh) it->second += c * cr;
    }
  }
  for (auto it = lhs.begin(); it != lhs.end();)
    it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
  for (auto it = rhs.begin(); it != rhs.end();)
    it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
  return lhs == rhs;
}

bool cocomm_check(const Semigroup& s, const Element& x) {
  TensorElement d = delta(s, x);
  TensorElement flipped;
  for (const auto& [k, c] : d.terms())
    flipped.add_term({k.second, k.first}, c);
  return d == flipped;
}

Element sub(const Element& x, const Element& y) {
  return add(x, scale(-QQi::one(), y));
}

Element commutator(const Semigroup& s, const Element& x, const Element& y) {
  return sub(mul(s, x, y), mul(s, y, x));
}

GroupAlgebraElement quotient_to_group_algebra(const Semigroup& s,
                                              const Element& x) {
  if (!s.is_abelian()) throw Error("quotient requires an abelian instance");
  GroupAlgebraElement u;
  for (const auto& [m, c] : x.terms()) u.add_term(m.g(), c);
  return u;
}

GroupAlgebraElement convolution(const Semigroup& s,
                                const GroupAlgebraElement& u,
                                const GroupAlgebraElement& v) {
  GroupAlgebraElement r;
  for (const auto& [g, cg] : u.terms())
    for (const auto& [h, ch] : v.terms())
      r.add_term(s.multiply(g, h), cg * ch);
  return r;
}

GroupAlgebraElement group_algebra_star(const Semigroup& s,
                                       const GroupAlgebraElement& u) {
  GroupAlgebraElement r;
  for (const auto& [g, c] : u.terms()) r.add_term(s.inverse(g), c.conj());
  return r;
}

namespace {

// Integer exponent vectors of the symbol; half-line data is scaled by the
// common denominator of all coordinates.
std::vector<std::pair<std::vector<long>, std::complex<double>>>
integer_symbol(const Semigroup& s, const GroupAlgebraElement& u) {
  std::vector<std::pair<std::vector<long>, std::complex<double>>> out;
  Int denom = 1;
  if (s.kind() == Kind::half_line)
    for (const auto& [g, c] : u.terms()) denom = lcm(denom, g.rat().get_den());
  for (const auto& [g, c] : u.terms()) {
    std::vector<long> exps;
    switch (s.kind()) {
      case Kind::lattice:
        for (const Int& x : g.coords()) exps.push_back(to_long(x));
        break;
      case Kind::numerical:
        exps.push_back(to_long(g.value()));
        break;
      case Kind::half_line:
        exps.push_back(to_long(Int(g.rat().get_num() * (denom / g.rat().get_den()))));
        break;
    }
    out.emplace_back(std::move(exps),
                     std::complex<double>(c.re_double(), c.im_double()));
  }
  return out;
}

}  // namespace

double symbol_sup_norm(const Semigroup& s, const GroupAlgebraElement& u,
                       long grid) {
  if (grid < 1) throw Error("grid must be >= 1");
  if (u.is_zero()) return 0.0;
  auto symbol = integer_symbol(s, u);
  const size_t dim = symbol.front().first.size();

  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<long> idx(dim, 0);
  double best = 0.0;
  while (true) {
    std::complex<double> total = 0.0;
    for (const auto& [exps, c] : symbol) {
      double phase = 0.0;
      for (size_t i = 0; i < dim; ++i)
        phase += two_pi * static_cast<double>(idx[i]) /
                 static_cast<double>(grid) * static_cast<double>(exps[i]);
      total += c * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    best = std::max(best, std::abs(total));

    size_t i = 0;
    for (; i < dim; ++i) {
      if (idx[i] + 1 < grid) {
        ++idx[i];
        std::fill(idx.begin(), idx.begin() + static_cast<long>(i), 0);
        break;
      }
    }
    if (i == dim) break;
  }
  return best;
}

GIdeal translated_ideal(const Semigroup& s, const GroupElem& q,
                        const GIdeal& x) {
  if (!s.in_semigroup(q)) throw Error("translated_ideal: q not in S");
  return g_translate(s, s.inverse(q), x);
}

GIdeal tau_g(const Semigroup& s, const GroupElem& g, const GIdeal& c) {
  return g_translate(s, g, c);
}

}  // namespace qsg
