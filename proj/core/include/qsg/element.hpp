#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsg/ideal.hpp"
#include "qsg/report.hpp"
#include "qsg/word.hpp"

namespace qsg {

/// Normal-form monomial E_X L_g: multiplication by the indicator of the
/// nonempty ideal X followed by left translation by g. Invariants: X lies
/// in S and in g.S (equivalently g^{-1}.X lies in S). Every finite product
/// of the generators T_a, T_a^* is of this shape, and equality of monomials
/// is equality of the pair (g, X).
class Monomial {
 public:
  static Monomial make(const Semigroup& s, GIdeal ideal, GroupElem g);

  const GIdeal& ideal() const { return ideal_; }
  const GroupElem& g() const { return g_; }

  bool operator==(const Monomial& o) const {
    return g_ == o.g_ && ideal_ == o.ideal_;
  }
  bool operator<(const Monomial& o) const {
    if (g_ != o.g_) return g_ < o.g_;
    return ideal_ < o.ideal_;
  }

  std::string str() const;

 private:
  Monomial(GIdeal ideal, GroupElem g) : ideal_(std::move(ideal)), g_(std::move(g)) {}
  GIdeal ideal_;
  GroupElem g_;
};

/// Finite linear combination of monomials with exact Gaussian rational
/// coefficients. Zero coefficients are never stored; the zero element is
/// the empty map, the unit is (S, e).
class Element {
 public:
  using Terms = std::map<Monomial, QQi>;

  Element() = default;

  static Element zero() { return {}; }
  static Element identity(const Semigroup& s);
  /// E_X; the zero element when X is empty.
  static Element projection(const Semigroup& s, const GIdeal& x);
  static Element monomial(const Semigroup& s, GIdeal x, GroupElem g,
                          QQi coeff = QQi::one());

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const QQi& c);
  QQi coeff(const Monomial& m) const;

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Terms terms_;
};

/// Image of an Element in the group algebra: finitely many group elements
/// with exact coefficients.
class GroupAlgebraElement {
 public:
  using Terms = std::map<GroupElem, QQi>;

  static GroupAlgebraElement zero() { return {}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const GroupElem& g, const QQi& c);

  bool operator==(const GroupAlgebraElement& o) const {
    return terms_ == o.terms_;
  }

 private:
  Terms terms_;
};

/// T_w in normal form: the single monomial (act(w,S), (w)_G), or zero when
/// the word kills S.
Element from_word(const Semigroup& s, const Word& w);

/// T_a = E_{aS} L_a; requires a in S.
Element generator(const Semigroup& s, const GroupElem& a);
/// T_a^* = E_S L_{a^{-1}}; requires a in S.
Element generator_star(const Semigroup& s, const GroupElem& a);

/// E_X L_{g1} . E_Y L_{g2} = E_{X ∩ g1.Y} L_{g1 g2}; zero element when the
/// intersection is empty.
Element product(const Semigroup& s, const Monomial& m1, const Monomial& m2);

/// (E_X L_g)^* = E_{g^{-1}.X} L_{g^{-1}}.
Monomial adjoint(const Semigroup& s, const Monomial& m);

Element add(const Element& x, const Element& y);
Element scale(const QQi& c, const Element& x);
Element mul(const Semigroup& s, const Element& x, const Element& y);
Element star(const Semigroup& s, const Element& x);

inline const GroupElem& index(const Monomial& m) { return m.g(); }

/// A monomial is an orthogonal projection exactly when its index is e.
bool is_projection(const Semigroup& s, const Monomial& m);

/// tau_p(x) = T_p x T_p^*; requires p in S.
Element tau(const Semigroup& s, const GroupElem& p, const Element& x);

/// Diagonal vector functional phi_k(T) = <T delta_k, delta_k> on discrete
/// instances; only index-e monomials containing k contribute.
QQi phi(const Semigroup& s, const GroupElem& k, const Element& x);

struct RelationSample {
  GroupElem p, q;
  GIdeal x, y;
};

/// Checks the defining relations of the universal semigroup algebra on the
/// concrete representation, as exact Element identities:
///   v_pq = v_p v_q,  v_p e_X v_p^* = e_pX,  e_S = 1,  e_empty = 0,
///   e_{X∩Y} = e_X e_Y,  and the action tau_p(e_X) = e_pX.
Report check_universal_relations(const Semigroup& s,
                                 const std::vector<RelationSample>& samples);

}  // namespace qsg
