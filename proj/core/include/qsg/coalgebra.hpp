#pragma once

#include <map>
#include <utility>

#include "qsg/element.hpp"

namespace qsg {

/// Finite linear combination in the algebraic tensor square, with exact
/// coefficients. Both legs must come from the same instance.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;
  using Terms = std::map<Key, QQi>;

  static TensorElement zero() { return {}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const QQi& c);

  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  Terms terms_;
};

/// Comultiplication: group-like on normal-form monomials, m -> m (x) m,
/// extended linearly. Multiplicativity and coassociativity hold because
/// monomial products are again single monomials.
TensorElement delta(const Semigroup& s, const Element& x);

/// Leg-wise product on the tensor square.
TensorElement tensor_mul(const Semigroup& s, const TensorElement& a,
                         const TensorElement& b);

/// Leg-wise star.
TensorElement tensor_star(const Semigroup& s, const TensorElement& a);

/// (delta (x) id) delta = (id (x) delta) delta, checked structurally on the
/// triple tensor.
bool coassoc_check(const Semigroup& s, const Element& x);

/// flip . delta = delta.
bool cocomm_check(const Semigroup& s, const Element& x);

Element commutator(const Semigroup& s, const Element& x, const Element& y);

Element sub(const Element& x, const Element& y);

/// The quotient map onto the group algebra: E_X L_g -> u_g, killing the
/// commutator ideal.
GroupAlgebraElement quotient_to_group_algebra(const Semigroup& s,
                                              const Element& x);

GroupAlgebraElement convolution(const Semigroup& s,
                                const GroupAlgebraElement& u,
                                const GroupAlgebraElement& v);

GroupAlgebraElement group_algebra_star(const Semigroup& s,
                                       const GroupAlgebraElement& u);

/// Sup of |sum_g c_g z^g| over a uniform grid of torus points; a lower
/// bound of the true sup norm, converging from below as the grid refines.
/// Half-line data is scaled to integer exponents by a common denominator.
double symbol_sup_norm(const Semigroup& s, const GroupAlgebraElement& u,
                       long grid);

/// Canonical form of the translated ideal q^{-1}.X (q in S, X an ideal);
/// the class is the set itself, so representation independence is built in.
GIdeal translated_ideal(const Semigroup& s, const GroupElem& q,
                        const GIdeal& x);

/// Action of G on translated-ideal classes: c -> g.c, re-canonicalized.
GIdeal tau_g(const Semigroup& s, const GroupElem& g, const GIdeal& c);

}  // namespace qsg
