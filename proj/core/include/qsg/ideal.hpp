#pragma once

#include <string>
#include <vector>

#include "qsg/semigroup.hpp"
#include "qsg/window.hpp"
#include "qsg/word.hpp"

namespace qsg {

/// Canonical finite description of a constructible right ideal, possibly
/// translated into G:
///   lattice   — basepoint a in Z^k, meaning a + N^k;
///   half_line — rational t, meaning [t, infinity);
///   numerical — offset m (minimum) plus a membership bitmask over
///               [m, m + conductor); everything >= m + conductor belongs.
/// Two GIdeals describe the same set iff they are field-equal, so equality
/// and ordering are decidable. An ideal of S proper is a GIdeal contained
/// in S (see contained_in_s); act(), the translations and intersect all
/// preserve that certificate.
class GIdeal {
 public:
  static GIdeal empty(Kind kind);
  static GIdeal lattice_based(std::vector<Int> base);
  static GIdeal half_line_from(Rat t);
  /// Normalizes so that the offset is the minimum of the set; rejects
  /// masks that are not stable under adding generators of S.
  static GIdeal numerical_set(const Semigroup& s, Int offset,
                              std::vector<bool> mask);

  Kind kind() const { return kind_; }
  bool is_empty() const { return empty_; }

  const std::vector<Int>& base() const { return base_; }
  const Rat& t() const { return t_; }
  const Int& offset() const { return offset_; }
  const std::vector<bool>& mask() const { return mask_; }

  bool operator==(const GIdeal& o) const;
  bool operator!=(const GIdeal& o) const { return !(*this == o); }
  bool operator<(const GIdeal& o) const;

  std::string str() const;

 private:
  GIdeal() = default;

  Kind kind_ = Kind::lattice;
  bool empty_ = true;
  std::vector<Int> base_;
  Rat t_;
  Int offset_;
  std::vector<bool> mask_;
};

GIdeal full_ideal(const Semigroup& s);
GIdeal empty_ideal(const Semigroup& s);

/// pX = {p q : q in X}; requires p in S.
GIdeal translate_fwd(const Semigroup& s, const GroupElem& p, const GIdeal& x);

/// p^{-1}X = {q in S : p q in X}; requires p in S.
GIdeal translate_back(const Semigroup& s, const GroupElem& p, const GIdeal& x);

GIdeal intersect(const Semigroup& s, const GIdeal& x, const GIdeal& y);

/// g.X inside G, with no clamping to S.
GIdeal g_translate(const Semigroup& s, const GroupElem& g, const GIdeal& x);

/// X ∩ S.
GIdeal restrict_to_s(const Semigroup& s, const GIdeal& x);

bool member(const Semigroup& s, const GroupElem& g, const GIdeal& x);
bool is_subset(const Semigroup& s, const GIdeal& x, const GIdeal& y);
bool contained_in_s(const Semigroup& s, const GIdeal& x);

/// Independent oracle for act(w, S): enumerates the chain condition
/// x = p_1^{-1} q_1 ... p_n^{-1} q_n r with every suffix product in S,
/// over a window enlarged by the total displacement of w, and returns the
/// members found inside the window. Uses only semigroup membership, never
/// the canonical ideal operations.
std::vector<GroupElem> brute_force_ideal(const Semigroup& s, const Word& w,
                                         const Window& win);

/// Members of x inside the window, via canonical membership; companion to
/// brute_force_ideal for set comparisons.
std::vector<GroupElem> ideal_slice(const Semigroup& s, const GIdeal& x,
                                   const Window& win);

/// Falsifier for topological independence: returns false iff X equals the
/// union of the family on the (internally enlarged) window while differing
/// from every single member. For the three instances the enlarged window
/// makes the equality test exact, so false means a genuine violation.
bool independence_check(const Semigroup& s, const GIdeal& x,
                        const std::vector<GIdeal>& family, const Window& win);

}  // namespace qsg
