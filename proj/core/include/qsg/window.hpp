#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsg/semigroup.hpp"

namespace qsg {

/// Ordered finite slice of S used for truncated matrices and brute-force
/// oracles:
///   lattice   — box [0,N]^k ∩ N^k, row-major order;
///   numerical — [0,N] ∩ S, increasing;
///   half_line — grid {j/denom : 0 <= j <= N*denom}.
/// The safe core of radius r is the sub-slice whose translates by any
/// displacement of magnitude <= r stay inside the window.
class Window {
 public:
  /// Box window [0, bound] (per coordinate). For half_line, `denom` fixes
  /// the rational grid step 1/denom.
  Window(const Semigroup& s, long bound, Int denom = 1);

  const Semigroup& semigroup() const { return *sg_; }
  long bound() const { return bound_; }
  const Int& denom() const { return denom_; }

  const std::vector<GroupElem>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const GroupElem& operator[](std::size_t i) const { return elems_[i]; }

  bool contains(const GroupElem& g) const { return index_.count(g) > 0; }
  std::optional<std::size_t> index_of(const GroupElem& g) const;

  /// True if g lies in the safe core of radius r: every coordinate of g is
  /// within [0, bound - r].
  bool in_core(const GroupElem& g, long radius) const;

  std::vector<std::size_t> core_indices(long radius) const;

 private:
  const Semigroup* sg_;
  long bound_;
  Int denom_;
  std::vector<GroupElem> elems_;
  std::map<GroupElem, std::size_t> index_;
};

}  // namespace qsg
