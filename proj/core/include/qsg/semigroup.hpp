#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "qsg/numeric.hpp"

namespace qsg {

enum class Kind { lattice, numerical, half_line };

const char* kind_name(Kind k);

/// Element of the ambient group G, tagged by instance:
///   lattice   — vector of rank integers (G = Z^k),
///   numerical — one integer (G = Z),
///   half_line — one rational (G = Q, embedded in R).
/// Coordinates are exact, so equality is decidable.
class GroupElem {
 public:
  GroupElem() : data_(Int(0)) {}
  explicit GroupElem(std::vector<Int> coords) : data_(std::move(coords)) {}
  explicit GroupElem(Int n) : data_(std::move(n)) {}
  explicit GroupElem(Rat t) : data_(std::move(t)) { rat().canonicalize(); }

  Kind kind() const {
    switch (data_.index()) {
      case 0: return Kind::lattice;
      case 1: return Kind::numerical;
      default: return Kind::half_line;
    }
  }

  const std::vector<Int>& coords() const { return std::get<0>(data_); }
  const Int& value() const { return std::get<1>(data_); }
  const Rat& rat() const { return std::get<2>(data_); }

  bool operator==(const GroupElem& o) const { return data_ == o.data_; }
  bool operator!=(const GroupElem& o) const { return !(*this == o); }
  bool operator<(const GroupElem& o) const { return data_ < o.data_; }

  std::string str() const;

 private:
  Rat& rat() { return std::get<2>(data_); }
  std::variant<std::vector<Int>, Int, Rat> data_;
};

/// Descriptor of the concrete pair (S, G). Three instances:
///   lattice   — S = N^k inside G = Z^k,
///   numerical — S = <a_1..a_m> (gcd 1) inside G = Z,
///   half_line — S = Q ∩ [0,∞) inside G = Q.
/// All are abelian, contain 0 and satisfy S^{-1}S = G. For numerical
/// instances the membership table below the conductor is precomputed.
class Semigroup {
 public:
  static Semigroup lattice(int rank);
  static Semigroup numerical(std::vector<Int> generators);
  static Semigroup half_line();

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<Int>& generators() const { return generators_; }
  const Int& conductor() const { return conductor_; }
  bool is_abelian() const { return true; }

  GroupElem identity() const;
  GroupElem multiply(const GroupElem& g, const GroupElem& h) const;
  GroupElem inverse(const GroupElem& g) const;
  bool in_semigroup(const GroupElem& g) const;

  /// Partial order of the directed system: p <= q iff q p^{-1} in S.
  /// Both arguments must lie in S.
  bool leq(const GroupElem& p, const GroupElem& q) const;

  /// Common upper bound of p,q in S; returns p*q, which dominates both
  /// since the instances are abelian.
  GroupElem upper_bound(const GroupElem& p, const GroupElem& q) const;

  /// The fixed fraction g = p^{-1} q with p,q in S:
  ///   lattice/half_line — p = max(-g,0), q = max(g,0) componentwise;
  ///   numerical         — p = least element of S with p >= max(-g,0)
  ///                       and p+g in S, q = p+g.
  std::pair<GroupElem, GroupElem> canonical_fraction(const GroupElem& g) const;

  /// Convenience constructors for elements of this instance.
  GroupElem elem(long v) const;
  GroupElem elem(std::vector<long> coords) const;
  GroupElem elem(std::initializer_list<long> coords) const {
    return elem(std::vector<long>(coords));
  }
  GroupElem elem(const Rat& t) const;

  void check_elem(const GroupElem& g) const;

  bool operator==(const Semigroup& o) const;

 private:
  Semigroup() = default;

  Kind kind_ = Kind::lattice;
  int rank_ = 1;
  std::vector<Int> generators_;
  Int conductor_ = 0;
  std::vector<bool> below_conductor_;  // membership on [0, conductor)
};

}  // namespace qsg
