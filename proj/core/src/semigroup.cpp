#include "qsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsg {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::lattice: return "lattice";
    case Kind::numerical: return "numerical";
    case Kind::half_line: return "half_line";
  }
  return "?";
}

std::string GroupElem::str() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::lattice: {
      os << '(';
      for (size_t i = 0; i < coords().size(); ++i) {
        if (i) os << ',';
        os << coords()[i].get_str();
      }
      os << ')';
      break;
    }
    case Kind::numerical:
      os << value().get_str();
      break;
    case Kind::half_line:
      os << rat().get_str();
      break;
  }
  return os.str();
}

Semigroup Semigroup::lattice(int rank) {
  if (rank < 1) throw Error("lattice rank must be >= 1");
  Semigroup s;
  s.kind_ = Kind::lattice;
  s.rank_ = rank;
  return s;
}

Semigroup Semigroup::numerical(std::vector<Int> generators) {
  if (generators.empty()) throw Error("numerical semigroup needs generators");
  for (const Int& g : generators)
    if (g <= 0) throw Error("numerical semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Int d = 0;
  for (const Int& g : generators) d = gcd(d, g);
  if (d != 1)
    throw Error("numerical semigroup generators must have gcd 1, got gcd " +
                d.get_str());

  Semigroup s;
  s.kind_ = Kind::numerical;
  s.generators_ = generators;

  // Schur bound on the Frobenius number: (a_min - 1)(a_max - 1) - 1.
  long limit = to_long((generators.front() - 1) * (generators.back() - 1)) + 1;
  std::vector<bool> member(static_cast<size_t>(limit) + 1, false);
  member[0] = true;
  for (long n = 1; n <= limit; ++n)
    for (const Int& g : s.generators_) {
      long gi = to_long(g);
      if (gi <= n && member[static_cast<size_t>(n - gi)]) {
        member[static_cast<size_t>(n)] = true;
        break;
      }
    }
  long cond = 0;
  for (long n = limit; n >= 0; --n)
    if (!member[static_cast<size_t>(n)]) {
      cond = n + 1;
      break;
    }
  s.conductor_ = cond;
  s.below_conductor_.assign(member.begin(), member.begin() + cond);
  return s;
}

Semigroup Semigroup::half_line() {
  Semigroup s;
  s.kind_ = Kind::half_line;
  return s;
}

void Semigroup::check_elem(const GroupElem& g) const {
  if (g.kind() != kind_)
    throw InstanceMismatchError(std::string("element kind ") +
                                kind_name(g.kind()) +
                                " does not match instance " +
                                kind_name(kind_));
  if (kind_ == Kind::lattice && g.coords().size() != static_cast<size_t>(rank_))
    throw InstanceMismatchError("lattice element arity mismatch");
}

GroupElem Semigroup::identity() const {
  switch (kind_) {
    case Kind::lattice:
      return GroupElem(std::vector<Int>(static_cast<size_t>(rank_), Int(0)));
    case Kind::numerical:
      return GroupElem(Int(0));
    case Kind::half_line:
      return GroupElem(Rat(0));
  }
  throw Error("bad kind");
}

GroupElem Semigroup::multiply(const GroupElem& g, const GroupElem& h) const {
  check_elem(g);
  check_elem(h);
  switch (kind_) {
    case Kind::lattice: {
      std::vector<Int> c(g.coords());
      for (size_t i = 0; i < c.size(); ++i) c[i] += h.coords()[i];
      return GroupElem(std::move(c));
    }
    case Kind::numerical:
      return GroupElem(Int(g.value() + h.value()));
    case Kind::half_line:
      return GroupElem(Rat(g.rat() + h.rat()));
  }
  throw Error("bad kind");
}

GroupElem Semigroup::inverse(const GroupElem& g) const {
  check_elem(g);
  switch (kind_) {
    case Kind::lattice: {
      std::vector<Int> c(g.coords());
      for (Int& x : c) x = -x;
      return GroupElem(std::move(c));
    }
    case Kind::numerical:
      return GroupElem(Int(-g.value()));
    case Kind::half_line:
      return GroupElem(Rat(-g.rat()));
  }
  throw Error("bad kind");
}

bool Semigroup::in_semigroup(const GroupElem& g) const {
  check_elem(g);
  switch (kind_) {
    case Kind::lattice:
      return std::all_of(g.coords().begin(), g.coords().end(),
                         [](const Int& x) { return x >= 0; });
    case Kind::numerical: {
      const Int& n = g.value();
      if (n < 0) return false;
      if (n >= conductor_) return true;
      return below_conductor_[static_cast<size_t>(to_long(n))];
    }
    case Kind::half_line:
      return g.rat() >= 0;
  }
  throw Error("bad kind");
}

bool Semigroup::leq(const GroupElem& p, const GroupElem& q) const {
  if (!in_semigroup(p) || !in_semigroup(q))
    throw Error("leq arguments must lie in S");
  return in_semigroup(multiply(q, inverse(p)));
}

GroupElem Semigroup::upper_bound(const GroupElem& p, const GroupElem& q) const {
  if (!in_semigroup(p) || !in_semigroup(q))
    throw Error("upper_bound arguments must lie in S");
  return multiply(p, q);
}

std::pair<GroupElem, GroupElem> Semigroup::canonical_fraction(
    const GroupElem& g) const {
  check_elem(g);
  switch (kind_) {
    case Kind::lattice: {
      std::vector<Int> p(g.coords().size()), q(g.coords().size());
      for (size_t i = 0; i < p.size(); ++i) {
        const Int& x = g.coords()[i];
        p[i] = x < 0 ? -x : Int(0);
        q[i] = x > 0 ? x : Int(0);
      }
      return {GroupElem(std::move(p)), GroupElem(std::move(q))};
    }
    case Kind::numerical: {
      Int lo = g.value() < 0 ? -g.value() : Int(0);
      for (Int p = lo;; ++p) {
        GroupElem pe{Int(p)}, qe{Int(p + g.value())};
        if (in_semigroup(pe) && in_semigroup(qe)) return {pe, qe};
      }
    }
    case Kind::half_line: {
      const Rat& t = g.rat();
      Rat p = t < 0 ? Rat(-t) : Rat(0);
      Rat q = t > 0 ? t : Rat(0);
      return {GroupElem(p), GroupElem(q)};
    }
  }
  throw Error("bad kind");
}

GroupElem Semigroup::elem(long v) const {
  switch (kind_) {
    case Kind::lattice:
      if (rank_ != 1) throw Error("scalar elem() on lattice of rank > 1");
      return GroupElem(std::vector<Int>{Int(v)});
    case Kind::numerical:
      return GroupElem(Int(v));
    case Kind::half_line:
      return GroupElem(Rat(v));
  }
  throw Error("bad kind");
}

GroupElem Semigroup::elem(std::vector<long> coords) const {
  if (kind_ != Kind::lattice) throw Error("vector elem() on non-lattice");
  std::vector<Int> c(coords.begin(), coords.end());
  GroupElem g(std::move(c));
  check_elem(g);
  return g;
}

GroupElem Semigroup::elem(const Rat& t) const {
  if (kind_ != Kind::half_line) throw Error("rational elem() on non-half_line");
  return GroupElem(t);
}

bool Semigroup::operator==(const Semigroup& o) const {
  return kind_ == o.kind_ && rank_ == o.rank_ && generators_ == o.generators_;
}

}  // namespace qsg
