#include "qsg/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace qsg {

namespace {

long conductor_len(const Semigroup& s) { return to_long(s.conductor()); }

// Raw membership of v in the set described by (offset, mask) with the
// [offset + mask.size(), infinity) tail included.
bool raw_member(const Int& v, const Int& offset, const std::vector<bool>& mask) {
  Int d = v - offset;
  if (d < 0) return false;
  if (d >= static_cast<long>(mask.size())) return true;
  return mask[static_cast<size_t>(to_long(d))];
}

}  // namespace

GIdeal GIdeal::empty(Kind kind) {
  GIdeal g;
  g.kind_ = kind;
  g.empty_ = true;
  return g;
}

GIdeal GIdeal::lattice_based(std::vector<Int> base) {
  GIdeal g;
  g.kind_ = Kind::lattice;
  g.empty_ = false;
  g.base_ = std::move(base);
  return g;
}

GIdeal GIdeal::half_line_from(Rat t) {
  GIdeal g;
  g.kind_ = Kind::half_line;
  g.empty_ = false;
  t.canonicalize();
  g.t_ = std::move(t);
  return g;
}

GIdeal GIdeal::numerical_set(const Semigroup& s, Int offset,
                             std::vector<bool> mask) {
  const long c = conductor_len(s);
  if (static_cast<long>(mask.size()) != c)
    throw Error("numerical ideal mask must have conductor length");

  // Shift the offset to the minimum of the set.
  long first = 0;
  while (first < c && !mask[static_cast<size_t>(first)]) ++first;
  if (first > 0) {
    std::vector<bool> shifted(static_cast<size_t>(c), true);
    for (long j = 0; j + first < c; ++j)
      shifted[static_cast<size_t>(j)] = mask[static_cast<size_t>(j + first)];
    offset += first;
    mask = std::move(shifted);
  }

  // Stability under adding generators: otherwise the set is not an
  // S-translate of a constructible ideal.
  for (long j = 0; j < c; ++j) {
    if (!mask[static_cast<size_t>(j)]) continue;
    for (const Int& a : s.generators()) {
      Int tgt = j + a;
      if (tgt < c && !mask[static_cast<size_t>(to_long(tgt))])
        throw Error("numerical ideal mask not closed under S");
    }
  }

  GIdeal g;
  g.kind_ = Kind::numerical;
  g.empty_ = false;
  g.offset_ = std::move(offset);
  g.mask_ = std::move(mask);
  return g;
}

bool GIdeal::operator==(const GIdeal& o) const {
  if (kind_ != o.kind_) return false;
  if (empty_ || o.empty_) return empty_ == o.empty_;
  switch (kind_) {
    case Kind::lattice: return base_ == o.base_;
    case Kind::half_line: return t_ == o.t_;
    case Kind::numerical: return offset_ == o.offset_ && mask_ == o.mask_;
  }
  return false;
}

bool GIdeal::operator<(const GIdeal& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (empty_ != o.empty_) return empty_;  // empty sorts first
  if (empty_) return false;
  switch (kind_) {
    case Kind::lattice: return base_ < o.base_;
    case Kind::half_line: return t_ < o.t_;
    case Kind::numerical:
      if (offset_ != o.offset_) return offset_ < o.offset_;
      return mask_ < o.mask_;
  }
  return false;
}

std::string GIdeal::str() const {
  if (empty_) return "{}";
  std::ostringstream os;
  switch (kind_) {
    case Kind::lattice: {
      os << '(';
      for (size_t i = 0; i < base_.size(); ++i) {
        if (i) os << ',';
        os << base_[i].get_str();
      }
      os << ")+N^" << base_.size();
      break;
    }
    case Kind::half_line:
      os << '[' << t_.get_str() << ",inf)";
      break;
    case Kind::numerical: {
      os << offset_.get_str() << '+';
      for (bool b : mask_) os << (b ? '1' : '0');
      os << "...";
      break;
    }
  }
  return os.str();
}

GIdeal full_ideal(const Semigroup& s) {
  switch (s.kind()) {
    case Kind::lattice:
      return GIdeal::lattice_based(
          std::vector<Int>(static_cast<size_t>(s.rank()), Int(0)));
    case Kind::half_line:
      return GIdeal::half_line_from(Rat(0));
    case Kind::numerical: {
      const long c = conductor_len(s);
      std::vector<bool> mask(static_cast<size_t>(c));
      for (long j = 0; j < c; ++j)
        mask[static_cast<size_t>(j)] = s.in_semigroup(GroupElem(Int(j)));
      return GIdeal::numerical_set(s, Int(0), std::move(mask));
    }
  }
  throw Error("bad kind");
}

GIdeal empty_ideal(const Semigroup& s) { return GIdeal::empty(s.kind()); }

GIdeal g_translate(const Semigroup& s, const GroupElem& g, const GIdeal& x) {
  s.check_elem(g);
  if (x.is_empty()) return x;
  switch (s.kind()) {
    case Kind::lattice: {
      std::vector<Int> b(x.base());
      for (size_t i = 0; i < b.size(); ++i) b[i] += g.coords()[i];
      return GIdeal::lattice_based(std::move(b));
    }
    case Kind::half_line:
      return GIdeal::half_line_from(x.t() + g.rat());
    case Kind::numerical:
      return GIdeal::numerical_set(s, x.offset() + g.value(), x.mask());
  }
  throw Error("bad kind");
}

GIdeal translate_fwd(const Semigroup& s, const GroupElem& p, const GIdeal& x) {
  if (!s.in_semigroup(p)) throw Error("translate_fwd: p not in S");
  return g_translate(s, p, x);
}

GIdeal intersect(const Semigroup& s, const GIdeal& x, const GIdeal& y) {
  if (x.kind() != y.kind()) throw Error("intersect: instance mismatch");
  if (x.is_empty() || y.is_empty()) return GIdeal::empty(x.kind());
  switch (s.kind()) {
    case Kind::lattice: {
      std::vector<Int> b(x.base());
      for (size_t i = 0; i < b.size(); ++i)
        b[i] = std::max(b[i], y.base()[i]);
      return GIdeal::lattice_based(std::move(b));
    }
    case Kind::half_line:
      return GIdeal::half_line_from(std::max(x.t(), y.t()));
    case Kind::numerical: {
      const long c = conductor_len(s);
      Int m = std::max(x.offset(), y.offset());
      std::vector<bool> mask(static_cast<size_t>(c));
      for (long j = 0; j < c; ++j) {
        Int v = m + j;
        mask[static_cast<size_t>(j)] =
            raw_member(v, x.offset(), x.mask()) &&
            raw_member(v, y.offset(), y.mask());
      }
      return GIdeal::numerical_set(s, std::move(m), std::move(mask));
    }
  }
  throw Error("bad kind");
}

GIdeal restrict_to_s(const Semigroup& s, const GIdeal& x) {
  if (x.is_empty()) return x;
  switch (s.kind()) {
    case Kind::lattice: {
      std::vector<Int> b(x.base());
      for (Int& v : b)
        if (v < 0) v = 0;
      return GIdeal::lattice_based(std::move(b));
    }
    case Kind::half_line:
      return GIdeal::half_line_from(std::max(x.t(), Rat(0)));
    case Kind::numerical:
      return intersect(s, x, full_ideal(s));
  }
  throw Error("bad kind");
}

GIdeal translate_back(const Semigroup& s, const GroupElem& p, const GIdeal& x) {
  if (!s.in_semigroup(p)) throw Error("translate_back: p not in S");
  return restrict_to_s(s, g_translate(s, s.inverse(p), x));
}

bool member(const Semigroup& s, const GroupElem& g, const GIdeal& x) {
  s.check_elem(g);
  if (x.is_empty()) return false;
  switch (s.kind()) {
    case Kind::lattice: {
      for (size_t i = 0; i < x.base().size(); ++i)
        if (g.coords()[i] < x.base()[i]) return false;
      return true;
    }
    case Kind::half_line:
      return g.rat() >= x.t();
    case Kind::numerical:
      return raw_member(g.value(), x.offset(), x.mask());
  }
  return false;
}

bool is_subset(const Semigroup& s, const GIdeal& x, const GIdeal& y) {
  if (x.is_empty()) return true;
  return intersect(s, x, y) == x;
}

bool contained_in_s(const Semigroup& s, const GIdeal& x) {
  return restrict_to_s(s, x) == x;
}

std::vector<GroupElem> ideal_slice(const Semigroup& s, const GIdeal& x,
                                   const Window& win) {
  std::vector<GroupElem> out;
  for (const GroupElem& g : win.elements())
    if (member(s, g, x)) out.push_back(g);
  return out;
}

namespace {

// Alternating form p_1^{-1} q_1 ... p_n^{-1} q_n of a word: maximal runs of
// same-sign letters are multiplied out, with unit p_1 or q_n inserted when
// the word starts positively or ends negatively.
std::vector<std::pair<GroupElem, GroupElem>> alternating_pairs(
    const Semigroup& s, const Word& w) {
  std::vector<std::pair<GroupElem, GroupElem>> pairs;
  const GroupElem e = s.identity();
  size_t i = 0;
  while (i < w.letters.size()) {
    GroupElem p = e, q = e;
    if (w.letters[i].exp == -1) {
      for (; i < w.letters.size() && w.letters[i].exp == -1; ++i)
        p = s.multiply(p, w.letters[i].base);
    }
    if (i < w.letters.size() && w.letters[i].exp == +1) {
      for (; i < w.letters.size() && w.letters[i].exp == +1; ++i)
        q = s.multiply(q, w.letters[i].base);
    }
    pairs.emplace_back(p, q);
  }
  return pairs;
}

// Sum of coordinate magnitudes of all letter bases, rounded up to whole
// units; enlarging the window by this much provably covers every chain
// value of the enumeration.
long displacement_bound(const Semigroup& s, const Word& w) {
  if (s.kind() == Kind::half_line) {
    Rat total = 0;
    for (const Letter& l : w.letters) total += abs(l.base.rat());
    Int units = (total.get_num() + total.get_den() - 1) / total.get_den();
    return to_long(units);
  }
  Int total = 0;
  for (const Letter& l : w.letters) {
    if (s.kind() == Kind::lattice) {
      Int m = 0;
      for (const Int& x : l.base.coords()) m = std::max(m, Int(abs(x)));
      total += m;
    } else {
      total += abs(l.base.value());
    }
  }
  return to_long(total);
}

}  // namespace

std::vector<GroupElem> brute_force_ideal(const Semigroup& s, const Word& w,
                                         const Window& win) {
  const auto pairs = alternating_pairs(s, w);
  const long dbound = displacement_bound(s, w);

  // Half-line data must live on the window grid.
  if (s.kind() == Kind::half_line)
    for (const Letter& l : w.letters)
      if (win.denom() % l.base.rat().get_den() != 0)
        throw Error("word base not representable on the window grid");

  Window enlarged(s, win.bound() + dbound, win.denom());
  std::vector<GroupElem> found;
  for (const GroupElem& r : enlarged.elements()) {
    if (!s.in_semigroup(r)) continue;
    GroupElem x = r;
    bool ok = true;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      x = s.multiply(s.multiply(s.inverse(it->first), it->second), x);
      if (!s.in_semigroup(x)) {
        ok = false;
        break;
      }
    }
    if (ok && win.contains(x)) found.push_back(x);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

namespace {

// Smallest box that decides equality of unions of the given ideals: any
// point of a symmetric difference shows up at coordinates no larger than
// the data of the canonical forms (basepoints, offsets plus conductor).
long decisive_bound(const Semigroup& s, const std::vector<const GIdeal*>& xs,
                    long base_bound) {
  Int m = base_bound;
  for (const GIdeal* x : xs) {
    if (x->is_empty()) continue;
    switch (s.kind()) {
      case Kind::lattice:
        for (const Int& b : x->base()) m = std::max(m, b);
        break;
      case Kind::numerical:
        m = std::max(m, Int(x->offset() + s.conductor()));
        break;
      case Kind::half_line:
        break;  // handled exactly, no window needed
    }
  }
  return to_long(m);
}

}  // namespace

bool independence_check(const Semigroup& s, const GIdeal& x,
                        const std::vector<GIdeal>& family, const Window& win) {
  if (x.is_empty()) return true;
  for (const GIdeal& y : family)
    if (y == x) return true;  // trivially not a violation

  if (s.kind() == Kind::half_line) {
    // Union of closed half-lines is the half-line of the minimal endpoint.
    bool any = false;
    Rat tmin;
    for (const GIdeal& y : family) {
      if (y.is_empty()) continue;
      if (!any || y.t() < tmin) tmin = y.t();
      any = true;
    }
    const bool covered = any && tmin == x.t();
    return !covered;
  }

  std::vector<const GIdeal*> all{&x};
  for (const GIdeal& y : family) all.push_back(&y);
  Window w(s, decisive_bound(s, all, win.bound()));
  for (const GroupElem& g : w.elements()) {
    bool in_x = member(s, g, x);
    bool in_union = false;
    for (const GIdeal& y : family)
      if (member(s, g, y)) {
        in_union = true;
        break;
      }
    if (in_x != in_union) return true;  // not a cover at all
  }
  return false;  // covered by the union yet equal to no member: violation
}

}  // namespace qsg
