#include "qsg/window.hpp"

namespace qsg {

Window::Window(const Semigroup& s, long bound, Int denom)
    : sg_(&s), bound_(bound), denom_(std::move(denom)) {
  if (bound < 0) throw Error("window bound must be >= 0");
  if (denom_ < 1) throw Error("window grid denominator must be >= 1");
  switch (s.kind()) {
    case Kind::lattice: {
      const int k = s.rank();
      std::vector<long> c(static_cast<size_t>(k), 0);
      while (true) {
        std::vector<Int> coords(c.begin(), c.end());
        elems_.emplace_back(std::move(coords));
        int i = k - 1;
        for (; i >= 0; --i) {
          if (c[static_cast<size_t>(i)] < bound) {
            ++c[static_cast<size_t>(i)];
            std::fill(c.begin() + i + 1, c.end(), 0);
            break;
          }
        }
        if (i < 0) break;
      }
      break;
    }
    case Kind::numerical: {
      for (long n = 0; n <= bound; ++n) {
        GroupElem g{Int(n)};
        if (s.in_semigroup(g)) elems_.push_back(g);
      }
      break;
    }
    case Kind::half_line: {
      long steps = to_long(Int(bound * denom_));
      for (long j = 0; j <= steps; ++j)
        elems_.emplace_back(Rat(Int(j), denom_));
      break;
    }
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
}

std::optional<std::size_t> Window::index_of(const GroupElem& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Window::in_core(const GroupElem& g, long radius) const {
  if (!contains(g)) return false;
  Int lim = Int(bound_) - radius;
  if (lim < 0) return false;
  switch (sg_->kind()) {
    case Kind::lattice:
      for (const Int& x : g.coords())
        if (x > lim) return false;
      return true;
    case Kind::numerical:
      return g.value() <= lim;
    case Kind::half_line:
      return g.rat() <= lim;
  }
  return false;
}

std::vector<std::size_t> Window::core_indices(long radius) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (in_core(elems_[i], radius)) out.push_back(i);
  return out;
}

}  // namespace qsg
