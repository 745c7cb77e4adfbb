#pragma once

#include <cstdint>
#include <random>

#include "qsg/element.hpp"

namespace qsg {

/// Deterministic sample source for property suites. All suites record the
/// seed in their report so a run can be replayed exactly.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

  /// Random element of S with coordinates bounded by `bound`; half-line
  /// values are multiples of 1/denom.
  GroupElem elem_in_s(const Semigroup& s, long bound, long denom = 4) {
    switch (s.kind()) {
      case Kind::lattice: {
        std::vector<Int> c;
        for (int i = 0; i < s.rank(); ++i) c.emplace_back(uniform(0, bound));
        return GroupElem(std::move(c));
      }
      case Kind::numerical: {
        for (;;) {
          GroupElem g{Int(uniform(0, bound))};
          if (s.in_semigroup(g)) return g;
        }
      }
      case Kind::half_line: {
        Rat r(uniform(0, bound * denom), denom);
        r.canonicalize();
        return GroupElem(r);
      }
    }
    throw Error("bad kind");
  }

  /// Random element of G (coordinates in [-bound, bound]).
  GroupElem group_elem(const Semigroup& s, long bound, long denom = 4) {
    switch (s.kind()) {
      case Kind::lattice: {
        std::vector<Int> c;
        for (int i = 0; i < s.rank(); ++i)
          c.emplace_back(uniform(-bound, bound));
        return GroupElem(std::move(c));
      }
      case Kind::numerical:
        return GroupElem(Int(uniform(-bound, bound)));
      case Kind::half_line: {
        Rat r(uniform(-bound * denom, bound * denom), denom);
        r.canonicalize();
        return GroupElem(r);
      }
    }
    throw Error("bad kind");
  }

  Word word(const Semigroup& s, std::size_t max_len, long base_bound,
            long denom = 4) {
    std::vector<Letter> ls;
    const std::size_t len =
        static_cast<std::size_t>(uniform(0, static_cast<long>(max_len)));
    for (std::size_t i = 0; i < len; ++i)
      ls.push_back(Letter{elem_in_s(s, base_bound, denom),
                          chance(0.5) ? 1 : -1});
    return make_word(s, std::move(ls));
  }

  /// Random constructible ideal: the action of a random word on S.
  GIdeal ideal(const Semigroup& s, std::size_t max_len, long base_bound,
               long denom = 4) {
    return act(s, word(s, max_len, base_bound, denom), full_ideal(s));
  }

  /// Random Gaussian rational with numerators/denominators up to `bound`.
  QQi coeff(long bound = 4) {
    Rat re(uniform(-bound, bound), uniform(1, bound));
    Rat im(uniform(-bound, bound), uniform(1, bound));
    re.canonicalize();
    im.canonicalize();
    return QQi{re, im};
  }

  QQi nonzero_coeff(long bound = 4) {
    for (;;) {
      QQi c = coeff(bound);
      if (!c.is_zero()) return c;
    }
  }

  Element element(const Semigroup& s, std::size_t max_terms,
                  std::size_t max_word_len, long base_bound, long denom = 4) {
    Element x;
    const long terms = uniform(1, static_cast<long>(max_terms));
    for (long i = 0; i < terms; ++i) {
      Element t = from_word(s, word(s, max_word_len, base_bound, denom));
      x = add(x, scale(coeff(), t));
    }
    return x;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qsg
