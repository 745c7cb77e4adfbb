#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsg {

using Int = mpz_class;
using Rat = mpq_class;

/// Error thrown on violated preconditions (membership, malformed input).
/// The CLI maps these to its exit-code contract.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing values from different instances; reported separately by the CLI.
class InstanceMismatchError : public Error {
 public:
  explicit InstanceMismatchError(const std::string& what) : Error(what) {}
};

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error("integer out of range: " + v.get_str());
  return v.get_si();
}

/// Gaussian rational a + bi with exact rational parts. Coefficient field of
/// the monomial algebra; all equality tests on elements reduce to exact
/// comparisons of these.
struct QQi {
  Rat re{0};
  Rat im{0};

  QQi() = default;
  QQi(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit QQi(long r) : re(r), im(0) {}

  static QQi zero() { return QQi{}; }
  static QQi one() { return QQi{1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  QQi conj() const { return {re, -im}; }

  QQi operator+(const QQi& o) const { return {re + o.re, im + o.im}; }
  QQi operator-(const QQi& o) const { return {re - o.re, im - o.im}; }
  QQi operator-() const { return {-re, -im}; }
  QQi operator*(const QQi& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QQi& operator+=(const QQi& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool operator==(const QQi& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QQi& o) const { return !(*this == o); }

  double re_double() const { return re.get_d(); }
  double im_double() const { return im.get_d(); }
};

inline std::string to_string(const QQi& c) {
  return c.re.get_str() + (sgn(c.im) < 0 ? "" : "+") + c.im.get_str() + "i";
}

}  // namespace qsg
