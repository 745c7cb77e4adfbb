#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <map>
#include <vector>

#include "qsg/element.hpp"
#include "qsg/window.hpp"

namespace qsg {

/// Sparse matrix over the Gaussian rationals. Truncated operators are
/// partial permutations with few terms, so row maps stay tiny; keeping the
/// entries exact makes every truncation identity an equality check instead
/// of a tolerance test.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void add(std::size_t r, std::size_t c, const QQi& v);
  QQi get(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, QQi>& row(std::size_t r) const { return data_[r]; }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  RatMatrix multiply(const RatMatrix& o) const;
  RatMatrix plus(const RatMatrix& o) const;
  RatMatrix scaled(const QQi& c) const;
  /// Conjugate transpose.
  RatMatrix adjoint() const;

  bool operator==(const RatMatrix& o) const;

  /// Equality of the given columns (all rows).
  bool equal_on_columns(const RatMatrix& o,
                        const std::vector<std::size_t>& cols) const;

  /// Tensor (Kronecker) product; pair (i,j) is flattened as i*o.rows()+j.
  RatMatrix kron(const RatMatrix& o) const;

  static RatMatrix identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, QQi>> data_;
};

using SparseCd = Eigen::SparseMatrix<std::complex<double>>;

/// Entry (b, c) = coeff iff b = g.c and b in X, gathered over the terms of
/// the element; E_X terms are diagonal.
RatMatrix matrix_of_monomial(const Semigroup& s, const Monomial& m,
                             const Window& win);
RatMatrix matrix_of_element(const Semigroup& s, const Element& x,
                            const Window& win);

/// Generator matrices straight from the defining formulas
/// (T_a f)(b) = f(a^{-1}b) and (T_a^* f)(b) = I_S(b) f(ab), bypassing the
/// ideal calculus; the composed-product side of the truncation checks.
RatMatrix matrix_of_letter(const Semigroup& s, const Letter& l,
                           const Window& win);

SparseCd float_matrix_of_element(const Semigroup& s, const Element& x,
                                 const Window& win);

/// Largest singular value by power iteration on M*M, fixed seed,
/// tolerance 1e-9, at most 10^4 iterations.
double operator_norm(const SparseCd& m);

/// Magnitude of an element as a window displacement: max |coordinate|
/// (lattice), |g| (numerical), ceil|t| (half-line).
long elem_radius(const Semigroup& s, const GroupElem& g);
long element_radius(const Semigroup& s, const Element& x);
long word_radius(const Semigroup& s, const Word& w);

}  // namespace qsg
