#include "qsg/matrices.hpp"

#include <random>

namespace qsg {

void RatMatrix::add(std::size_t r, std::size_t c, const QQi& v) {
  if (v.is_zero()) return;
  auto& row = data_[r];
  auto [it, fresh] = row.emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

QQi RatMatrix::get(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? QQi::zero() : it->second;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

RatMatrix RatMatrix::multiply(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  RatMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [k, a] : data_[i])
      for (const auto& [j, b] : o.data_[k]) out.add(i, j, a * b);
  return out;
}

RatMatrix RatMatrix::plus(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix dimension mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, b] : o.data_[i]) out.add(i, j, b);
  return out;
}

RatMatrix RatMatrix::scaled(const QQi& c) const {
  RatMatrix out(rows_, cols_);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out.add(i, j, c * v);
  return out;
}

RatMatrix RatMatrix::adjoint() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out.add(j, i, v.conj());
  return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RatMatrix::equal_on_columns(const RatMatrix& o,
                                 const std::vector<std::size_t>& cols) const {
  if (rows_ != o.rows_) return false;
  std::vector<bool> wanted(std::max(cols_, o.cols_), false);
  for (std::size_t c : cols) wanted[c] = true;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : data_[i])
      if (wanted[j] && o.get(i, j) != v) return false;
    for (const auto& [j, v] : o.data_[i])
      if (wanted[j] && get(i, j) != v) return false;
  }
  return true;
}

RatMatrix RatMatrix::kron(const RatMatrix& o) const {
  RatMatrix out(rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, a] : data_[i])
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (const auto& [l, b] : o.data_[k])
          out.add(i * o.rows_ + k, j * o.cols_ + l, a * b);
  return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.add(i, i, QQi::one());
  return out;
}

RatMatrix matrix_of_monomial(const Semigroup& s, const Monomial& m,
                             const Window& win) {
  RatMatrix out(win.size(), win.size());
  for (std::size_t c = 0; c < win.size(); ++c) {
    GroupElem b = s.multiply(m.g(), win[c]);
    if (!member(s, b, m.ideal())) continue;
    if (auto r = win.index_of(b)) out.add(*r, c, QQi::one());
  }
  return out;
}

RatMatrix matrix_of_element(const Semigroup& s, const Element& x,
                            const Window& win) {
  RatMatrix out(win.size(), win.size());
  for (const auto& [m, coeff] : x.terms()) {
    for (std::size_t c = 0; c < win.size(); ++c) {
      GroupElem b = s.multiply(m.g(), win[c]);
      if (!member(s, b, m.ideal())) continue;
      if (auto r = win.index_of(b)) out.add(*r, c, coeff);
    }
  }
  return out;
}

RatMatrix matrix_of_letter(const Semigroup& s, const Letter& l,
                           const Window& win) {
  RatMatrix out(win.size(), win.size());
  for (std::size_t c = 0; c < win.size(); ++c) {
    GroupElem b = l.exp == 1 ? s.multiply(l.base, win[c])
                             : s.multiply(s.inverse(l.base), win[c]);
    if (!s.in_semigroup(b)) continue;
    if (auto r = win.index_of(b)) out.add(*r, c, QQi::one());
  }
  return out;
}

SparseCd float_matrix_of_element(const Semigroup& s, const Element& x,
                                 const Window& win) {
  std::vector<Eigen::Triplet<std::complex<double>>> trips;
  for (const auto& [m, coeff] : x.terms()) {
    const std::complex<double> c(coeff.re_double(), coeff.im_double());
    for (std::size_t col = 0; col < win.size(); ++col) {
      GroupElem b = s.multiply(m.g(), win[col]);
      if (!member(s, b, m.ideal())) continue;
      if (auto r = win.index_of(b))
        trips.emplace_back(static_cast<int>(*r), static_cast<int>(col), c);
    }
  }
  SparseCd out(static_cast<int>(win.size()), static_cast<int>(win.size()));
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

double operator_norm(const SparseCd& m) {
  if (m.nonZeros() == 0) return 0.0;
  const int n = static_cast<int>(m.cols());

  std::mt19937 rng(0x5eed);  // fixed seed: reproducible reports
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = std::complex<double>(dist(rng), dist(rng));
  v.normalize();

  const double tol = 1e-9;
  const int max_iter = 10000;
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = m * v;
    double next = w.squaredNorm();  // Rayleigh quotient of M*M at v
    Eigen::VectorXcd u = m.adjoint() * w;
    double un = u.norm();
    if (un < 1e-300) return 0.0;
    v = u / un;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

long elem_radius(const Semigroup& s, const GroupElem& g) {
  switch (s.kind()) {
    case Kind::lattice: {
      Int m = 0;
      for (const Int& x : g.coords()) m = std::max(m, Int(abs(x)));
      return to_long(m);
    }
    case Kind::numerical:
      return to_long(Int(abs(g.value())));
    case Kind::half_line: {
      Rat r = abs(g.rat());
      return to_long(Int((r.get_num() + r.get_den() - 1) / r.get_den()));
    }
  }
  return 0;
}

long element_radius(const Semigroup& s, const Element& x) {
  long r = 0;
  for (const auto& [m, c] : x.terms()) r = std::max(r, elem_radius(s, m.g()));
  return r;
}

long word_radius(const Semigroup& s, const Word& w) {
  long r = 0;
  for (const Letter& l : w.letters) r += elem_radius(s, l.base);
  return r;
}

}  // namespace qsg
