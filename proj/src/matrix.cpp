#include "radmom/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "radmom/kernels.hpp"

namespace radmom {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  kernels::cgemm(rows_, cols_, rhs.cols_, data(), rhs.data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] += rhs.d_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  ComplexMatrix out = *this;
  for (std::size_t i = 0; i < d_.size(); ++i) out.d_[i] -= rhs.d_[i];
  return out;
}

ComplexMatrix ComplexMatrix::scaled(cplx alpha) const {
  ComplexMatrix out = *this;
  for (auto& v : out.d_) v *= alpha;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::top_left(std::size_t n) const {
  if (n > rows_ || n > cols_) throw std::invalid_argument("top_left: block too large");
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(i, j);
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : d_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& v : d_) s = std::max(s, std::abs(v));
  return s;
}

} // namespace radmom
