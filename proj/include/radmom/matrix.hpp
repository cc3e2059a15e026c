#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "radmom/basis.hpp"

namespace radmom {

using cplx = std::complex<double>;

// Dense row-major complex matrix; products go through the kernel layer.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
  cplx* data() { return d_.data(); }
  const cplx* data() const { return d_.data(); }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(cplx alpha) const;
  ComplexMatrix adjoint() const;
  ComplexMatrix top_left(std::size_t n) const;

  double frobenius_norm() const;
  double max_abs() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> d_;
};

// Operator on the truncated spherical-harmonic basis.  contaminated_shells
// counts the top l-values whose rows/columns carry truncation error; algebra
// assertions run on the interior block only.
struct OperatorMatrix {
  ComplexMatrix data;
  BasisTruncation basis;
  std::string name;
  bool hermitian = false;
  int contaminated_shells = 0;

  int interior_lmax() const { return basis.l_max - contaminated_shells; }
  std::size_t interior_dim() const {
    const int li = interior_lmax();
    return li < 0 ? 0 : std::size_t(li + 1) * std::size_t(li + 1);
  }
  ComplexMatrix interior() const { return data.top_left(interior_dim()); }
};

} // namespace radmom
