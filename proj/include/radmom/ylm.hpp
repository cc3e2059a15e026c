#pragma once

#include <complex>
#include <vector>

#include "radmom/basis.hpp"
#include "radmom/quadrature.hpp"

namespace radmom {

using cplx = std::complex<double>;

// Orthonormal spherical harmonic with Condon-Shortley phase.
cplx eval_ylm(BasisIndex idx, double theta, double phi);

// d/dtheta of Y_lm, from m*cot(theta)*Y_lm + sqrt((l-m)(l+m+1)) e^{-i phi} Y_{l,m+1}.
// Requires theta away from the poles.
cplx eval_ylm_dtheta(BasisIndex idx, double theta, double phi);

// Normalized Legendre function: Y_l0(theta) = legendre_norm_l0(l, cos(theta)).
double legendre_norm_l0(int l, double x);

// Values (and theta-derivatives) of every Y_lm with l <= l_max sampled on an
// angular quadrature grid.  Row = node (itheta * n_phi + iphi), column = flat
// basis index.
struct YlmTable {
  BasisTruncation basis;
  std::size_t n_nodes = 0;
  std::vector<cplx> values;  // n_nodes x dim
  std::vector<cplx> dtheta;  // n_nodes x dim

  const cplx* row(std::size_t a) const { return values.data() + a * basis.dimension(); }
  const cplx* drow(std::size_t a) const { return dtheta.data() + a * basis.dimension(); }
};

YlmTable build_ylm_table(BasisTruncation basis, const AngularQuadrature& q);

// Weighted inner product of two functions sampled on q's node grid;
// conjugate-linear in the first argument.
cplx inner_product(const std::vector<cplx>& f, const std::vector<cplx>& g,
                   const AngularQuadrature& q);

} // namespace radmom
