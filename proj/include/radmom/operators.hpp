#pragma once

#include "radmom/matrix.hpp"
#include "radmom/quadrature.hpp"
#include "radmom/ylm.hpp"

namespace radmom {

enum class Axis { x, y, z };
const char* axis_name(Axis axis);

// Exact ladder-operator construction; block-diagonal in l, hermitian.
OperatorMatrix build_angular_momentum(Axis axis, BasisTruncation basis);

// Matrix of the direction cosine x_i/r by quadrature projection; couples
// l' = l +- 1 only.  The z build is cross-checked against the cos(theta)
// recursion coefficients; a mismatch beyond 1e-10 raises accuracy_error.
OperatorMatrix build_direction_cosine(Axis axis, BasisTruncation basis,
                                      const AngularQuadrature& q);

// r*Pi_i from the cross-product construction L x e_r - i*hbar*e_r.
OperatorMatrix build_geometric_momentum(Axis axis, BasisTruncation basis,
                                        const AngularQuadrature& q);

// r*Pi_i by applying the differential operator to Y_lm analytically
// (theta-derivative recursion) and projecting by quadrature.  Independent of
// the cross-product route.
OperatorMatrix build_geometric_momentum_direct(Axis axis, BasisTruncation basis,
                                               const AngularQuadrature& q);

// ab - ba; contamination adds.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);

// exp(-i*angle*L_gen/hbar) * a * exp(+i*angle*L_gen/hbar), via exact
// eigendecomposition of the (block-diagonal) hermitian generator.
OperatorMatrix rotation_conjugate(Axis generator_axis, double angle,
                                  const OperatorMatrix& a);

// Eigenvalues of the interior-projected block of a hermitian operator, ascending.
std::vector<double> interior_eigenvalues(const OperatorMatrix& a);

} // namespace radmom
