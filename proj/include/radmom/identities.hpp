#pragma once

#include "radmom/fields.hpp"

namespace radmom {

enum class PThetaVariant { cot_half, tan };

// Gradient in spherical form, assembled from the chain rule and returned in
// Cartesian components.
Vec3c spherical_gradient(const TestField& f, const SpherePoint& p);

// || grad_sp f - [ e_r (d_r + 1/r) f + grad_tran f ] ||
double decomposition_residual(const TestField& f, const SpherePoint& p);

// || -i hbar grad_sp f - [ {e_r,P_r} + (1/r){e_th,P_th} + (1/(r sin)){e_ph,P_ph} ] f ||
// with P_theta = -i hbar (d_theta + c), c = cot(theta)/2 or tan(theta).
double symmetrized_decomposition_residual(const TestField& f, const SpherePoint& p,
                                          PThetaVariant variant);

// | P_r^2 f - ( -hbar^2 lap f - L^2 f / r^2 ) |, both sides from exact forms.
double pr_squared_residual(const TestField& f, const SpherePoint& p);

// e_r . (grad_tran f) + grad_tran . (e_r f); vanishes identically.
double transversality_residual(const TestField& f, const SpherePoint& p);

// || -i hbar grad_cart f - Pi f - e_r P_r f ||, each term independent.
double split_closure_residual(const TestField& f, const SpherePoint& p);

// Pointwise eigenfunction check for r*Pi_z at dimensionless eigenvalue gamma:
// max over samples of |i hbar (sin d_theta + cos) u - gamma hbar u| / |u|.
double rpi_z_eigenfunction_residual(double gamma, const std::vector<double>& theta_samples);

} // namespace radmom
