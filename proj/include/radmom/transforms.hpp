#pragma once

#include <complex>

#include "radmom/curves.hpp"
#include "radmom/hydrogen.hpp"

namespace radmom {

// Closed form (1/2) sqrt(pi) sech(pi gamma / 2).
double q00_analytic(double gamma);

// Expansion coefficient of Y_l0 in the continuum eigenbasis of r*Pi_z,
// by trapezoid quadrature after the u = ln tan(theta/2) substitution,
// scaled so integral |q|^2 dgamma = 1 for every l.
cplx q_coeff(int l, double gamma);

// The same integral before the fixed normalization convention is applied.
cplx q_coeff_raw(int l, double gamma);

// q_coeff_raw / q_coeff = sqrt(2 pi); exposed for audit.
double raw_to_normalized_ratio();

// Density of the z-component of the transverse momentum for the ground state:
// |Q_00(gamma)|^2 * a0 * <1/r> per unit hbar dgamma.
DistributionCurve pi_z_density(const HydrogenState& s, const GammaGrid& grid);

// gamma * [ (8/3pi)(1+gamma^2)^-3 - (pi/4) sech^2(pi gamma/2) ] in natural units.
DistributionCurve combined_z_distribution(const GammaGrid& grid);

// |Q_l0(gamma)|^2 on the grid for the state's l (m = 0 sector only).
DistributionCurve expand_state_in_gamma(const HydrogenState& s, const GammaGrid& grid);

} // namespace radmom
