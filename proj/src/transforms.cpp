#include "radmom/transforms.hpp"

#include <cmath>
#include <numbers>

#include "radmom/errors.hpp"
#include "radmom/parallel.hpp"
#include "radmom/ylm.hpp"

namespace radmom {

namespace {

constexpr double u_cutoff = 40.0; // integrand decays like e^{-|u|}
constexpr int l_resolution_cap = 64;

} // namespace

double q00_analytic(double gamma) {
  return 0.5 * std::sqrt(std::numbers::pi) / std::cosh(0.5 * std::numbers::pi * gamma);
}

double raw_to_normalized_ratio() { return std::sqrt(2.0 * std::numbers::pi); }

cplx q_coeff(int l, double gamma) {
  if (l < 0) throw std::invalid_argument("q_coeff: l >= 0 required");
  if (l > l_resolution_cap)
    throw accuracy_error("q_coeff: l too large for the fixed quadrature resolution");
  // u = ln tan(theta/2): sin(theta) = sech(u), cos(theta) = -tanh(u);
  // integrand Y_l0(theta(u)) sech(u) e^{i gamma u} on |u| <= 40
  const double h = std::min(0.05, std::numbers::pi / (8.0 * std::abs(gamma) + 1.0));
  const std::size_t n = std::size_t(std::ceil(2.0 * u_cutoff / h));
  const double step = 2.0 * u_cutoff / double(n);
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double u = -u_cutoff + step * double(j);
    const double sech = 1.0 / std::cosh(u);
    const double ylm = legendre_norm_l0(l, -std::tanh(u));
    const double amp = ylm * sech * ((j == 0 || j == n) ? 0.5 : 1.0);
    re += amp * std::cos(gamma * u);
    im += amp * std::sin(gamma * u);
  }
  return cplx{re, im} * step;
}

cplx q_coeff_raw(int l, double gamma) { return raw_to_normalized_ratio() * q_coeff(l, gamma); }

DistributionCurve pi_z_density(const HydrogenState& s, const GammaGrid& grid) {
  validate(s);
  if (s.n != 1 || s.l != 0 || s.m != 0)
    throw unsupported_state("pi_z_density: ground state only");
  const double scale = s.a0 * expectation_inverse_r(s); // = 1 in natural units
  DistributionCurve curve;
  curve.abscissa = grid.points;
  curve.values.resize(grid.points.size());
  curve.kind = CurveKind::density;
  parallel_for(grid.points.size(), [&](std::size_t i) {
    curve.values[i] = std::norm(q_coeff(0, grid.points[i])) * scale;
  });
  curve.quadrature_sum = curve.trapezoid();
  return curve;
}

DistributionCurve combined_z_distribution(const GammaGrid& grid) {
  DistributionCurve curve;
  curve.abscissa = grid.points;
  curve.values.resize(grid.points.size());
  curve.kind = CurveKind::signed_;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const double g = grid.points[i];
    const double total = 8.0 / (3.0 * std::numbers::pi) / std::pow(1.0 + g * g, 3);
    const double sech = 1.0 / std::cosh(0.5 * std::numbers::pi * g);
    const double transverse = 0.25 * std::numbers::pi * sech * sech;
    curve.values[i] = g * (total - transverse);
  }
  curve.quadrature_sum = curve.trapezoid();
  return curve;
}

DistributionCurve expand_state_in_gamma(const HydrogenState& s, const GammaGrid& grid) {
  validate(s);
  if (s.m != 0)
    throw unsupported_state("gamma expansion implemented for the m = 0 sector only");
  DistributionCurve curve;
  curve.abscissa = grid.points;
  curve.values.resize(grid.points.size());
  curve.kind = CurveKind::density;
  parallel_for(grid.points.size(), [&](std::size_t i) {
    curve.values[i] = std::norm(q_coeff(s.l, grid.points[i]));
  });
  curve.quadrature_sum = curve.trapezoid();
  return curve;
}

} // namespace radmom
