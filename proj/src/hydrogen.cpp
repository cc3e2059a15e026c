#include "radmom/hydrogen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radmom/errors.hpp"
#include "radmom/parallel.hpp"
#include "radmom/units.hpp"
#include "radmom/ylm.hpp"

namespace radmom {

void validate(const HydrogenState& s) {
  if (s.n < 1 || s.l < 0 || s.l >= s.n || std::abs(s.m) > s.l || s.a0 <= 0.0)
    throw std::invalid_argument("invalid hydrogen quantum numbers");
  if (s.n > 3) throw unsupported_state("hydrogen radial table covers n <= 3 only");
}

double HydrogenState::radial(double r) const {
  validate(*this);
  if (r < 0.0) throw std::domain_error("radial: r >= 0 required");
  const double rho = r / a0;
  const double pref = std::pow(a0, -1.5);
  switch (n * 10 + l) {
    case 10: return 2.0 * pref * std::exp(-rho);
    case 20: return pref / (2.0 * std::sqrt(2.0)) * (2.0 - rho) * std::exp(-0.5 * rho);
    case 21: return pref / (2.0 * std::sqrt(6.0)) * rho * std::exp(-0.5 * rho);
    case 30:
      return 2.0 * pref / (81.0 * std::sqrt(3.0)) * (27.0 - 18.0 * rho + 2.0 * rho * rho) *
             std::exp(-rho / 3.0);
    case 31:
      return 4.0 * pref / (81.0 * std::sqrt(6.0)) * rho * (6.0 - rho) * std::exp(-rho / 3.0);
    case 32:
      return 4.0 * pref / (81.0 * std::sqrt(30.0)) * rho * rho * std::exp(-rho / 3.0);
  }
  throw unsupported_state("hydrogen radial table: no such (n, l)");
}

cplx psi_value(const HydrogenState& s, double r, double theta, double phi) {
  return s.radial(r) * eval_ylm({s.l, s.m}, theta, phi);
}

RadialGrid state_radial_grid(const HydrogenState& s, std::size_t n_nodes) {
  validate(s);
  // R_nl^2 decays like e^{-2r/(n a0)}
  return make_radial_grid(n_nodes, 0.5 * double(s.n) * s.a0);
}

double expectation_inverse_r(const HydrogenState& s) {
  const RadialGrid grid = state_radial_grid(s);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double rr = s.radial(grid.nodes[i]);
    acc += grid.weights[i] * rr * rr * grid.nodes[i];
  }
  return acc;
}

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

} // namespace

double MomentumTransform::raw(double p) const {
  const auto integrand = [&](double r) {
    return state_.radial(r) * sinc(p * r / hbar) * r * r;
  };
  if (p * r_cap_ / hbar <= double(laguerre_.nodes.size())) {
    // unoscillatory regime: mapped Gauss-Laguerre
    const double scale = 0.5 * double(state_.n) * state_.a0;
    double acc = 0.0;
    for (std::size_t i = 0; i < laguerre_.nodes.size(); ++i) {
      const double t = laguerre_.nodes[i];
      acc += scale * laguerre_.weights[i] * std::exp(t) * integrand(scale * t);
    }
    return acc;
  }
  // oscillatory regime: half-period panels over [0, r_cap]
  const std::size_t n_panels =
      std::max<std::size_t>(32, std::size_t(std::ceil(p * r_cap_ / (hbar * std::numbers::pi))));
  const double h = r_cap_ / double(n_panels);
  double acc = 0.0;
  for (std::size_t k = 0; k < n_panels; ++k) {
    const double mid = (double(k) + 0.5) * h;
    for (std::size_t j = 0; j < unit_rule_.nodes.size(); ++j)
      acc += 0.5 * h * unit_rule_.weights[j] * integrand(mid + 0.5 * h * unit_rule_.nodes[j]);
  }
  return acc;
}

MomentumTransform::MomentumTransform(const HydrogenState& s)
    : state_(s),
      unit_rule_(gauss_legendre(16)),
      laguerre_(gauss_laguerre(64)) {
  validate(s);
  if (s.l != 0)
    throw unsupported_state("momentum transform implemented for isotropic (l = 0) states");
  const double b = hbar / s.a0;
  r_cap_ = 40.0 * double(s.n) * s.a0;
  s_max_ = 150.0 * b;

  // fixed momentum panels: dense where the density lives, coarse in the tail
  std::vector<double> edges;
  for (double e = 0.0; e < 30.0 * b - 1e-12; e += 0.25 * b) edges.push_back(e);
  for (double e = 30.0 * b; e < s_max_ - 1e-12; e += 2.5 * b) edges.push_back(e);
  edges.push_back(s_max_);

  panels_.resize(edges.size() - 1);
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    Panel& panel = panels_[k];
    panel.lo = edges[k];
    panel.hi = edges[k + 1];
    const double mid = 0.5 * (panel.lo + panel.hi), half = 0.5 * (panel.hi - panel.lo);
    panel.nodes.resize(unit_rule_.nodes.size());
    panel.weights.resize(unit_rule_.nodes.size());
    panel.g.resize(unit_rule_.nodes.size());
    for (std::size_t j = 0; j < unit_rule_.nodes.size(); ++j) {
      panel.nodes[j] = mid + half * unit_rule_.nodes[j];
      panel.weights[j] = half * unit_rule_.weights[j];
    }
  }

  // one pass computes the raw transform at every cached node
  parallel_for(panels_.size(), [&](std::size_t k) {
    Panel& panel = panels_[k];
    for (std::size_t j = 0; j < panel.nodes.size(); ++j) panel.g[j] = raw(panel.nodes[j]);
  });

  double total = 0.0;
  for (const Panel& panel : panels_)
    for (std::size_t j = 0; j < panel.nodes.size(); ++j) {
      const double p = panel.nodes[j];
      total += panel.weights[j] * panel.g[j] * panel.g[j] * 4.0 * std::numbers::pi * p * p;
    }
  norm_ = 1.0 / std::sqrt(total);

  for (Panel& panel : panels_)
    for (std::size_t j = 0; j < panel.nodes.size(); ++j) {
      const double c = norm_ * panel.g[j];
      panel.g[j] = 2.0 * std::numbers::pi * c * c * panel.nodes[j];
    }
}

double MomentumTransform::amplitude(double p) const {
  if (p < 0.0) throw std::domain_error("amplitude: p >= 0 required");
  return norm_ * raw(p);
}

double MomentumTransform::marginal(double pz) const {
  // integral |c|^2 dpx dpy = 2 pi integral_{|pz|}^inf |c(s)|^2 s ds
  const double a = std::abs(pz);
  const auto g_of = [&](double sp) {
    const double c = amplitude(sp);
    return 2.0 * std::numbers::pi * c * c * sp;
  };
  if (a >= s_max_) {
    // beyond the cached support: direct panels over one more decade
    double acc = 0.0;
    const std::size_t np = 64;
    const double width = a; // integrate [a, 2a]; the integrand decays like s^-7
    const double h = width / double(np);
    for (std::size_t k = 0; k < np; ++k) {
      const double mid = a + (double(k) + 0.5) * h;
      for (std::size_t j = 0; j < unit_rule_.nodes.size(); ++j)
        acc += 0.5 * h * unit_rule_.weights[j] * g_of(mid + 0.5 * h * unit_rule_.nodes[j]);
    }
    return acc;
  }
  double acc = 0.0;
  for (const Panel& panel : panels_) {
    if (panel.hi <= a) continue;
    if (panel.lo >= a) {
      for (std::size_t j = 0; j < panel.g.size(); ++j) acc += panel.weights[j] * panel.g[j];
    } else {
      // partial panel [a, panel.hi], evaluated fresh
      const double mid = 0.5 * (a + panel.hi), half = 0.5 * (panel.hi - a);
      for (std::size_t j = 0; j < unit_rule_.nodes.size(); ++j)
        acc += half * unit_rule_.weights[j] * g_of(mid + half * unit_rule_.nodes[j]);
    }
  }
  return acc;
}

DistributionCurve MomentumTransform::marginal_curve(const std::vector<double>& pz_grid) const {
  DistributionCurve curve;
  curve.abscissa = pz_grid;
  curve.values.resize(pz_grid.size());
  curve.kind = CurveKind::density;
  parallel_for(pz_grid.size(), [&](std::size_t i) { curve.values[i] = marginal(pz_grid[i]); });
  curve.quadrature_sum = curve.trapezoid();
  return curve;
}

} // namespace radmom
