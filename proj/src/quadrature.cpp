#include "radmom/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radmom {

GaussLegendre gauss_legendre(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * double(j) + 1.0) * x * p1 - double(j) * p2) / (double(j) + 1.0);
      }
      // p0 = P_n(x), p1 = P_{n-1}(x)
      pp = double(n) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one more refinement pass keeps the node at full precision
        if (std::abs(dx) == 0.0) break;
      }
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

// Laguerre L_k(x) for k = n and n+1 by upward recursion.
void laguerre_pair(std::size_t n, double x, double& ln, double& lnm1, double& lnp1) {
  double p0 = 1.0, p1 = 0.0; // L_0, L_{-1}
  for (std::size_t k = 0; k < n; ++k) {
    const double p2 = p1;
    p1 = p0;
    p0 = ((2.0 * double(k) + 1.0 - x) * p1 - double(k) * p2) / (double(k) + 1.0);
  }
  ln = p0;
  lnm1 = p1;
  lnp1 = ((2.0 * double(n) + 1.0 - x) * p0 - double(n) * p1) / (double(n) + 1.0);
}

} // namespace

GaussLaguerre gauss_laguerre(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1 required");
  GaussLaguerre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * double(n));
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * double(n));
    } else {
      const double ai = double(i) - 1.0;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
    }
    double ln = 0.0, lnm1 = 0.0, lnp1 = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      laguerre_pair(n, z, ln, lnm1, lnp1);
      const double lp = double(n) * (ln - lnm1) / z; // L_n'(z)
      const double dz = ln / lp;
      z -= dz;
      if (std::abs(dz) < 1e-14 * std::max(1.0, z)) break;
    }
    laguerre_pair(n, z, ln, lnm1, lnp1);
    rule.nodes[i] = z;
    const double np1 = double(n) + 1.0;
    rule.weights[i] = z / (np1 * np1 * lnp1 * lnp1);
  }
  return rule;
}

double AngularQuadrature::phi_node(std::size_t iphi) const {
  return 2.0 * std::numbers::pi * double(iphi) / double(n_phi);
}

double AngularQuadrature::phi_weight() const {
  return 2.0 * std::numbers::pi / double(n_phi);
}

double AngularQuadrature::node_weight(std::size_t a) const {
  return theta_weights[a / n_phi] * phi_weight();
}

AngularQuadrature build_quadrature(std::size_t n_theta, std::size_t n_phi) {
  if (n_theta < 2 || n_phi < 2)
    throw std::invalid_argument("build_quadrature: n_theta >= 2 and n_phi >= 2 required");
  const GaussLegendre gl = gauss_legendre(n_theta);
  AngularQuadrature q;
  q.n_phi = n_phi;
  q.theta_nodes.resize(n_theta);
  q.theta_weights.resize(n_theta);
  // cos(theta) descending in x gives theta ascending
  for (std::size_t i = 0; i < n_theta; ++i) {
    q.theta_nodes[i] = std::acos(gl.nodes[n_theta - 1 - i]);
    q.theta_weights[i] = gl.weights[n_theta - 1 - i];
  }
  return q;
}

RadialGrid make_radial_grid(std::size_t n, double scale) {
  if (scale <= 0.0) throw std::invalid_argument("make_radial_grid: scale > 0 required");
  const GaussLaguerre la = gauss_laguerre(n);
  RadialGrid grid;
  grid.scale = scale;
  grid.nodes.resize(n);
  grid.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid.nodes[i] = scale * la.nodes[i];
    grid.weights[i] = scale * la.weights[i] * std::exp(la.nodes[i]);
  }
  return grid;
}

} // namespace radmom
