#pragma once

#include <cstddef>
#include <vector>

namespace radmom {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(std::size_t n);

// Gauss-Laguerre rule: sum w_i f(x_i) ~ integral_0^inf e^{-x} f(x) dx.
struct GaussLaguerre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLaguerre gauss_laguerre(std::size_t n);

// Product rule on the sphere: Gauss-Legendre in cos(theta), uniform in phi.
// Node ordering for sampled functions: index = itheta * n_phi + iphi.
struct AngularQuadrature {
  std::vector<double> theta_nodes;   // interior angles in (0, pi), ascending
  std::vector<double> theta_weights; // sum = 2
  std::size_t n_phi = 0;

  std::size_t n_theta() const { return theta_nodes.size(); }
  std::size_t n_nodes() const { return theta_nodes.size() * n_phi; }
  double phi_node(std::size_t iphi) const;
  double phi_weight() const; // 2*pi / n_phi
  // Combined weight of node index a = itheta * n_phi + iphi.
  double node_weight(std::size_t a) const;
};

AngularQuadrature build_quadrature(std::size_t n_theta, std::size_t n_phi);

// Nodes/weights for semi-infinite radial integrals with measure dr:
// sum W_i h(r_i) ~ integral_0^inf h(r) dr, exact for h = e^{-r/scale} * poly.
struct RadialGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double scale = 1.0;
};
RadialGrid make_radial_grid(std::size_t n, double scale);

} // namespace radmom
