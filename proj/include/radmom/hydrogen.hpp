#pragma once

#include <complex>
#include <vector>

#include "radmom/curves.hpp"
#include "radmom/quadrature.hpp"

namespace radmom {

using cplx = std::complex<double>;

// Bound hydrogen state; the radial table covers n <= 3.
struct HydrogenState {
  int n = 1;
  int l = 0;
  int m = 0;
  double a0 = 1.0;

  // R_nl(r); throws unsupported_state for n > 3.
  double radial(double r) const;
  static HydrogenState ground(double a0 = 1.0) { return {1, 0, 0, a0}; }
};

void validate(const HydrogenState& s);

// R_nl(r) Y_lm(theta, phi)
cplx psi_value(const HydrogenState& s, double r, double theta, double phi);

// Radial grid matched to the state's exponential decay.
RadialGrid state_radial_grid(const HydrogenState& s, std::size_t n_nodes = 64);

// <1/r> = integral R_nl^2 r dr by quadrature.
double expectation_inverse_r(const HydrogenState& s);

// Numerical spherical momentum transform of an isotropic (l = 0) state,
// normalized so integral |c|^2 4 pi p^2 dp = 1.
class MomentumTransform {
public:
  explicit MomentumTransform(const HydrogenState& s);

  double amplitude(double p) const;           // normalized c(p)
  double marginal(double pz) const;           // integral |c|^2 dpx dpy at pz
  DistributionCurve marginal_curve(const std::vector<double>& pz_grid) const;
  double normalization_constant() const { return norm_; }
  double support_cutoff() const { return s_max_; }

private:
  double raw(double p) const; // integral R(r) j0(p r / hbar) r^2 dr

  HydrogenState state_;
  double r_cap_;  // radial truncation
  double s_max_;  // momentum support cutoff for cached panels
  double norm_;
  // fixed momentum panels with cached |c|^2 * s values for the marginal
  struct Panel {
    double lo, hi;
    std::vector<double> nodes, weights, g; // g = 2 pi |c(s)|^2 s
  };
  std::vector<Panel> panels_;
  GaussLegendre unit_rule_; // 16-point rule on [-1, 1]
  GaussLaguerre laguerre_;  // 64-point rule for the unoscillatory regime
};

} // namespace radmom
