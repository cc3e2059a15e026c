#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace radmom {

using cplx = std::complex<double>;
using Vec3c = std::array<cplx, 3>;

// Scalar test function with exact closed-form derivatives.  Everything is a
// function of the Cartesian point; the radial/angular pieces are independent
// closed forms, not derived numerically from one another.
struct TestField {
  std::string name;
  std::function<cplx(double, double, double)> value;
  std::function<Vec3c(double, double, double)> cart_gradient;
  std::function<cplx(double, double, double)> cart_laplacian;
  std::function<cplx(double, double, double)> radial_derivative;  // df/dr
  std::function<cplx(double, double, double)> radial_second;      // d2f/dr2
  std::function<cplx(double, double, double)> lsq;                // L^2 f / hbar^2
};

// The fixed corpus: constants, monomials, Gaussian-damped polynomials and
// Gaussian x low-l harmonic shapes.
const std::vector<TestField>& field_corpus();

struct SpherePoint {
  double r;
  double theta;
  double phi;

  std::array<double, 3> cartesian() const;
};

inline constexpr double pole_margin = 1e-3;

// Deterministic low-discrepancy sample over r in [0.1, 5], theta in
// [0.1, pi - 0.1], phi in [0, 2 pi).
std::vector<SpherePoint> sample_points(std::size_t count);

} // namespace radmom
