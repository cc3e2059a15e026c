#pragma once

#include <cstddef>
#include <vector>

namespace radmom {

// Uniform abscissa grid symmetric about 0 (always contains 0).
struct GammaGrid {
  std::vector<double> points;
  double spacing = 0.0;
  double half_range = 0.0;

  // n_points must be odd so the grid contains gamma = 0.
  static GammaGrid symmetric(double half_range, std::size_t n_points);
};

enum class CurveKind { density, signed_ };

struct DistributionCurve {
  std::vector<double> abscissa;
  std::vector<double> values;
  CurveKind kind = CurveKind::density;
  double quadrature_sum = 0.0; // trapezoid integral recorded at build time

  double trapezoid() const;
};

double trapezoid_integral(const std::vector<double>& x, const std::vector<double>& y);

} // namespace radmom
