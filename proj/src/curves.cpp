#include "radmom/curves.hpp"

#include <stdexcept>

namespace radmom {

GammaGrid GammaGrid::symmetric(double half_range, std::size_t n_points) {
  if (half_range <= 0.0) throw std::invalid_argument("gamma grid: half_range > 0 required");
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("gamma grid: odd point count >= 3 required (grid must contain 0)");
  GammaGrid g;
  g.half_range = half_range;
  const std::size_t half = n_points / 2;
  g.spacing = half_range / double(half);
  g.points.resize(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    g.points[i] = g.spacing * (double(i) - double(half));
  g.points[half] = 0.0;
  return g;
}

double trapezoid_integral(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("trapezoid: need matching arrays with >= 2 points");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    s += 0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return s;
}

double DistributionCurve::trapezoid() const { return trapezoid_integral(abscissa, values); }

} // namespace radmom
