#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radmom/errors.hpp"
#include "radmom/transforms.hpp"

using namespace radmom;
using std::numbers::pi;

TEST_CASE("q00 matches the closed form over the working range") {
  for (int i = -100; i <= 100; ++i) {
    const double g = 0.1 * double(i);
    const double closed = q00_analytic(g);
    CHECK(std::abs(q_coeff(0, g) - closed) < 1e-8 * closed);
  }
  CHECK(std::abs(q00_analytic(0.0) - 0.5 * std::sqrt(pi)) < 1e-15);
}

TEST_CASE("raw and normalized coefficients differ by sqrt(2 pi)") {
  CHECK(std::abs(raw_to_normalized_ratio() - std::sqrt(2.0 * pi)) < 1e-15);
  for (const double g : {0.0, 0.8, -2.3}) {
    const cplx raw = q_coeff_raw(0, g), norm = q_coeff(0, g);
    CHECK(std::abs(raw / norm - std::sqrt(2.0 * pi)) < 1e-12);
  }
}

TEST_CASE("parity: odd-l coefficients vanish at gamma = 0") {
  CHECK(std::abs(q_coeff(1, 0.0)) < 1e-14);
  CHECK(std::abs(q_coeff(3, 0.0)) < 1e-14);
}

TEST_CASE("parseval holds for the first few l") {
  const GammaGrid grid = GammaGrid::symmetric(20.0, 4001);
  for (int l = 0; l <= 2; ++l) {
    const DistributionCurve c = expand_state_in_gamma({l + 1, l, 0, 1.0}, grid);
    CHECK(std::abs(c.trapezoid() - 1.0) < 1e-6);
  }
}

TEST_CASE("pi_z density peaks at pi/4 and carries the 1/r scale") {
  const GammaGrid grid = GammaGrid::symmetric(8.0, 1601);
  const DistributionCurve c = pi_z_density(HydrogenState::ground(), grid);
  CHECK(std::abs(c.values[grid.points.size() / 2] - 0.25 * pi) < 1e-8);
  CHECK_THROWS_AS(pi_z_density(HydrogenState{2, 0, 0, 1.0}, grid), unsupported_state);
}

TEST_CASE("combined distribution is odd with zero mean on a symmetric grid") {
  const GammaGrid grid = GammaGrid::symmetric(6.0, 1201);
  const DistributionCurve c = combined_z_distribution(grid);
  const std::size_t n = grid.points.size();
  CHECK(c.values[n / 2] == 0.0);
  for (std::size_t i = 0; i < n; ++i) CHECK(c.values[i] == -c.values[n - 1 - i]);
  double sum = 0.0;
  for (const double v : c.values) sum += v;
  CHECK(std::abs(sum) < 1e-12);
}

TEST_CASE("the two densities cross twice on the positive axis") {
  // bracket(g) = pz density - Pi_z density at gamma = g
  const auto bracket = [](double g) {
    const double sech = 1.0 / std::cosh(0.5 * pi * g);
    return 8.0 / (3.0 * pi) / std::pow(1.0 + g * g, 3) - 0.25 * pi * sech * sech;
  };
  CHECK(bracket(0.0) > 0.0);
  CHECK(bracket(1.0) < 0.0);
  CHECK(bracket(3.0) > 0.0);
  // and the signed curve changes sign at exactly those two places
  const GammaGrid grid = GammaGrid::symmetric(6.0, 6001);
  const DistributionCurve c = combined_z_distribution(grid);
  std::vector<double> roots;
  for (std::size_t i = grid.points.size() / 2 + 1; i + 1 < grid.points.size(); ++i)
    if (c.values[i] * c.values[i + 1] < 0.0)
      roots.push_back(0.5 * (grid.points[i] + grid.points[i + 1]));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - 0.4113) < 0.01);
  CHECK(std::abs(roots[1] - 1.7650) < 0.01);
}

TEST_CASE("m != 0 expansion is rejected") {
  const GammaGrid grid = GammaGrid::symmetric(4.0, 401);
  CHECK_THROWS_AS(expand_state_in_gamma({2, 1, 1, 1.0}, grid), unsupported_state);
}

TEST_CASE("overly high l is an accuracy error") {
  CHECK_THROWS_AS(q_coeff(80, 0.0), accuracy_error);
}

TEST_CASE("gamma grid invariants") {
  const GammaGrid g = GammaGrid::symmetric(5.0, 11);
  CHECK(g.points.size() == 11);
  CHECK(g.points[5] == 0.0);
  CHECK(g.points.front() == -5.0);
  CHECK(g.points.back() == 5.0);
  CHECK_THROWS_AS(GammaGrid::symmetric(5.0, 10), std::invalid_argument);
}
