#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radmom/ylm.hpp"

using namespace radmom;
using std::numbers::pi;

namespace {
const double th = 1.234, ph = 0.777;
}

TEST_CASE("low-order harmonics match closed forms") {
  CHECK(std::abs(eval_ylm({0, 0}, th, ph) - 0.5 / std::sqrt(pi)) < 1e-15);
  CHECK(std::abs(eval_ylm({1, 0}, th, ph) -
                 std::sqrt(3.0 / (4.0 * pi)) * std::cos(th)) < 1e-15);
  const cplx y11 = -std::sqrt(3.0 / (8.0 * pi)) * std::sin(th) * std::polar(1.0, ph);
  CHECK(std::abs(eval_ylm({1, 1}, th, ph) - y11) < 1e-15);
  const cplx y22 = 0.25 * std::sqrt(15.0 / (2.0 * pi)) * std::sin(th) * std::sin(th) *
                   std::polar(1.0, 2.0 * ph);
  CHECK(std::abs(eval_ylm({2, 2}, th, ph) - y22) < 1e-14);
  CHECK(std::abs(eval_ylm({2, 0}, th, ph) -
                 std::sqrt(5.0 / (16.0 * pi)) * (3.0 * std::pow(std::cos(th), 2) - 1.0)) <
        1e-14);
}

TEST_CASE("negative m follows the conjugation rule") {
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= l; ++m) {
      const cplx lhs = eval_ylm({l, -m}, th, ph);
      const cplx rhs = (m % 2 ? -1.0 : 1.0) * std::conj(eval_ylm({l, m}, th, ph));
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
}

TEST_CASE("theta derivative matches central differences") {
  const double h = 1e-6;
  for (int l = 0; l <= 8; ++l)
    for (int m = -l; m <= l; ++m) {
      const cplx num =
          (eval_ylm({l, m}, th + h, ph) - eval_ylm({l, m}, th - h, ph)) / (2.0 * h);
      CHECK(std::abs(eval_ylm_dtheta({l, m}, th, ph) - num) < 1e-8);
    }
}

TEST_CASE("table inner products are orthonormal") {
  const BasisTruncation basis{8};
  const AngularQuadrature q = build_quadrature(9, 17);
  const YlmTable t = build_ylm_table(basis, q);
  std::vector<cplx> f(t.n_nodes), g(t.n_nodes);
  for (const BasisIndex a : {BasisIndex{3, -2}, {5, 0}, {8, 8}})
    for (const BasisIndex b : {BasisIndex{3, -2}, {4, -2}, {8, 8}}) {
      for (std::size_t i = 0; i < t.n_nodes; ++i) {
        f[i] = t.row(i)[a.flat()];
        g[i] = t.row(i)[b.flat()];
      }
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(std::abs(inner_product(f, g, q) - expected) < 1e-12);
    }
}

TEST_CASE("legendre_norm_l0 agrees with eval_ylm on the axis-symmetric sector") {
  for (int l = 0; l <= 20; ++l)
    CHECK(std::abs(legendre_norm_l0(l, std::cos(th)) - eval_ylm({l, 0}, th, 0.0).real()) <
          1e-13);
}

TEST_CASE("invalid basis index is rejected") {
  CHECK_THROWS_AS(eval_ylm({2, 3}, th, ph), std::invalid_argument);
}
