#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "radmom/kernels.hpp"

using radmom::kernels::cplx;
namespace k = radmom::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

std::vector<double> random_weights(std::size_t n, std::mt19937& rng) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

void naive_cgemm(std::size_t m, std::size_t kk, std::size_t n, const cplx* a, const cplx* b,
                 cplx* c) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s{};
      for (std::size_t p = 0; p < kk; ++p) s += a[i * kk + p] * b[p * n + j];
      c[i * n + j] = s;
    }
}

} // namespace

TEST_CASE("scalar cgemm matches a naive triple loop") {
  std::mt19937 rng(7);
  for (const auto [m, kk, n] : {std::array<std::size_t, 3>{1, 1, 1}, {3, 5, 2}, {8, 8, 8},
                                {7, 13, 9}, {16, 33, 16}}) {
    const auto a = random_vec(m * kk, rng), b = random_vec(kk * n, rng);
    std::vector<cplx> c1(m * n), c2(m * n);
    k::force(k::Isa::scalar);
    k::cgemm(m, kk, n, a.data(), b.data(), c1.data());
    naive_cgemm(m, kk, n, a.data(), b.data(), c2.data());
    for (std::size_t i = 0; i < m * n; ++i) CHECK(std::abs(c1[i] - c2[i]) < 1e-13);
  }
}

TEST_CASE("scalar reductions match direct sums") {
  std::mt19937 rng(11);
  const std::size_t n = 97;
  const auto f = random_vec(n, rng), g = random_vec(n, rng);
  const auto w = random_weights(n, rng);
  k::force(k::Isa::scalar);
  cplx dot{}, sum{};
  for (std::size_t i = 0; i < n; ++i) {
    dot += std::conj(f[i]) * g[i] * w[i];
    sum += f[i] * w[i];
  }
  CHECK(std::abs(k::zdotc_weighted(n, f.data(), g.data(), w.data()) - dot) < 1e-13);
  CHECK(std::abs(k::zsum_weighted(n, f.data(), w.data()) - sum) < 1e-13);
}

TEST_CASE("avx2 kernels agree with scalar reference") {
  if (!k::available(k::Isa::avx2)) {
    MESSAGE("avx2 unavailable on this host; equivalence not exercised");
    return;
  }
  std::mt19937 rng(23);
  for (const auto [m, kk, n] :
       {std::array<std::size_t, 3>{1, 1, 1}, {2, 3, 4}, {8, 8, 8}, {21, 17, 21}, {441, 441, 7}}) {
    const auto a = random_vec(m * kk, rng), b = random_vec(kk * n, rng);
    std::vector<cplx> cs(m * n), cv(m * n);
    k::force(k::Isa::scalar);
    k::cgemm(m, kk, n, a.data(), b.data(), cs.data());
    k::force(k::Isa::avx2);
    k::cgemm(m, kk, n, a.data(), b.data(), cv.data());
    for (std::size_t i = 0; i < m * n; ++i) CHECK(std::abs(cs[i] - cv[i]) < 1e-12 * double(kk));
  }
  for (const std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 31u, 64u, 1001u}) {
    const auto f = random_vec(n, rng), g = random_vec(n, rng);
    const auto w = random_weights(n, rng);
    k::force(k::Isa::scalar);
    const cplx d1 = k::zdotc_weighted(n, f.data(), g.data(), w.data());
    const cplx s1 = k::zsum_weighted(n, f.data(), w.data());
    k::force(k::Isa::avx2);
    const cplx d2 = k::zdotc_weighted(n, f.data(), g.data(), w.data());
    const cplx s2 = k::zsum_weighted(n, f.data(), w.data());
    CHECK(std::abs(d1 - d2) < 1e-12);
    CHECK(std::abs(s1 - s2) < 1e-12);
  }
  k::force(k::Isa::scalar);
}

TEST_CASE("forcing an unavailable isa throws") {
  if (k::available(k::Isa::avx2)) return;
  CHECK_THROWS_AS(k::force(k::Isa::avx2), std::invalid_argument);
}
