#include "radmom/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace radmom::kernels {

namespace scalar_impl {

void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cplx* a, const cplx* b, cplx* c) {
  std::memset(c, 0, m * n * sizeof(cplx));
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      const double ar = aip.real(), ai = aip.imag();
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += cplx{ar * br - ai * bi, ar * bi + ai * br};
      }
    }
  }
}

cplx zdotc_weighted(std::size_t n, const cplx* f, const cplx* g, const double* w) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double fr = f[i].real(), fi = f[i].imag();
    const double gr = g[i].real(), gi = g[i].imag();
    re += w[i] * (fr * gr + fi * gi);
    im += w[i] * (fr * gi - fi * gr);
  }
  return {re, im};
}

cplx zsum_weighted(std::size_t n, const cplx* f, const double* w) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += w[i] * f[i].real();
    im += w[i] * f[i].imag();
  }
  return {re, im};
}

} // namespace scalar_impl

#if defined(__x86_64__)
namespace avx2_impl {
void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cplx* a, const cplx* b, cplx* c);
cplx zdotc_weighted(std::size_t n, const cplx* f, const cplx* g, const double* w);
cplx zsum_weighted(std::size_t n, const cplx* f, const double* w);
} // namespace avx2_impl
#endif

bool available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("RADMOM_KERNELS")) {
    const std::string v{env};
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2" && available(Isa::avx2)) return Isa::avx2;
  }
  return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Isa g_active = detect();

} // namespace

Isa active() { return g_active; }

void force(Isa isa) {
  if (!available(isa))
    throw std::invalid_argument(std::string{"kernel ISA unavailable: "} + name(isa));
  g_active = isa;
}

const char* name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cplx* a, const cplx* b, cplx* c) {
#if defined(__x86_64__)
  if (g_active == Isa::avx2) return avx2_impl::cgemm(m, k, n, a, b, c);
#endif
  scalar_impl::cgemm(m, k, n, a, b, c);
}

cplx zdotc_weighted(std::size_t n, const cplx* f, const cplx* g, const double* w) {
#if defined(__x86_64__)
  if (g_active == Isa::avx2) return avx2_impl::zdotc_weighted(n, f, g, w);
#endif
  return scalar_impl::zdotc_weighted(n, f, g, w);
}

cplx zsum_weighted(std::size_t n, const cplx* f, const double* w) {
#if defined(__x86_64__)
  if (g_active == Isa::avx2) return avx2_impl::zsum_weighted(n, f, w);
#endif
  return scalar_impl::zsum_weighted(n, f, w);
}

} // namespace radmom::kernels
