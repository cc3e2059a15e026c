#if defined(__x86_64__)

#include "radmom/kernels.hpp"

#include <cstring>
#include <immintrin.h>

namespace radmom::kernels::avx2_impl {

// Complex doubles are stored interleaved (re, im); one 256-bit register holds
// two complex values.

void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cplx* a, const cplx* b, cplx* c) {
  std::memset(c, 0, m * n * sizeof(cplx));
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b + p * n;
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d bv = _mm256_loadu_pd(reinterpret_cast<const double*>(brow + j));
        const __m256d bsw = _mm256_permute_pd(bv, 0x5); // (bi, br) per lane pair
        __m256d cv = _mm256_loadu_pd(reinterpret_cast<double*>(crow + j));
        // (ar*br - ai*bi, ar*bi + ai*br)
        const __m256d t = _mm256_mul_pd(ai, bsw);
        cv = _mm256_add_pd(cv, _mm256_fmaddsub_pd(ar, bv, t));
        _mm256_storeu_pd(reinterpret_cast<double*>(crow + j), cv);
      }
      for (; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += cplx{aip.real() * br - aip.imag() * bi,
                        aip.real() * bi + aip.imag() * br};
      }
    }
  }
}

namespace {

inline cplx reduce_pairs(__m256d acc) {
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  return {buf[0] + buf[2], buf[1] + buf[3]};
}

inline __m256d widen_weights(const double* w) {
  const __m128d wl = _mm_loadu_pd(w);
  // (w0, w0, w1, w1)
  return _mm256_permute4x64_pd(_mm256_castpd128_pd256(wl), 0x50);
}

} // namespace

cplx zdotc_weighted(std::size_t n, const cplx* f, const cplx* g, const double* w) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d fv = _mm256_loadu_pd(reinterpret_cast<const double*>(f + i));
    const __m256d gv = _mm256_loadu_pd(reinterpret_cast<const double*>(g + i));
    const __m256d wv = widen_weights(w + i);
    const __m256d fre = _mm256_movedup_pd(fv);       // (fr, fr)
    const __m256d fim = _mm256_permute_pd(fv, 0xF);  // (fi, fi)
    const __m256d gsw = _mm256_permute_pd(gv, 0x5);  // (gi, gr)
    // conj(f)*g = (fr*gr + fi*gi, fr*gi - fi*gr)
    const __m256d t = _mm256_mul_pd(fim, gsw);
    const __m256d prod = _mm256_fmsubadd_pd(fre, gv, t);
    acc = _mm256_fmadd_pd(prod, wv, acc);
  }
  cplx out = reduce_pairs(acc);
  for (; i < n; ++i) {
    const double fr = f[i].real(), fi = f[i].imag();
    const double gr = g[i].real(), gi = g[i].imag();
    out += cplx{w[i] * (fr * gr + fi * gi), w[i] * (fr * gi - fi * gr)};
  }
  return out;
}

cplx zsum_weighted(std::size_t n, const cplx* f, const double* w) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d fv = _mm256_loadu_pd(reinterpret_cast<const double*>(f + i));
    acc = _mm256_fmadd_pd(fv, widen_weights(w + i), acc);
  }
  cplx out = reduce_pairs(acc);
  for (; i < n; ++i) out += w[i] * f[i];
  return out;
}

} // namespace radmom::kernels::avx2_impl

#endif // __x86_64__
