#pragma once

#include <complex>
#include <cstddef>

// Arithmetic inner loops used by the matrix and quadrature layers.
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant selected at runtime.  The environment
// variable RADMOM_KERNELS=scalar|avx2 overrides the selection.

namespace radmom::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

Isa active();
void force(Isa isa); // throws std::invalid_argument if the ISA is unavailable
const char* name(Isa isa);
bool available(Isa isa);

// c = a * b, row-major dense complex; a is m x k, b is k x n, c is m x n.
void cgemm(std::size_t m, std::size_t k, std::size_t n,
           const cplx* a, const cplx* b, cplx* c);

// sum_i conj(f_i) * g_i * w_i  (w real)
cplx zdotc_weighted(std::size_t n, const cplx* f, const cplx* g, const double* w);

// sum_i f_i * w_i  (w real)
cplx zsum_weighted(std::size_t n, const cplx* f, const double* w);

} // namespace radmom::kernels
