#include <immintrin.h>

#include <cmath>

#include "psf/kernels.hpp"

// Two complex<double> per 256-bit register: [re0, im0, re1, im1].
// Built with -mavx2 -mfma -ffp-contract=off; only reached after the runtime
// CPU check in dispatch.cpp.

namespace psf::kernels::avx2 {

namespace {

inline const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [|z0|^2, |z1|^2, |z2|^2, |z3|^2] from four consecutive complex values.
inline __m256d sq_modulus4(const double* p) {
  const __m256d a = _mm256_loadu_pd(p);
  const __m256d b = _mm256_loadu_pd(p + 4);
  const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
  // hadd leaves [z0, z2, z1, z3]
  return _mm256_permute4x64_pd(h, 0b11011000);
}

}  // namespace

Complex dot(const Complex* a, const Complex* b, std::size_t n) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  __m256d straight0 = _mm256_setzero_pd(), straight1 = _mm256_setzero_pd();
  __m256d crossed0 = _mm256_setzero_pd(), crossed1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * i + 4);
    straight0 = _mm256_fmadd_pd(a0, b0, straight0);
    straight1 = _mm256_fmadd_pd(a1, b1, straight1);
    crossed0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), crossed0);
    crossed1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), crossed1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    straight0 = _mm256_fmadd_pd(a0, b0, straight0);
    crossed0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), crossed0);
  }
  // straight lanes: [ar*br, ai*bi, ...]; crossed lanes: [ar*bi, ai*br, ...]
  const __m256d straight = _mm256_add_pd(straight0, straight1);
  const __m256d crossed = _mm256_add_pd(crossed0, crossed1);
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(_mm256_mul_pd(straight, sign));
  double im = hsum(crossed);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

void modulus(const Complex* x, double* out, std::size_t n) {
  const double* px = raw(x);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq_modulus4(px + 2 * i)));
  }
  scalar::modulus(x + i, out + i, n - i);
}

double max_modulus(const Complex* x, std::size_t n) {
  const double* px = raw(x);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    best = _mm256_max_pd(best, sq_modulus4(px + 2 * i));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = 0.0;
  for (double v : lanes) m = v > m ? v : m;
  for (; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double sq = re * re;
    const double v = sq + im * im;
    if (v > m) m = v;
  }
  return std::sqrt(m);
}

double sum_modulus(const Complex* x, std::size_t n) {
  const double* px = raw(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq_modulus4(px + 2 * i)));
  }
  return hsum(acc) + scalar::sum_modulus(x + i, n - i);
}

double sum_sq_modulus(const Complex* x, std::size_t n) {
  const double* px = raw(x);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(px + 2 * i);
    const __m256d b = _mm256_loadu_pd(px + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  return hsum(_mm256_add_pd(acc0, acc1)) + scalar::sum_sq_modulus(x + i, n - i);
}

}  // namespace psf::kernels::avx2
