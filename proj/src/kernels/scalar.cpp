#include <cmath>

#include "psf/kernels.hpp"

namespace psf::kernels::scalar {

Complex dot(const Complex* a, const Complex* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

// sqrt(re^2 + im^2) rather than std::abs so the vector path can match it bit
// for bit; hypot-style scaling is unnecessary for the magnitudes handled here.
void modulus(const Complex* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double sq = re * re;
    out[i] = std::sqrt(sq + im * im);
  }
}

double max_modulus(const Complex* x, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double sq = re * re;
    const double m = sq + im * im;
    if (m > best) best = m;
  }
  return std::sqrt(best);
}

double sum_modulus(const Complex* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double sq = re * re;
    s += std::sqrt(sq + im * im);
  }
  return s;
}

double sum_sq_modulus(const Complex* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = x[i].real(), im = x[i].imag();
    const double sq = re * re;
    s += sq + im * im;
  }
  return s;
}

}  // namespace psf::kernels::scalar
