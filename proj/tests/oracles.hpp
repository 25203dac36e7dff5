#pragma once

// Independent reference computations for the tests. Long double, plain loops,
// nothing shared with the library code paths.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psf/numerics.hpp"

namespace oracle {

using LComplex = std::complex<long double>;
constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline std::vector<LComplex> dft(const std::vector<psf::Scalar>& x) {
  const std::size_t d = x.size();
  std::vector<LComplex> out(d);
  const long double scale = 1.0L / std::sqrt(static_cast<long double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    LComplex acc = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const long double angle = -2.0L * kPi * static_cast<long double>((j * k) % d) / d;
      acc += LComplex(std::cos(angle), std::sin(angle)) *
             LComplex(x[k].real(), x[k].imag());
    }
    out[j] = acc * scale;
  }
  return out;
}

inline long double pnorm(const std::vector<psf::Scalar>& x, long double p) {
  long double s = 0;
  for (const auto& v : x) s += std::pow(std::hypot((long double)v.real(), (long double)v.imag()), p);
  return std::pow(s, 1.0L / p);
}

template <class C>
std::size_t count_nonzero(const std::vector<C>& x, long double rel_tol) {
  long double m = 0;
  for (const auto& v : x) m = std::max<long double>(m, std::abs(v));
  std::size_t c = 0;
  for (const auto& v : x) c += std::abs(v) > rel_tol * m ? 1 : 0;
  return c;
}

inline std::vector<LComplex> matmul(const psf::Mat& a, const psf::Mat& b) {
  std::vector<LComplex> out(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      LComplex acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc += LComplex(a(i, k).real(), a(i, k).imag()) * LComplex(b(k, j).real(), b(k, j).imag());
      out[i * b.cols() + j] = acc;
    }
  return out;
}

inline long double max_cross_modulus(const psf::Mat& f, const psf::Mat& t) {
  long double mu = 0;
  for (const auto& v : oracle::matmul(f, t)) mu = std::max<long double>(mu, std::abs(v));
  return mu;
}

/// min over x in {-1,0,1}^d \ {0} of ||x||_0 * ||DFT x||_0.
inline std::size_t ternary_min_product(std::size_t d) {
  std::size_t best = SIZE_MAX;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<psf::Scalar> x(d);
    std::size_t c = code;
    for (std::size_t i = 0; i < d; ++i, c /= 3) x[i] = c % 3 == 0 ? 0.0 : (c % 3 == 1 ? 1.0 : -1.0);
    const std::size_t prod = count_nonzero(x, 1e-8L) * count_nonzero(dft(x), 1e-8L);
    best = std::min(best, prod);
  }
  return best;
}

inline std::vector<psf::Scalar> gaussian_vector(std::size_t d, std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<psf::Scalar> x(d);
  for (auto& v : x) v = {n(gen), n(gen)};
  return x;
}

}  // namespace oracle
