#include "psf/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace psf {

double Rng::gaussian() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

Scalar Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

double Rng::uniform01() {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

std::size_t Rng::index(std::size_t n) {
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

std::vector<std::size_t> Rng::permutation(std::size_t d) {
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = d; i > 1; --i) {
    std::swap(p[i - 1], p[index(i)]);
  }
  return p;
}

std::vector<std::size_t> Rng::subset(std::size_t d, std::size_t size) {
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = 0; i < size && i < d; ++i) {
    std::swap(p[i], p[i + index(d - i)]);
  }
  p.resize(std::min(size, d));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Scalar> Rng::complex_gaussian_entries(std::size_t d) {
  std::vector<Scalar> v(d);
  for (auto& z : v) z = complex_gaussian();
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 finaliser over (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace psf
