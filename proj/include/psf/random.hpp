#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "psf/numerics.hpp"

namespace psf {

/// Seeded generator passed explicitly to everything random; there is no
/// global RNG anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian();
  /// Standard complex Gaussian (independent N(0, 1/2) parts).
  Scalar complex_gaussian();
  double uniform01();
  /// Uniform in [0, n).
  std::size_t index(std::size_t n);
  /// Uniformly random subset of {0..d-1} of the given size, sorted.
  std::vector<std::size_t> subset(std::size_t d, std::size_t size);
  /// Uniformly random permutation of {0..d-1}.
  std::vector<std::size_t> permutation(std::size_t d);

  std::vector<Scalar> complex_gaussian_entries(std::size_t d);

 private:
  std::mt19937_64 engine_;
};

/// Derive an independent child seed; used to fan one user seed out to
/// several generators deterministically.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace psf
