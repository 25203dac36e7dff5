#pragma once

// Seeded frame families, vector sweeps and the canonical demos
// (Donoho-Stark, Elad-Bruckstein, Ricaud-Torresani, general p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psf/frames.hpp"
#include "psf/random.hpp"
#include "psf/uncertainty.hpp"

namespace psf {

/// Tolerance for the p = 2 product form s_f s_g >= 1/mu^2.
inline constexpr double kProductBoundTolerance = 1e-6;
inline constexpr std::size_t kDefaultSweepCount = 1000;
inline constexpr std::size_t kMaxDemoDim = 64;

/// d lists of 1..max_parts positive weights, each list summing to 1.
SplitWeights random_split_weights(std::size_t d, std::size_t max_parts, Rng& rng);

/// Random permutation with random unimodular phases (or all-ones phases).
SignedPermutation random_signed_permutation(std::size_t n, Rng& rng, bool complex_phases = true);

/// The index-th sweep vector. Cycles through four kinds: dense Gaussian,
/// T_f c and T_g c for sparse Gaussian c, and Gaussian on a random support of
/// the ambient space. Never zero.
std::vector<Scalar> sample_vector(const UncertaintyChecker& pair, std::size_t index, Rng& rng);

struct Failure {
  UncertaintyReport report;
  std::vector<Scalar> witness;
};

struct SweepOutcome {
  std::size_t vectors = 0;
  double min_slack1 = 0.0;
  double min_slack2 = 0.0;
  /// min over vectors of s_f s_g - 1/mu_fw^2 (meaningful for p = 2).
  double min_product_margin = 0.0;
  bool slacks_ok = true;
  bool chains_ok = true;
  bool product_ok = true;
  std::optional<Failure> first_failure;

  bool holds() const noexcept { return slacks_ok && chains_ok && product_ok; }
};

/// Checks `count` sample vectors. The product form is only enforced for p = 2.
SweepOutcome sweep_pair(const UncertaintyChecker& pair, std::size_t count, std::uint64_t seed,
                        double rel_tol = kDefaultRelTol);

struct DemoParams {
  std::size_t d = 0;     ///< 0: per-demo default
  double p = 0.0;        ///< 0: per-demo default
  std::size_t n = 0;     ///< frame size for ricaud-torresani; 0: default
  std::size_t pairs = 0; ///< random instances; 0: default
  std::size_t count = kDefaultSweepCount;
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
};

struct DemoRow {
  std::string instance;
  std::size_t checks = 0;
  double min_slack1 = 0.0;
  double min_slack2 = 0.0;
  std::string detail;
  bool holds = true;
};

struct DemoOutcome {
  std::string name;
  DemoParams params;  ///< with defaults resolved
  std::vector<DemoRow> rows;
  bool all_hold = true;
  std::optional<Failure> failure;
};

/// Names: donoho-stark, elad-bruckstein, ricaud-torresani, general-p.
/// ConfigError on unknown names or unsupported parameters.
DemoOutcome run_demo(std::string_view name, DemoParams params);

/// Rows of the first d columns of a real orthogonal n x n matrix, as vectors
/// of R^d: a real Parseval frame of n vectors.
std::vector<Vec> real_parseval_vectors(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace psf
