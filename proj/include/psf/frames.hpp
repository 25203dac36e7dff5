#pragma once

// p-Schauder frames on K^d with the l^p norm.
//
// A frame is the pair (F, T): row j of the n x d analysis matrix F is the
// functional f_j, column j of the d x n synthesis matrix T is the vector tau_j.
// Both axioms are checked at construction:
//   reconstruction  T F = I_d                (max-entry residual <= 1e-10)
//   isometry        ||F x||_p = ||x||_p      (relative error <= 1e-9 on probes)
// The isometry axiom is a for-all statement; for p != 2 no finite matrix
// identity certifies it, so the probe check can only falsify. The built-in
// families satisfy it exactly by construction.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psf/numerics.hpp"

namespace psf {

inline constexpr double kReconstructionTolerance = 1e-10;
inline constexpr double kIsometryTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kWeightSumTolerance = 1e-12;
inline constexpr double kPhaseTolerance = 1e-12;

inline constexpr std::size_t kDefaultRandomProbes = 100;
inline constexpr std::uint64_t kDefaultProbeSeed = 0x70726f6265ULL;

/// Finite witness set for the isometry axiom: the d standard basis vectors,
/// the all-ones vector, then seeded complex Gaussian vectors.
struct ProbeSet {
  std::vector<Vec> vectors;
  std::uint64_t seed = kDefaultProbeSeed;
  std::size_t count = 0;
};

ProbeSet make_probe_set(std::size_t d, std::uint64_t seed = kDefaultProbeSeed,
                        std::size_t random_probes = kDefaultRandomProbes);

struct FrameValidation {
  double reconstruction_residual = 0.0;  ///< max |T F - I|
  double worst_isometry_error = 0.0;     ///< max relative | ||Fx|| - ||x|| |
  std::size_t worst_probe = 0;
  std::size_t probes = 0;
};

/// Checks both axioms; throws NotReconstructing / NotIsometric with the
/// offending entry or probe.
FrameValidation validate_frame(const Mat& analysis, const Mat& synthesis, const PExponent& p,
                               const ProbeSet& probes);

class PSchauderFrame {
 public:
  const PExponent& exponent() const noexcept { return exponent_; }
  double p() const noexcept { return exponent_.p(); }
  double q() const noexcept { return exponent_.q(); }
  const Mat& analysis() const noexcept { return analysis_; }
  const Mat& synthesis() const noexcept { return synthesis_; }
  std::size_t dim() const noexcept { return analysis_.cols(); }
  std::size_t size() const noexcept { return analysis_.rows(); }
  const std::string& label() const noexcept { return label_; }
  const FrameValidation& validation() const noexcept { return validation_; }

  /// theta_f x = (f_j(x))_j
  Vec coefficients(const Vec& x) const { return matvec(analysis_, x); }
  /// sum_j c_j tau_j
  Vec synthesize(const Vec& c) const { return matvec(synthesis_, c); }

  PSchauderFrame relabelled(std::string label) const;

 private:
  friend PSchauderFrame frame_from_operators(Mat, Mat, double, const ProbeSet&, std::string);

  PSchauderFrame(PExponent exponent, Mat analysis, Mat synthesis, std::string label,
                 FrameValidation validation);

  PExponent exponent_;
  Mat analysis_;
  Mat synthesis_;
  std::string label_;
  FrameValidation validation_;
};

/// Frame with f_j = row j of U and tau_j = column j of V, after validating
/// V U = I and the sampled isometry of U.
PSchauderFrame frame_from_operators(Mat analysis, Mat synthesis, double p, const ProbeSet& probes,
                                    std::string label = "operators");
PSchauderFrame frame_from_operators(Mat analysis, Mat synthesis, double p,
                                    std::string label = "operators");

PSchauderFrame identity_frame(std::size_t d, double p);

/// F = DFT(d), T = DFT(d)^H, p = 2.
PSchauderFrame fourier_frame(std::size_t d);

/// F = first d columns of the unitary W (an n x d isometry), T = F^H, p = 2.
PSchauderFrame parseval_frame_from_unitary(const Mat& w, std::size_t d);

using SplitWeights = std::vector<std::vector<double>>;

/// Coordinate i is split into one analysis coefficient w^(1/p) x_i per weight
/// w in weights[i]; the matching synthesis vector is w^(1/q) e_i.
PSchauderFrame splitting_frame(std::size_t d, double p, const SplitWeights& weights);

/// Phase-scaled permutation: row i of the matrix holds phases[i] at column perm[i].
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<Scalar> phases;

  static SignedPermutation identity(std::size_t n);
  std::size_t size() const noexcept { return perm.size(); }
  /// Throws DomainError for a non-bijection, BadPhase for non-unimodular phases.
  void validate() const;
  Mat matrix() const;
  Mat inverse() const;
};

PSchauderFrame signed_permutation_frame(std::size_t d, double p, const SignedPermutation& iso);
PSchauderFrame signed_permutation_frame(std::size_t d, double p, std::vector<std::size_t> perm,
                                        std::vector<Scalar> phases);

/// F' = P F, T' = T P^-1 for a signed permutation P of size n.
PSchauderFrame compose_frame(const PSchauderFrame& base, const SignedPermutation& iso);

}  // namespace psf
