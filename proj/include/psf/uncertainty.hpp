#pragma once

// Sparsity, cross-Gram coherence and the two-sided uncertainty inequality
// for a pair of p-Schauder frames (f, tau) and (g, omega) on the same space:
//
//   ||theta_f x||_0^(1/p) ||theta_g x||_0^(1/q) >= 1 / max_jk |f_j(omega_k)|
//   ||theta_g x||_0^(1/p) ||theta_f x||_0^(1/q) >= 1 / max_jk |g_k(tau_j)|
//
// Each report also carries a numerical trace of the chain of (in)equalities
// that proves the bound, one chain per direction.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "psf/frames.hpp"
#include "psf/numerics.hpp"

namespace psf {

inline constexpr double kDefaultRelTol = 1e-8;
/// Lower limit for a slack before it counts as a violation.
inline constexpr double kSlackTolerance = 1e-9;
/// Entries within this factor of the sparsity threshold are sparsity-fragile.
inline constexpr double kFragileFactor = 10.0;

/// Chain step tolerances (relative).
inline constexpr double kChainEqualityTolerance = 1e-9;
inline constexpr double kChainInequalityTolerance = 1e-12;

struct SparsityCount {
  std::size_t count = 0;
  double tolerance = kDefaultRelTol;
  /// Some entry lies within kFragileFactor of the threshold on either side.
  bool fragile = false;
  std::vector<std::size_t> support;
};

/// Entries with |x_i| > rel_tol * max|x| are counted; zero vector gives 0.
SparsityCount sparsity(std::span<const Scalar> x, double rel_tol = kDefaultRelTol);
inline SparsityCount sparsity(const Vec& x, double rel_tol = kDefaultRelTol) {
  return sparsity(x.entries(), rel_tol);
}

struct CrossGram {
  Mat gram;   ///< gram(j, k) = f_j(omega_k), i.e. F_f T_g
  double mu;  ///< max modulus entry
};

/// ShapeError unless both frames live on the same K^d.
CrossGram cross_gram(const PSchauderFrame& f, const PSchauderFrame& g);

/// c0 = ||x||^p
/// c1 = sum_{j in S_f} |sum_{k in S_g} g_k(x) f_j(omega_k)|^p
/// c2 = sum_{j in S_f} (sum_{k in S_g} |g_k(x) f_j(omega_k)|)^p
/// c3 = mu^p sum_{j in S_f} (sum_{k in S_g} |g_k(x)|)^p
/// c4 = mu^p ||theta_f x||_0 (sum_{k in S_g} |g_k(x)|)^p          (= c3)
/// c5 = mu^p ||theta_f x||_0 ||theta_g x||^p ||theta_g x||_0^(p/q)
/// c6 = mu^p ||theta_f x||_0 ||x||^p ||theta_g x||_0^(p/q)
/// For the reverse direction the roles of (f, tau) and (g, omega) swap.
struct ProofChain {
  static constexpr std::array<std::string_view, 7> kLabels{"c0", "c1", "c2", "c3",
                                                           "c4", "c5", "c6"};
  std::array<double, 7> values{};
  bool ok = true;
  /// First violated step, e.g. "c1<=c2"; empty when ok.
  std::string violation;
};

struct UncertaintyReport {
  double p = 2.0;
  double q = 2.0;
  double rel_tol = kDefaultRelTol;
  std::string label_f;
  std::string label_g;
  SparsityCount s_f;
  SparsityCount s_g;
  double mu_fw = 0.0;  ///< max |f_j(omega_k)|
  double mu_gt = 0.0;  ///< max |g_k(tau_j)|
  double lhs1 = 0.0;   ///< s_f^(1/p) s_g^(1/q)
  double lhs2 = 0.0;   ///< s_g^(1/p) s_f^(1/q)
  double bound1 = 0.0;
  double bound2 = 0.0;
  double slack1 = 0.0;
  double slack2 = 0.0;
  ProofChain chain1;
  ProofChain chain2;

  bool fragile() const noexcept { return s_f.fragile || s_g.fragile; }
  bool slacks_hold() const noexcept {
    return slack1 >= -kSlackTolerance && slack2 >= -kSlackTolerance;
  }
  bool holds() const noexcept { return slacks_hold() && chain1.ok && chain2.ok; }
};

/// Precomputes both cross-Grams for a frame pair so that many vectors can be
/// checked cheaply. Holds copies of the frames.
class UncertaintyChecker {
 public:
  /// ShapeError on differing dimensions, DomainError on differing p.
  UncertaintyChecker(PSchauderFrame f, PSchauderFrame g);

  /// ZeroVector if ||x||_p == 0, ShapeError on dimension mismatch.
  UncertaintyReport check(const Vec& x, double rel_tol = kDefaultRelTol) const;

  const PSchauderFrame& f() const noexcept { return f_; }
  const PSchauderFrame& g() const noexcept { return g_; }
  /// (f, omega): gram(j, k) = f_j(omega_k)
  const CrossGram& forward() const noexcept { return forward_; }
  /// (g, tau): gram(k, j) = g_k(tau_j)
  const CrossGram& backward() const noexcept { return backward_; }

 private:
  PSchauderFrame f_;
  PSchauderFrame g_;
  CrossGram forward_;
  CrossGram backward_;
};

UncertaintyReport check_uncertainty(const PSchauderFrame& f, const PSchauderFrame& g, const Vec& x,
                                    double rel_tol = kDefaultRelTol);

/// s_f^(1/p) s_g^(1/q); exact square root for p = 2.
double sparsity_product_root(std::size_t s_first, std::size_t s_second, double p, double q);

struct DonohoStark {
  std::size_t support = 0;           ///< ||h||_0
  std::size_t spectral_support = 0;  ///< ||h^||_0
  std::size_t product = 0;
  bool bound_holds = false;  ///< product >= d
  bool am_gm_holds = false;  ///< ((a + b)/2)^2 >= ab, in integers
};

/// ZeroVector for x = 0.
DonohoStark donoho_stark_product(const Vec& x, double rel_tol = kDefaultRelTol);
/// Same, with a prebuilt Fourier frame of matching dimension.
DonohoStark donoho_stark_product(const Vec& x, const PSchauderFrame& fourier,
                                 double rel_tol = kDefaultRelTol);

/// Real Parseval frames presented as 2-Schauder frames via f_j = <., tau_j>.
struct HilbertReduction {
  PSchauderFrame f;
  PSchauderFrame g;
  Mat omega_tau;  ///< (j, k) -> <omega_k, tau_j>
  Mat tau_omega;  ///< (j, k) -> <tau_j, omega_k>
};

/// DomainError for complex input (the reduction is restricted to real
/// scalars), NotParseval when sum_j <x, tau_j> tau_j != x on some probe.
HilbertReduction hilbert_reduction(const std::vector<Vec>& tau, const std::vector<Vec>& omega);

}  // namespace psf
