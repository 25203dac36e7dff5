#pragma once

// Empirical search for equality cases of the uncertainty inequality.
//
// Frames are fixed inputs; only the vector x varies. Every mode minimises
// slack1 (slack2 is recorded alongside), keeps a per-candidate trace and
// returns the best witness together with its full report. A candidate that
// violates either inequality or its proof chain aborts the run with a
// Falsification carrying the certificate.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psf/errors.hpp"
#include "psf/frames.hpp"
#include "psf/uncertainty.hpp"

namespace psf {

enum class SearchMode { comb, exhaustive_ternary, random, anneal };

SearchMode parse_search_mode(std::string_view name);
std::string_view mode_name(SearchMode mode) noexcept;

inline constexpr std::size_t kMaxTernaryDim = 8;
inline constexpr double kAnnealInitialTemperature = 1.0;
inline constexpr double kAnnealCooling = 0.995;
/// Entry draws per support pattern in the annealer's inner step.
inline constexpr std::size_t kAnnealRestarts = 8;
/// Equality is declared when slack1 <= kEqualityTolerance * bound1.
inline constexpr double kEqualityTolerance = 1e-9;

struct SearchConfig {
  double p = 2.0;
  std::size_t d = 4;
  std::size_t n = 0;  ///< size of the first frame; 0 means "take it from the frame"
  std::size_t m = 0;  ///< size of the second frame; 0 likewise
  SearchMode mode = SearchMode::random;
  std::uint64_t seed = 0;
  std::size_t iterations = 1000;
  double rel_tol = kDefaultRelTol;

  /// ConfigError / TooLarge on invalid combinations.
  void validate() const;
};

struct TraceRow {
  std::size_t iter = 0;
  double slack1 = 0.0;
  double slack2 = 0.0;
  std::size_t s_f = 0;
  std::size_t s_g = 0;
};

struct CombCertificate {
  std::size_t spacing = 0;
  std::size_t support = 0;
  std::size_t spectral_support = 0;
  std::size_t product = 0;
  double slack1 = 0.0;
  bool equality = false;
};

struct SearchResult {
  SearchConfig config;
  std::string label_f;
  std::string label_g;
  double best_slack1 = 0.0;
  double best_slack2 = 0.0;
  std::vector<Scalar> witness;
  UncertaintyReport certificate;
  /// Best slack within kEqualityTolerance of zero and the witness is not
  /// sparsity-fragile.
  bool equality = false;
  std::size_t fragile_candidates = 0;
  std::vector<TraceRow> trace;
  double min_slack1 = 0.0;
  double median_slack1 = 0.0;
  std::vector<CombCertificate> combs;  ///< comb mode only
};

/// Thrown when a candidate breaks the inequality (slack < -1e-9) or a proof
/// chain step. Carries the offending vector and its report.
class Falsification : public Error {
 public:
  Falsification(UncertaintyReport report, std::vector<Scalar> witness);

  const UncertaintyReport& report() const noexcept { return report_; }
  const std::vector<Scalar>& witness() const noexcept { return witness_; }

 private:
  UncertaintyReport report_;
  std::vector<Scalar> witness_;
};

/// Ones at indices 0, a, 2a, ...; NotDivisor unless a divides d.
Vec comb_signal(std::size_t d, std::size_t spacing);

/// All divisors of d in increasing order.
std::vector<std::size_t> divisors(std::size_t d);

/// Every comb of length cfg.d against the identity/Fourier pair (p = 2).
SearchResult comb_search(const SearchConfig& cfg);

/// All x in {-1, 0, 1}^d \ {0}; TooLarge for d > 8.
SearchResult exhaustive_ternary_search(const SearchConfig& cfg, const PSchauderFrame& f,
                                       const PSchauderFrame& g);

/// Seeded complex Gaussian vectors and sparsified variants on random supports.
SearchResult random_search(const SearchConfig& cfg, const PSchauderFrame& f,
                           const PSchauderFrame& g);

/// Simulated annealing over support masks of x; entries on a fixed support
/// are re-drawn kAnnealRestarts times and the best draw scores the mask.
SearchResult anneal_gap(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g);

/// Dispatch on cfg.mode (comb mode ignores the frames).
SearchResult run_search(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g);

/// Recomputes the witness report and compares slacks within 1e-12.
bool certificate_reverifies(const SearchResult& result, const PSchauderFrame& f,
                            const PSchauderFrame& g);

std::string serialize_search_result(const SearchResult& result);
/// iter,slack1,slack2,s_f,s_g
std::string trace_csv(const SearchResult& result);

}  // namespace psf
