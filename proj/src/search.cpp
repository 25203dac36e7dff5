#include "psf/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "psf/format.hpp"
#include "psf/random.hpp"
#include "psf/records.hpp"

namespace psf {

namespace {

constexpr const char* kScopeNote =
    "vector search over fixed frame pairs; frames are inputs and are not optimised";

// Candidate bookkeeping shared by every mode.
class Tracker {
 public:
  Tracker(const SearchConfig& cfg, const UncertaintyChecker& checker, SearchResult& out)
      : cfg_(cfg), checker_(checker), out_(out) {}

  UncertaintyReport evaluate(const std::vector<Scalar>& x) {
    const Vec v(x);
    UncertaintyReport r = checker_.check(v, cfg_.rel_tol);
    if (!r.holds()) throw Falsification(r, x);
    if (r.fragile()) ++out_.fragile_candidates;
    const bool better = !have_best_ || (best_fragile_ && !r.fragile()) ||
                        (best_fragile_ == r.fragile() && r.slack1 < out_.best_slack1);
    if (better) {
      have_best_ = true;
      best_fragile_ = r.fragile();
      out_.best_slack1 = r.slack1;
      out_.best_slack2 = r.slack2;
      out_.witness = x;
      out_.certificate = r;
    }
    return r;
  }

  void record(std::size_t iter, const UncertaintyReport& r) {
    out_.trace.push_back(TraceRow{iter, r.slack1, r.slack2, r.s_f.count, r.s_g.count});
  }

 private:
  const SearchConfig& cfg_;
  const UncertaintyChecker& checker_;
  SearchResult& out_;
  bool have_best_ = false;
  bool best_fragile_ = false;
};

void check_frames(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g) {
  cfg.validate();
  if (f.dim() != cfg.d || g.dim() != cfg.d) {
    throw ConfigError("frames act on K^" + std::to_string(f.dim()) + " / K^" +
                      std::to_string(g.dim()) + " but d = " + std::to_string(cfg.d));
  }
  if (f.p() != cfg.p || g.p() != cfg.p) throw ConfigError("frame exponent differs from config p");
  if (cfg.n != 0 && cfg.n != f.size()) throw ConfigError("config n differs from first frame size");
  if (cfg.m != 0 && cfg.m != g.size()) throw ConfigError("config m differs from second frame size");
}

SearchResult start(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g) {
  SearchResult r;
  r.config = cfg;
  r.config.n = f.size();
  r.config.m = g.size();
  r.label_f = f.label();
  r.label_g = g.label();
  return r;
}

void finish(SearchResult& r) {
  std::vector<double> s;
  s.reserve(r.trace.size());
  for (const auto& row : r.trace) s.push_back(row.slack1);
  std::sort(s.begin(), s.end());
  if (!s.empty()) {
    r.min_slack1 = s.front();
    const std::size_t mid = s.size() / 2;
    r.median_slack1 = s.size() % 2 ? s[mid] : 0.5 * (s[mid - 1] + s[mid]);
  }
  r.equality = !r.certificate.fragile() &&
               r.best_slack1 <= kEqualityTolerance * r.certificate.bound1;
}

std::vector<Scalar> on_support(std::size_t d, const std::vector<std::size_t>& support,
                               const std::vector<Scalar>& values) {
  std::vector<Scalar> x(d);
  for (std::size_t i = 0; i < support.size(); ++i) x[support[i]] = values[i];
  return x;
}

/// T c; falls back to a dense Gaussian c when c lies in the kernel of T.
std::vector<Scalar> synthesize_nonzero(const PSchauderFrame& fr, const std::vector<Scalar>& c,
                                       Rng& rng) {
  Vec x = fr.synthesize(Vec(c));
  while (max_modulus(x.entries()) == 0.0) {
    x = fr.synthesize(Vec(rng.complex_gaussian_entries(fr.size())));
  }
  return {x.begin(), x.end()};
}

std::vector<std::size_t> mask_support(const std::vector<char>& mask) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s.push_back(i);
  }
  return s;
}

std::string config_json(const SearchConfig& c) {
  std::string s = "{";
  s += "\"mode\": " + quote(std::string(mode_name(c.mode)));
  s += ", \"p\": " + format_number(c.p);
  s += ", \"q\": " + format_number(c.p / (c.p - 1.0));
  s += ", \"d\": " + std::to_string(c.d);
  s += ", \"n\": " + std::to_string(c.n);
  s += ", \"m\": " + std::to_string(c.m);
  s += ", \"seed\": " + std::to_string(c.seed);
  s += ", \"iterations\": " + std::to_string(c.iterations);
  s += ", \"rel_tol\": " + format_number(c.rel_tol);
  return s + "}";
}

}  // namespace

SearchMode parse_search_mode(std::string_view name) {
  if (name == "comb") return SearchMode::comb;
  if (name == "exhaustive-ternary") return SearchMode::exhaustive_ternary;
  if (name == "random") return SearchMode::random;
  if (name == "anneal") return SearchMode::anneal;
  throw ConfigError("unknown search mode '" + std::string(name) +
                    "' (comb, exhaustive-ternary, random, anneal)");
}

std::string_view mode_name(SearchMode mode) noexcept {
  switch (mode) {
    case SearchMode::comb: return "comb";
    case SearchMode::exhaustive_ternary: return "exhaustive-ternary";
    case SearchMode::random: return "random";
    case SearchMode::anneal: return "anneal";
  }
  return "random";
}

void SearchConfig::validate() const {
  try {
    (void)conjugate_exponent(p);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("p: ") + e.what());
  }
  if (d == 0 || d > 64) throw ConfigError("d must be in [1, 64]");
  if (iterations == 0) throw ConfigError("iterations must be >= 1");
  if (!(rel_tol >= 0.0)) throw ConfigError("rel_tol must be >= 0");
  if (mode == SearchMode::exhaustive_ternary && d > kMaxTernaryDim) {
    throw TooLarge("exhaustive-ternary needs d <= 8 (3^d - 1 candidates), got d = " +
                   std::to_string(d));
  }
  if (mode == SearchMode::comb && p != 2.0) throw ConfigError("comb mode uses p = 2 (Fourier frame)");
}

Falsification::Falsification(UncertaintyReport report, std::vector<Scalar> witness)
    : Error("Falsification",
            "slack1 = " + format_number(report.slack1) + ", slack2 = " +
                format_number(report.slack2) + ", chain1 " +
                (report.chain1.ok ? std::string("ok") : report.chain1.violation) + ", chain2 " +
                (report.chain2.ok ? std::string("ok") : report.chain2.violation)),
      report_(std::move(report)),
      witness_(std::move(witness)) {}

std::vector<std::size_t> divisors(std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t a = 1; a <= d; ++a) {
    if (d % a == 0) out.push_back(a);
  }
  return out;
}

Vec comb_signal(std::size_t d, std::size_t spacing) {
  if (d == 0) throw ShapeError("comb_signal: d must be >= 1");
  if (spacing == 0 || d % spacing != 0) throw NotDivisor(d, spacing);
  std::vector<Scalar> x(d);
  for (std::size_t i = 0; i < d; i += spacing) x[i] = 1.0;
  return Vec(std::move(x));
}

SearchResult comb_search(const SearchConfig& cfg) {
  cfg.validate();
  const PSchauderFrame f = identity_frame(cfg.d, 2.0);
  const PSchauderFrame g = fourier_frame(cfg.d);
  const UncertaintyChecker checker(f, g);
  SearchResult out = start(cfg, f, g);
  Tracker tracker(cfg, checker, out);
  std::size_t iter = 0;
  for (std::size_t a : divisors(cfg.d)) {
    const Vec x = comb_signal(cfg.d, a);
    const UncertaintyReport r = tracker.evaluate(std::vector<Scalar>(x.begin(), x.end()));
    tracker.record(iter++, r);
    CombCertificate c;
    c.spacing = a;
    c.support = r.s_f.count;
    c.spectral_support = r.s_g.count;
    c.product = c.support * c.spectral_support;
    c.slack1 = r.slack1;
    c.equality = !r.fragile() && r.slack1 <= kEqualityTolerance * r.bound1;
    out.combs.push_back(c);
  }
  finish(out);
  return out;
}

SearchResult exhaustive_ternary_search(const SearchConfig& cfg, const PSchauderFrame& f,
                                       const PSchauderFrame& g) {
  SearchConfig c = cfg;
  c.mode = SearchMode::exhaustive_ternary;
  check_frames(c, f, g);
  const UncertaintyChecker checker(f, g);
  SearchResult out = start(c, f, g);
  Tracker tracker(c, checker, out);

  const std::size_t d = c.d;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  std::vector<Scalar> x(d);
  // base-3 counter, digit 1 -> +1, digit 2 -> -1
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t digit = rest % 3;
      rest /= 3;
      x[i] = digit == 0 ? 0.0 : (digit == 1 ? 1.0 : -1.0);
    }
    tracker.record(code, tracker.evaluate(x));
  }
  finish(out);
  return out;
}

SearchResult random_search(const SearchConfig& cfg, const PSchauderFrame& f,
                           const PSchauderFrame& g) {
  SearchConfig c = cfg;
  c.mode = SearchMode::random;
  check_frames(c, f, g);
  const UncertaintyChecker checker(f, g);
  SearchResult out = start(c, f, g);
  Tracker tracker(c, checker, out);
  Rng rng(c.seed);
  const std::size_t d = c.d;

  for (std::size_t i = 0; i < c.iterations; ++i) {
    // cycle: dense Gaussian, Gaussian on a random support, indicator of a
    // random support, then T_f c and T_g c for sparse Gaussian c
    const std::size_t kind = i % 5;
    std::vector<Scalar> x;
    if (kind == 0) {
      x = rng.complex_gaussian_entries(d);
    } else if (kind <= 2) {
      const std::size_t k = 1 + (i / 5) % d;
      const auto support = rng.subset(d, k);
      std::vector<Scalar> values =
          kind == 1 ? rng.complex_gaussian_entries(k) : std::vector<Scalar>(k, Scalar{1.0, 0.0});
      x = on_support(d, support, values);
    } else {
      const PSchauderFrame& fr = kind == 3 ? f : g;
      const std::size_t n = fr.size();
      const std::size_t k = 1 + (i / 5) % n;
      x = synthesize_nonzero(fr, on_support(n, rng.subset(n, k), rng.complex_gaussian_entries(k)),
                             rng);
    }
    tracker.record(i, tracker.evaluate(x));
  }
  finish(out);
  return out;
}

SearchResult anneal_gap(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g) {
  SearchConfig c = cfg;
  c.mode = SearchMode::anneal;
  check_frames(c, f, g);
  const UncertaintyChecker checker(f, g);
  SearchResult out = start(c, f, g);
  Tracker tracker(c, checker, out);
  Rng rng(c.seed);
  const std::size_t d = c.d;
  const std::size_t n = f.size();

  // Masks select coefficients of the first frame, x = T_f c. Score a mask by
  // the best slack1 over the entry draws, non-fragile draws preferred. Draw 0
  // is the indicator of the mask, odd draws use random d-th roots of unity,
  // even draws complex Gaussians.
  auto score = [&](const std::vector<char>& mask) {
    const auto support = mask_support(mask);
    const std::size_t k = support.size();
    bool have = false;
    bool fragile = false;
    UncertaintyReport best;
    for (std::size_t r = 0; r < kAnnealRestarts; ++r) {
      std::vector<Scalar> values(k, Scalar{1.0, 0.0});
      if (r % 2 == 1) {
        for (auto& v : values) {
          const double angle =
              2.0 * M_PI * static_cast<double>(rng.index(d)) / static_cast<double>(d);
          v = std::polar(1.0, angle);
        }
      } else if (r > 0) {
        values = rng.complex_gaussian_entries(k);
      }
      const UncertaintyReport rep =
          tracker.evaluate(synthesize_nonzero(f, on_support(n, support, values), rng));
      const bool take = !have || (fragile && !rep.fragile()) ||
                        (fragile == rep.fragile() && rep.slack1 < best.slack1);
      if (take) {
        best = rep;
        fragile = rep.fragile();
        have = true;
      }
    }
    return best;
  };

  std::vector<char> mask(n, 1);
  UncertaintyReport current = score(mask);
  tracker.record(0, current);
  double temperature = kAnnealInitialTemperature;
  for (std::size_t i = 1; i < c.iterations; ++i) {
    temperature *= kAnnealCooling;
    std::vector<char> proposal = mask;
    std::size_t flip = rng.index(n);
    const bool would_empty = proposal[flip] && mask_support(proposal).size() == 1;
    if (would_empty && n > 1) {
      // never empty the mask: grow at another index instead
      flip = (flip + 1 + rng.index(n - 1)) % n;
    }
    if (!(would_empty && n == 1)) proposal[flip] ^= 1;
    const UncertaintyReport cand = score(proposal);
    tracker.record(i, cand);
    const double delta = cand.slack1 - current.slack1;
    if (delta <= 0.0 || rng.uniform01() < std::exp(-delta / temperature)) {
      mask = std::move(proposal);
      current = cand;
    }
  }
  finish(out);
  return out;
}

SearchResult run_search(const SearchConfig& cfg, const PSchauderFrame& f, const PSchauderFrame& g) {
  switch (cfg.mode) {
    case SearchMode::comb: return comb_search(cfg);
    case SearchMode::exhaustive_ternary: return exhaustive_ternary_search(cfg, f, g);
    case SearchMode::random: return random_search(cfg, f, g);
    case SearchMode::anneal: return anneal_gap(cfg, f, g);
  }
  throw ConfigError("unknown search mode");
}

bool certificate_reverifies(const SearchResult& result, const PSchauderFrame& f,
                            const PSchauderFrame& g) {
  if (result.witness.empty()) return false;
  const UncertaintyReport r =
      check_uncertainty(f, g, Vec(result.witness), result.config.rel_tol);
  return std::abs(r.slack1 - result.best_slack1) <= 1e-12 &&
         std::abs(r.slack2 - result.best_slack2) <= 1e-12 && r.s_f.count == result.certificate.s_f.count &&
         r.s_g.count == result.certificate.s_g.count;
}

std::string serialize_search_result(const SearchResult& r) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"version\": 1,\n";
  o << "  \"kind\": \"search-result\",\n";
  o << "  \"config\": " << config_json(r.config) << ",\n";
  o << "  \"label_f\": " << quote(r.label_f) << ",\n";
  o << "  \"label_g\": " << quote(r.label_g) << ",\n";
  o << "  \"scope\": " << quote(kScopeNote) << ",\n";
  o << "  \"best_slack1\": " << format_number(r.best_slack1) << ",\n";
  o << "  \"best_slack2\": " << format_number(r.best_slack2) << ",\n";
  o << "  \"equality\": " << (r.equality ? "true" : "false") << ",\n";
  o << "  \"witness\": " << complex_array_json(r.witness) << ",\n";
  o << "  \"trace_summary\": {\"count\": " << r.trace.size()
    << ", \"min_slack1\": " << format_number(r.min_slack1)
    << ", \"median_slack1\": " << format_number(r.median_slack1)
    << ", \"fragile_candidates\": " << r.fragile_candidates << "},\n";
  if (!r.combs.empty()) {
    o << "  \"combs\": [\n";
    for (std::size_t i = 0; i < r.combs.size(); ++i) {
      const auto& c = r.combs[i];
      o << "    {\"spacing\": " << c.spacing << ", \"support\": " << c.support
        << ", \"spectral_support\": " << c.spectral_support << ", \"product\": " << c.product
        << ", \"slack1\": " << format_number(c.slack1)
        << ", \"equality\": " << (c.equality ? "true" : "false") << "}"
        << (i + 1 < r.combs.size() ? ",\n" : "\n");
    }
    o << "  ],\n";
  }
  o << "  \"certificate\": " << report_json(r.certificate) << "\n";
  o << "}\n";
  return o.str();
}

std::string trace_csv(const SearchResult& r) {
  std::ostringstream o;
  o << "iter,slack1,slack2,s_f,s_g\n";
  for (const auto& t : r.trace) {
    o << t.iter << ',' << format_number(t.slack1) << ',' << format_number(t.slack2) << ','
      << t.s_f << ',' << t.s_g << '\n';
  }
  return o.str();
}

}  // namespace psf
