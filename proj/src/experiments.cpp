#include "psf/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "psf/errors.hpp"
#include "psf/format.hpp"
#include "psf/search.hpp"

namespace psf {

namespace {

constexpr double kReductionTolerance = 1e-10;

std::string num(double v) { return format_number(v); }

void note_failure(DemoOutcome& out, const SweepOutcome& s) {
  if (!s.holds()) out.all_hold = false;
  if (s.first_failure && !out.failure) out.failure = s.first_failure;
}

DemoRow sweep_row(std::string instance, const UncertaintyChecker& pair, const SweepOutcome& s) {
  DemoRow row;
  row.instance = std::move(instance);
  row.checks = s.vectors;
  row.min_slack1 = s.min_slack1;
  row.min_slack2 = s.min_slack2;
  row.detail = "n=" + std::to_string(pair.f().size()) + " m=" + std::to_string(pair.g().size()) +
               " mu_fw=" + num(pair.forward().mu) + " mu_gt=" + num(pair.backward().mu);
  if (pair.f().p() == 2.0) row.detail += " min(s_f*s_g-1/mu^2)=" + num(s.min_product_margin);
  if (!s.chains_ok) row.detail += " chain-violation";
  row.holds = s.holds();
  return row;
}

void require_dim(std::size_t d) {
  if (d == 0 || d > kMaxDemoDim) throw ConfigError("d must be in [1, 64]");
}

DemoOutcome donoho_stark_demo(DemoParams prm) {
  if (prm.d == 0) prm.d = 16;
  require_dim(prm.d);
  if (prm.p != 0.0 && prm.p != 2.0) throw ConfigError("donoho-stark uses p = 2");
  prm.p = 2.0;
  DemoOutcome out;
  out.name = "donoho-stark";
  out.params = prm;

  const PSchauderFrame fourier = fourier_frame(prm.d);
  const UncertaintyChecker pair(identity_frame(prm.d, 2.0), fourier);

  for (std::size_t a : divisors(prm.d)) {
    const Vec x = comb_signal(prm.d, a);
    const DonohoStark ds = donoho_stark_product(x, fourier, prm.rel_tol);
    const UncertaintyReport r = pair.check(x, prm.rel_tol);
    DemoRow row;
    row.instance = "comb spacing " + std::to_string(a);
    row.checks = 1;
    row.min_slack1 = r.slack1;
    row.min_slack2 = r.slack2;
    const bool equality = !r.fragile() && r.slack1 <= kEqualityTolerance * r.bound1;
    row.detail = "support=" + std::to_string(ds.support) +
                 " spectral_support=" + std::to_string(ds.spectral_support) +
                 " product=" + std::to_string(ds.product) + (equality ? " equality" : "");
    row.holds = r.holds() && ds.product == prm.d && ds.am_gm_holds && equality;
    if (!row.holds && !out.failure) out.failure = Failure{r, {x.begin(), x.end()}};
    out.all_hold = out.all_hold && row.holds;
    out.rows.push_back(std::move(row));
  }

  Rng rng(prm.seed);
  DemoRow row;
  row.instance = "random sweep";
  row.min_slack1 = row.min_slack2 = std::numeric_limits<double>::infinity();
  std::size_t min_product = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < prm.count; ++i) {
    const Vec x(sample_vector(pair, i, rng));
    const DonohoStark ds = donoho_stark_product(x, fourier, prm.rel_tol);
    const UncertaintyReport r = pair.check(x, prm.rel_tol);
    row.min_slack1 = std::min(row.min_slack1, r.slack1);
    row.min_slack2 = std::min(row.min_slack2, r.slack2);
    min_product = std::min(min_product, ds.product);
    const bool ok = r.holds() && ds.bound_holds && ds.am_gm_holds;
    if (!ok && !out.failure) out.failure = Failure{r, {x.begin(), x.end()}};
    row.holds = row.holds && ok;
    ++row.checks;
  }
  row.detail = "min product=" + std::to_string(min_product) + " d=" + std::to_string(prm.d);
  out.all_hold = out.all_hold && row.holds;
  out.rows.push_back(std::move(row));
  return out;
}

DemoOutcome elad_bruckstein_demo(DemoParams prm) {
  if (prm.d == 0) prm.d = 8;
  if (prm.pairs == 0) prm.pairs = 20;
  require_dim(prm.d);
  if (prm.p != 0.0 && prm.p != 2.0) throw ConfigError("elad-bruckstein uses p = 2");
  prm.p = 2.0;
  DemoOutcome out;
  out.name = "elad-bruckstein";
  out.params = prm;
  for (std::size_t i = 0; i < prm.pairs; ++i) {
    const auto wf = random_unitary(prm.d, derive_seed(prm.seed, 2 * i));
    const auto wg = random_unitary(prm.d, derive_seed(prm.seed, 2 * i + 1));
    const UncertaintyChecker pair(
        parseval_frame_from_unitary(wf, prm.d).relabelled("onb-a#" + std::to_string(i)),
        parseval_frame_from_unitary(wg, prm.d).relabelled("onb-b#" + std::to_string(i)));
    const SweepOutcome s = sweep_pair(pair, prm.count, derive_seed(prm.seed, 1000 + i), prm.rel_tol);
    note_failure(out, s);
    out.rows.push_back(sweep_row("onb pair " + std::to_string(i), pair, s));
  }
  return out;
}

DemoOutcome ricaud_torresani_demo(DemoParams prm) {
  if (prm.d == 0) prm.d = 8;
  if (prm.n == 0) prm.n = std::max<std::size_t>(12, prm.d);
  if (prm.pairs == 0) prm.pairs = 20;
  require_dim(prm.d);
  if (prm.n < prm.d || prm.n > kMaxDemoDim) throw ConfigError("n must be in [d, 64]");
  if (prm.p != 0.0 && prm.p != 2.0) throw ConfigError("ricaud-torresani uses p = 2");
  prm.p = 2.0;
  DemoOutcome out;
  out.name = "ricaud-torresani";
  out.params = prm;
  for (std::size_t i = 0; i < prm.pairs; ++i) {
    const auto wf = random_unitary(prm.n, derive_seed(prm.seed, 4 * i));
    const auto wg = random_unitary(prm.n, derive_seed(prm.seed, 4 * i + 1));
    const UncertaintyChecker pair(
        parseval_frame_from_unitary(wf, prm.d).relabelled("parseval-a#" + std::to_string(i)),
        parseval_frame_from_unitary(wg, prm.d).relabelled("parseval-b#" + std::to_string(i)));
    const SweepOutcome s = sweep_pair(pair, prm.count, derive_seed(prm.seed, 2000 + i), prm.rel_tol);
    note_failure(out, s);
    out.rows.push_back(sweep_row("parseval pair " + std::to_string(i), pair, s));

    // real case: frames induced by <., tau_j>, coherence read off inner products
    const auto tau = real_parseval_vectors(prm.n, prm.d, derive_seed(prm.seed, 4 * i + 2));
    const auto omega = real_parseval_vectors(prm.n, prm.d, derive_seed(prm.seed, 4 * i + 3));
    const HilbertReduction hr = hilbert_reduction(tau, omega);
    const UncertaintyChecker real_pair(hr.f, hr.g);
    double gap = 0.0;
    for (std::size_t j = 0; j < prm.n; ++j) {
      for (std::size_t k = 0; k < prm.n; ++k) {
        gap = std::max(gap, std::abs(std::abs(real_pair.forward().gram(j, k)) -
                                     std::abs(hr.omega_tau(j, k))));
      }
    }
    const SweepOutcome rs =
        sweep_pair(real_pair, prm.count, derive_seed(prm.seed, 3000 + i), prm.rel_tol);
    note_failure(out, rs);
    DemoRow row = sweep_row("real reduction " + std::to_string(i), real_pair, rs);
    row.detail += " max||G|-|<w,t>||=" + num(gap);
    row.holds = row.holds && gap <= kReductionTolerance;
    if (!row.holds && !out.failure) {
      const Vec e0 = Vec::basis(prm.d, 0);
      out.failure = Failure{real_pair.check(e0, prm.rel_tol), {e0.begin(), e0.end()}};
    }
    out.all_hold = out.all_hold && row.holds;
    out.rows.push_back(std::move(row));
  }
  return out;
}

DemoOutcome general_p_demo(DemoParams prm) {
  if (prm.d == 0) prm.d = 4;
  if (prm.p == 0.0) prm.p = 3.0;
  if (prm.pairs == 0) prm.pairs = 1;
  require_dim(prm.d);
  try {
    (void)conjugate_exponent(prm.p);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("p: ") + e.what());
  }
  DemoOutcome out;
  out.name = "general-p";
  out.params = prm;
  const std::size_t max_parts = std::max<std::size_t>(1, 12 / prm.d);
  for (std::size_t i = 0; i < prm.pairs; ++i) {
    Rng rng(derive_seed(prm.seed, 5000 + i));
    const PSchauderFrame split_a =
        splitting_frame(prm.d, prm.p, random_split_weights(prm.d, max_parts, rng));
    const PSchauderFrame split_b =
        splitting_frame(prm.d, prm.p, random_split_weights(prm.d, max_parts, rng));
    const PSchauderFrame perm =
        signed_permutation_frame(prm.d, prm.p, random_signed_permutation(prm.d, rng));
    const PSchauderFrame mixed = compose_frame(split_b, random_signed_permutation(split_b.size(), rng));

    const std::string tag = " #" + std::to_string(i);
    const UncertaintyChecker pairs[] = {
        UncertaintyChecker(split_a, split_b),
        UncertaintyChecker(split_a, perm),
        UncertaintyChecker(perm, mixed),
    };
    const char* names[] = {"splitting/splitting", "splitting/signed-perm",
                           "signed-perm/composed-splitting"};
    for (std::size_t k = 0; k < 3; ++k) {
      const SweepOutcome s =
          sweep_pair(pairs[k], prm.count, derive_seed(prm.seed, 6000 + 3 * i + k), prm.rel_tol);
      note_failure(out, s);
      out.rows.push_back(sweep_row(names[k] + tag, pairs[k], s));
    }
  }
  return out;
}

}  // namespace

SplitWeights random_split_weights(std::size_t d, std::size_t max_parts, Rng& rng) {
  SplitWeights weights(d);
  for (auto& ws : weights) {
    const std::size_t k = 1 + rng.index(std::max<std::size_t>(1, max_parts));
    std::vector<double> raw(k);
    double total = 0.0;
    for (auto& u : raw) {
      u = 0.2 + rng.uniform01();
      total += u;
    }
    double used = 0.0;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      ws.push_back(raw[j] / total);
      used += ws.back();
    }
    ws.push_back(1.0 - used);
  }
  return weights;
}

SignedPermutation random_signed_permutation(std::size_t n, Rng& rng, bool complex_phases) {
  SignedPermutation s;
  s.perm = rng.permutation(n);
  s.phases.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (complex_phases) {
      s.phases.push_back(std::polar(1.0, 2.0 * M_PI * rng.uniform01()));
    } else {
      s.phases.emplace_back(rng.uniform01() < 0.5 ? -1.0 : 1.0, 0.0);
    }
  }
  return s;
}

std::vector<Scalar> sample_vector(const UncertaintyChecker& pair, std::size_t index, Rng& rng) {
  const std::size_t d = pair.f().dim();
  for (;;) {
    std::vector<Scalar> x;
    const std::size_t kind = index % 4;
    if (kind == 0) {
      x = rng.complex_gaussian_entries(d);
    } else if (kind == 3) {
      x.assign(d, Scalar{});
      for (std::size_t i : rng.subset(d, 1 + rng.index(d))) x[i] = rng.complex_gaussian();
    } else {
      const PSchauderFrame& fr = kind == 1 ? pair.f() : pair.g();
      const std::size_t n = fr.size();
      std::vector<Scalar> c(n);
      for (std::size_t i : rng.subset(n, 1 + rng.index(std::min(n, d)))) {
        c[i] = rng.complex_gaussian();
      }
      const Vec v = fr.synthesize(Vec(std::move(c)));
      x.assign(v.begin(), v.end());
    }
    if (max_modulus(x) > 0.0) return x;
  }
}

SweepOutcome sweep_pair(const UncertaintyChecker& pair, std::size_t count, std::uint64_t seed,
                        double rel_tol) {
  SweepOutcome out;
  out.min_slack1 = out.min_slack2 = out.min_product_margin =
      std::numeric_limits<double>::infinity();
  const bool product_form = pair.f().p() == 2.0;
  const double inv_mu_sq = 1.0 / (pair.forward().mu * pair.forward().mu);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Scalar> x = sample_vector(pair, i, rng);
    const UncertaintyReport r = pair.check(Vec(x), rel_tol);
    ++out.vectors;
    out.min_slack1 = std::min(out.min_slack1, r.slack1);
    out.min_slack2 = std::min(out.min_slack2, r.slack2);
    const double margin = static_cast<double>(r.s_f.count * r.s_g.count) - inv_mu_sq;
    out.min_product_margin = std::min(out.min_product_margin, margin);
    bool ok = true;
    if (!r.slacks_hold()) ok = out.slacks_ok = false;
    if (!r.chain1.ok || !r.chain2.ok) ok = out.chains_ok = false;
    if (product_form && margin < -kProductBoundTolerance) ok = out.product_ok = false;
    if (!ok && !out.first_failure) out.first_failure = Failure{r, std::move(x)};
  }
  return out;
}

DemoOutcome run_demo(std::string_view name, DemoParams params) {
  if (params.count == 0) throw ConfigError("count must be >= 1");
  if (name == "donoho-stark") return donoho_stark_demo(params);
  if (name == "elad-bruckstein") return elad_bruckstein_demo(params);
  if (name == "ricaud-torresani") return ricaud_torresani_demo(params);
  if (name == "general-p") return general_p_demo(params);
  throw ConfigError("unknown demo '" + std::string(name) +
                    "' (donoho-stark, elad-bruckstein, ricaud-torresani, general-p)");
}

std::vector<Vec> real_parseval_vectors(std::size_t n, std::size_t d, std::uint64_t seed) {
  const Mat f = random_orthogonal(n, seed).leading_columns(d);
  std::vector<Vec> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(f.row_vec(j));
  return out;
}

}  // namespace psf
