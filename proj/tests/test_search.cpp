#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "psf/errors.hpp"
#include "psf/experiments.hpp"
#include "psf/search.hpp"

using namespace psf;

namespace {

SearchConfig config(SearchMode mode, std::size_t d, double p = 2.0, std::size_t iterations = 1000,
                    std::uint64_t seed = 0) {
  SearchConfig c;
  c.mode = mode;
  c.d = d;
  c.p = p;
  c.iterations = iterations;
  c.seed = seed;
  return c;
}

void check_trace_nonnegative(const SearchResult& r) {
  for (const auto& row : r.trace) {
    CHECK(row.slack1 >= -kSlackTolerance);
    CHECK(row.slack2 >= -kSlackTolerance);
  }
}

}  // namespace

TEST_CASE("comb signals") {
  CHECK(comb_signal(4, 2) == Vec{1.0, 0.0, 1.0, 0.0});
  CHECK(comb_signal(4, 4) == Vec::basis(4, 0));
  CHECK(comb_signal(9, 3) == Vec{1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0});
  CHECK(donoho_stark_product(comb_signal(9, 3)).product == 9);
  CHECK_THROWS_AS(comb_signal(9, 2), NotDivisor);
  CHECK_THROWS_AS(comb_signal(9, 0), NotDivisor);
  CHECK(divisors(12) == std::vector<std::size_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::size_t>{1});
}

TEST_CASE("every comb up to d = 36 meets the bound with equality") {
  for (std::size_t d = 1; d <= 36; ++d) {
    const auto fo = fourier_frame(d);
    for (std::size_t a : divisors(d)) {
      const auto ds = donoho_stark_product(comb_signal(d, a), fo);
      CHECK(ds.support == d / a);
      CHECK(ds.spectral_support == a);
      CHECK(ds.product == d);
    }
  }
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(config(SearchMode::random, 4).validate());
  CHECK_THROWS_AS(config(SearchMode::exhaustive_ternary, 9).validate(), TooLarge);
  CHECK_THROWS_AS(config(SearchMode::random, 0).validate(), ConfigError);
  CHECK_THROWS_AS(config(SearchMode::random, 4, 2.0, 0).validate(), ConfigError);
  CHECK_THROWS_AS(config(SearchMode::comb, 4, 3.0).validate(), ConfigError);
  CHECK_THROWS_AS(config(SearchMode::random, 4, 1.0).validate(), ConfigError);
  CHECK(parse_search_mode("exhaustive-ternary") == SearchMode::exhaustive_ternary);
  CHECK(mode_name(SearchMode::anneal) == "anneal");
  CHECK_THROWS_AS(parse_search_mode("greedy"), ConfigError);
}

TEST_CASE("comb mode certifies every divisor") {
  const auto r = comb_search(config(SearchMode::comb, 12));
  REQUIRE(r.combs.size() == 6);
  std::vector<std::size_t> spacings;
  for (const auto& c : r.combs) {
    spacings.push_back(c.spacing);
    CHECK(c.product == 12);
    CHECK(c.equality);
  }
  CHECK(spacings == std::vector<std::size_t>{1, 2, 3, 4, 6, 12});
  CHECK(r.equality);
}

TEST_CASE("exhaustive ternary identity / fourier") {
  for (std::size_t d : {2u, 3u}) {
    const auto r = exhaustive_ternary_search(config(SearchMode::exhaustive_ternary, d),
                                             identity_frame(d, 2.0), fourier_frame(d));
    CHECK(r.trace.size() == static_cast<std::size_t>(std::pow(3, d)) - 1);
    CHECK(r.certificate.s_f.count * r.certificate.s_g.count == oracle::ternary_min_product(d));
    CHECK(std::abs(r.best_slack1) <= 1e-12);
    CHECK(r.equality);
    check_trace_nonnegative(r);
  }
  const auto r2 = exhaustive_ternary_search(config(SearchMode::exhaustive_ternary, 2),
                                            identity_frame(2, 2.0), fourier_frame(2));
  const auto& w = r2.witness;
  const bool dirac = sparsity(w).count == 1;
  const bool flat = std::abs(std::abs(w[0]) - 1.0) < 1e-15 && std::abs(std::abs(w[1]) - 1.0) < 1e-15;
  CHECK((dirac || flat));
}

TEST_CASE("exhaustive ternary identity / identity") {
  const auto r = exhaustive_ternary_search(config(SearchMode::exhaustive_ternary, 3),
                                           identity_frame(3, 2.0), identity_frame(3, 2.0));
  CHECK(r.best_slack1 == 0.0);
  CHECK(sparsity(r.witness).count == 1);
}

TEST_CASE("random search") {
  const auto ii = random_search(config(SearchMode::random, 5, 2.0, 10), identity_frame(5, 2.0),
                                identity_frame(5, 2.0));
  CHECK(ii.best_slack1 == 0.0);
  CHECK(ii.trace.size() == 10);

  const auto fo = random_search(config(SearchMode::random, 4, 2.0, 1000, 1), identity_frame(4, 2.0),
                                fourier_frame(4));
  CHECK(fo.best_slack1 >= -kSlackTolerance);
  CHECK(fo.best_slack1 <= 1e-9);

  Rng rng(3);
  const auto f = splitting_frame(2, 3.0, random_split_weights(2, 3, rng));
  const auto g = splitting_frame(2, 3.0, random_split_weights(2, 3, rng));
  const auto sp = random_search(config(SearchMode::random, 2, 3.0, 500), f, g);
  check_trace_nonnegative(sp);
  CHECK(sp.min_slack1 == sp.best_slack1);
  CHECK(sp.min_slack1 <= sp.median_slack1);
}

TEST_CASE("anneal") {
  const auto fo = anneal_gap(config(SearchMode::anneal, 4, 2.0, 300), identity_frame(4, 2.0),
                             fourier_frame(4));
  CHECK(fo.best_slack1 <= 1e-9);
  CHECK(fo.best_slack1 >= -kSlackTolerance);

  const auto ii = anneal_gap(config(SearchMode::anneal, 5, 2.0, 300), identity_frame(5, 2.0),
                             identity_frame(5, 2.0));
  CHECK(std::abs(ii.best_slack1) <= 1e-12);

  const auto a = parseval_frame_from_unitary(random_unitary(4, derive_seed(7, 0)), 4);
  const auto b = parseval_frame_from_unitary(random_unitary(4, derive_seed(7, 1)), 4);
  const auto onb = anneal_gap(config(SearchMode::anneal, 4, 2.0, 300, 7), a, b);
  CHECK(onb.best_slack1 >= 0.0);
  CHECK(certificate_reverifies(onb, a, b));
  check_trace_nonnegative(onb);
}

TEST_CASE("heuristics never beat the ternary oracle on the ternary set") {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto id = identity_frame(d, 2.0);
    const auto fo = fourier_frame(d);
    const auto ex = exhaustive_ternary_search(config(SearchMode::exhaustive_ternary, d), id, fo);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto rs = random_search(config(SearchMode::random, d, 2.0, 300, seed), id, fo);
      const auto an = anneal_gap(config(SearchMode::anneal, d, 2.0, 200, seed), id, fo);
      // the ternary oracle already attains the bound, so nothing can go lower
      CHECK(rs.best_slack1 >= ex.best_slack1 - kSlackTolerance);
      CHECK(an.best_slack1 >= ex.best_slack1 - kSlackTolerance);
    }
  }
}

TEST_CASE("certificates re-verify and serialisation is deterministic") {
  const auto id = identity_frame(4, 2.0);
  const auto fo = fourier_frame(4);
  for (SearchMode m : {SearchMode::comb, SearchMode::exhaustive_ternary, SearchMode::random,
                       SearchMode::anneal}) {
    const auto cfg = config(m, 4, 2.0, 200, 42);
    const auto r1 = run_search(cfg, id, fo);
    const auto r2 = run_search(cfg, id, fo);
    CHECK(certificate_reverifies(r1, id, fo));
    CHECK(serialize_search_result(r1) == serialize_search_result(r2));
    CHECK(trace_csv(r1) == trace_csv(r2));
    CHECK(trace_csv(r1).rfind("iter,slack1,slack2,s_f,s_g\n", 0) == 0);
  }
}

TEST_CASE("search over a catalogued non-hilbert pair") {
  Rng rng(12);
  const auto f = splitting_frame(3, 1.5, random_split_weights(3, 4, rng));
  const auto s = splitting_frame(3, 1.5, random_split_weights(3, 4, rng));
  const auto g = compose_frame(s, random_signed_permutation(s.size(), rng));
  for (SearchMode m : {SearchMode::exhaustive_ternary, SearchMode::random, SearchMode::anneal}) {
    const auto r = run_search(config(m, 3, 1.5, 200, 5), f, g);
    check_trace_nonnegative(r);
    CHECK(certificate_reverifies(r, f, g));
  }
}

TEST_CASE("searches reach the synthesis vectors of a general frame") {
  const auto a = parseval_frame_from_unitary(random_unitary(6, 70), 6);
  const auto b = parseval_frame_from_unitary(random_unitary(6, 71), 6);
  const UncertaintyChecker pair(a, b);
  double tau_best = INFINITY;
  for (std::size_t j = 0; j < a.size(); ++j) {
    tau_best = std::min(tau_best, pair.check(a.synthesize(Vec::basis(a.size(), j))).slack1);
  }
  for (SearchMode m : {SearchMode::random, SearchMode::anneal}) {
    const auto r = run_search(config(m, 6, 2.0, 1000, 3), a, b);
    CHECK(r.best_slack1 <= tau_best + 1e-12);
  }
}
