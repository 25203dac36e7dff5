#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "psf/errors.hpp"
#include "psf/experiments.hpp"
#include "psf/format.hpp"
#include "psf/records.hpp"

using namespace psf;

namespace {

UncertaintyReport comb_report() {
  return check_uncertainty(identity_frame(4, 2.0), fourier_frame(4), Vec{1.0, 0.0, 1.0, 0.0});
}

/// Separators outside double-quoted fields.
std::size_t csv_separators(const std::string& s) {
  std::size_t n = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("number formatting round trips") {
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(0.1) == "0.10000000000000001");
  for (double v : {1.0 / 3.0, 2.0 / 3.0, 1e-300, 6.02214076e23, -0.0}) {
    CHECK(std::stod(format_number(v)) == v);
  }
  CHECK(quote("a\"b") == "\"a\\\"b\"");
}

TEST_CASE("output formats") {
  CHECK(parse_output_format("text") == OutputFormat::text);
  CHECK(parse_output_format("json-lines") == OutputFormat::json_lines);
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_output_format("xml"), ConfigError);
  CHECK(format_name(OutputFormat::json_lines) == "json-lines");
}

TEST_CASE("records are self-describing") {
  const auto r = comb_report();
  const std::string text = report_text(r, 3);
  for (const char* key : {"index=3", "p=2", "q=2", "rel_tol=1e-08", "label_f=", "label_g=",
                          "s_f=2", "s_g=2", "slack1=", "slack2="}) {
    CHECK(text.find(key) != std::string::npos);
  }
  CHECK(text.find('\n') == std::string::npos);

  const auto j = nlohmann::json::parse(report_json(r, 3));
  CHECK(j["index"] == 3);
  CHECK(j["p"] == 2.0);
  CHECK(j["rel_tol"] == 1e-8);
  CHECK(j["label_f"] == "identity(d=4,p=2)");
  CHECK(j["label_g"] == "fourier(d=4)");
  CHECK(j["s_f"] == 2);

  const std::string header = report_csv_header();
  const std::string row = report_csv_row(r, 0);
  CHECK(header.rfind("index,label_f,label_g,p,q,rel_tol", 0) == 0);
  CHECK(csv_separators(header) == csv_separators(row));
  CHECK(report_record(r, 0, OutputFormat::csv) == row);
}

TEST_CASE("falsification document carries witness and report") {
  const auto r = comb_report();
  const std::vector<Scalar> w{1.0, 0.0, 1.0, 0.0};
  const auto j = nlohmann::json::parse(falsification_document(r, w));
  CHECK(j["kind"] == "falsification");
  CHECK(j["witness"].size() == 4);
  CHECK(j["witness"][0][0] == 1.0);
  CHECK(j.contains("report"));
  CHECK(complex_array_json(std::vector<Scalar>{Scalar{1, -2}}) == "[[1, -2]]");
}

TEST_CASE("demos hold and are deterministic") {
  DemoParams small;
  small.count = 100;
  for (const char* name : {"donoho-stark", "elad-bruckstein", "ricaud-torresani", "general-p"}) {
    CAPTURE(name);
    const auto a = run_demo(name, small);
    CHECK(a.all_hold);
    CHECK_FALSE(a.failure.has_value());
    CHECK_FALSE(a.rows.empty());
    const auto b = run_demo(name, small);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].detail == b.rows[i].detail);
      CHECK(a.rows[i].min_slack1 == b.rows[i].min_slack1);
    }
  }
}

TEST_CASE("demo parameters") {
  DemoParams p;
  p.d = 16;
  const auto ds = run_demo("donoho-stark", p);
  bool spacing4 = false;
  for (const auto& row : ds.rows) {
    if (row.instance == "comb spacing 4") {
      spacing4 = true;
      CHECK(row.detail.find("product=16") != std::string::npos);
      CHECK(row.detail.find("equality") != std::string::npos);
    }
  }
  CHECK(spacing4);

  DemoParams rt;
  rt.d = 3;
  rt.n = 4;
  rt.seed = 5;
  const auto r = run_demo("ricaud-torresani", rt);
  CHECK(r.all_hold);
  for (const auto& row : r.rows) CHECK(row.min_slack1 >= 0.0);

  DemoParams gp;
  gp.p = 3.0;
  gp.d = 4;
  const auto g = run_demo("general-p", gp);
  CHECK(g.all_hold);
  for (const auto& row : g.rows) {
    CHECK(row.min_slack1 >= -kSlackTolerance);
    CHECK(row.min_slack2 >= -kSlackTolerance);
  }

  CHECK_THROWS_AS(run_demo("heisenberg", DemoParams{}), ConfigError);
  DemoParams big;
  big.d = 65;
  CHECK_THROWS_AS(run_demo("donoho-stark", big), ConfigError);
  DemoParams wrong_p;
  wrong_p.p = 3.0;
  CHECK_THROWS_AS(run_demo("elad-bruckstein", wrong_p), ConfigError);
}

TEST_CASE("sample vectors are never zero and sweeps are seeded") {
  const UncertaintyChecker pair(identity_frame(6, 2.0), fourier_frame(6));
  Rng rng(1);
  for (std::size_t i = 0; i < 200; ++i) CHECK(max_modulus(sample_vector(pair, i, rng)) > 0.0);
  const auto a = sweep_pair(pair, 200, 3);
  const auto b = sweep_pair(pair, 200, 3);
  CHECK(a.holds());
  CHECK(a.min_slack1 == b.min_slack1);
  CHECK(a.min_product_margin >= -kProductBoundTolerance);
}

TEST_CASE("random split weights sum to one") {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto w = random_split_weights(1 + t % 6, 1 + t % 4, rng);
    for (const auto& group : w) {
      double s = 0.0;
      for (double x : group) {
        CHECK(x > 0.0);
        s += x;
      }
      CHECK(std::abs(s - 1.0) <= kWeightSumTolerance);
    }
  }
}
