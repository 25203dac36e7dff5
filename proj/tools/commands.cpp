#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "psf/errors.hpp"
#include "psf/experiments.hpp"
#include "psf/format.hpp"
#include "psf/frame_io.hpp"
#include "psf/kernels.hpp"
#include "psf/random.hpp"
#include "psf/records.hpp"
#include "psf/search.hpp"

namespace psf::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalOptions {
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  std::string out;
  std::string format = "text";
  std::string manifest;
};

struct MakeFrameOptions {
  std::string family;
  std::size_t d = 0;
  double p = 2.0;
  std::size_t n = 0;
  std::string weights;
  std::string perm;
  std::string phases;
  std::string label;
};

struct VerifyOptions {
  std::string frame_f;
  std::string frame_g;
  std::string vectors;
  std::string certificate;
};

struct DemoOptions {
  std::string name;
  std::size_t d = 0;
  double p = 0.0;
  std::size_t n = 0;
  std::size_t pairs = 0;
  std::size_t count = kDefaultSweepCount;
  std::string certificate;
};

struct SearchOptions {
  std::string mode = "random";
  std::string pair;
  std::size_t d = 4;
  double p = 2.0;
  std::size_t iterations = 1000;
  std::string frame_f;
  std::string frame_g;
  std::string config;
  std::string trace;
  std::string certificate;
};

/// What a command hands back for the manifest.
struct Outcome {
  int exit_code = kOk;
  std::string summary;
  std::vector<std::pair<std::string, std::string>> config;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(0, "", "not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text, const char* what) {
  const std::string s = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(std::string(what) + ": not a non-negative integer: '" + s + "'");
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream o(path, std::ios::binary | std::ios::trunc);
  if (!o) throw ConfigError("cannot write " + path);
  o << content;
}

void emit(const GlobalOptions& g, std::ostream& out, const std::string& content) {
  if (g.out.empty()) {
    out << content;
  } else {
    write_file(g.out, content);
  }
}

std::string certificate_path(const GlobalOptions& g, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  return g.out.empty() ? "psf-falsification.json" : g.out + ".falsification.json";
}

PSchauderFrame load_frame(const std::string& path) {
  try {
    return load_frame_file(path);
  } catch (const Error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

// ---- make-frame ------------------------------------------------------------

SplitWeights parse_weights(const std::string& text) {
  SplitWeights w;
  for (const auto& group : split(text, ';')) {
    std::vector<double> ws;
    for (const auto& item : split(group, ',')) ws.push_back(parse_real(item));
    w.push_back(std::move(ws));
  }
  return w;
}

Outcome cmd_make_frame(const GlobalOptions& g, const MakeFrameOptions& o, std::ostream& out,
                       std::ostream& err) {
  Outcome res;
  res.config = {{"family", o.family}, {"d", std::to_string(o.d)}, {"p", format_number(o.p)},
                {"n", std::to_string(o.n)}, {"weights", o.weights}, {"perm", o.perm},
                {"phases", o.phases}, {"label", o.label}};
  if (o.d == 0 || o.d > kMaxDemoDim) throw ConfigError("--d must be in [1, 64]");
  Rng rng(g.seed);

  std::optional<PSchauderFrame> frame;
  if (o.family == "identity") {
    frame = identity_frame(o.d, o.p);
  } else if (o.family == "fourier") {
    if (o.p != 2.0) throw ConfigError("fourier frames use p = 2");
    frame = fourier_frame(o.d);
  } else if (o.family == "parseval") {
    if (o.p != 2.0) throw ConfigError("parseval frames use p = 2");
    const std::size_t n = o.n == 0 ? o.d : o.n;
    frame = parseval_frame_from_unitary(random_unitary(n, g.seed), o.d);
  } else if (o.family == "splitting") {
    const SplitWeights w =
        o.weights.empty() ? random_split_weights(o.d, 3, rng) : parse_weights(o.weights);
    frame = splitting_frame(o.d, o.p, w);
  } else if (o.family == "signed-perm") {
    SignedPermutation sp = random_signed_permutation(o.d, rng, false);
    if (!o.perm.empty()) {
      sp.perm.clear();
      for (const auto& item : split(o.perm, ',')) sp.perm.push_back(parse_count(item, "--perm"));
      sp.phases.assign(sp.perm.size(), Scalar{1.0, 0.0});
    }
    if (!o.phases.empty()) {
      sp.phases.clear();
      for (const auto& item : split(o.phases, ',')) sp.phases.push_back(parse_complex(item));
    }
    frame = signed_permutation_frame(o.d, o.p, sp);
  } else {
    throw ConfigError("unknown family '" + o.family +
                      "' (identity, fourier, parseval, splitting, signed-perm)");
  }
  if (!o.label.empty()) frame = frame->relabelled(o.label);

  const auto& v = frame->validation();
  std::ostringstream summary;
  summary << "frame label=" << quote(frame->label()) << " d=" << frame->dim()
          << " n=" << frame->size() << " p=" << format_number(frame->p())
          << " q=" << format_number(frame->q())
          << " reconstruction_residual=" << format_number(v.reconstruction_residual)
          << " worst_isometry_error=" << format_number(v.worst_isometry_error)
          << " probes=" << v.probes << "\n";
  emit(g, out, serialize_frame(*frame));
  (g.out.empty() ? err : out) << summary.str();
  res.summary = "n=" + std::to_string(frame->size()) +
                " reconstruction_residual=" + format_number(v.reconstruction_residual) +
                " worst_isometry_error=" + format_number(v.worst_isometry_error);
  return res;
}

// ---- verify ----------------------------------------------------------------

Outcome cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out) {
  Outcome res;
  const std::string source = o.vectors.empty() ? "random:1000:0" : o.vectors;
  res.config = {{"frame_f", o.frame_f}, {"frame_g", o.frame_g}, {"vectors", source}};
  const OutputFormat format = parse_output_format(g.format);

  const PSchauderFrame f = load_frame(o.frame_f);
  const PSchauderFrame gf = load_frame(o.frame_g);
  const UncertaintyChecker pair(f, gf);

  std::vector<Vec> vectors;
  if (source.rfind("random:", 0) == 0) {
    vectors = generate_vectors(source, f.dim(), g.seed);
  } else {
    try {
      vectors = parse_vector_text(read_file(source));
    } catch (const ParseError& e) {
      throw ConfigError(source + ": " + e.what());
    }
  }

  std::string records;
  if (format == OutputFormat::csv) records += report_csv_header() + "\n";
  std::optional<Failure> failure;
  double min1 = 0.0, min2 = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    UncertaintyReport r;
    try {
      r = pair.check(vectors[i], g.rel_tol);
    } catch (const Error& e) {
      throw ConfigError("vector " + std::to_string(i) + ": " + e.what());
    }
    if (i == 0 || r.slack1 < min1) min1 = r.slack1;
    if (i == 0 || r.slack2 < min2) min2 = r.slack2;
    if (!r.holds() && !failure) {
      failure = Failure{r, {vectors[i].begin(), vectors[i].end()}};
    }
    records += report_record(r, i, format) + "\n";
  }
  emit(g, out, records);

  res.summary = "vectors=" + std::to_string(vectors.size()) + " min_slack1=" + format_number(min1) +
                " min_slack2=" + format_number(min2);
  if (failure) {
    const std::string path = certificate_path(g, o.certificate);
    write_file(path, falsification_document(failure->report, failure->witness));
    res.exit_code = kFalsified;
    res.summary += " falsified certificate=" + path;
  }
  return res;
}

// ---- demo ------------------------------------------------------------------

std::string demo_table(const DemoOutcome& d, OutputFormat format, const GlobalOptions& g) {
  const auto& prm = d.params;
  std::ostringstream o;
  const double q = prm.p / (prm.p - 1.0);
  if (format == OutputFormat::csv) {
    o << "demo,instance,checks,min_slack1,min_slack2,holds,detail,p,q,rel_tol\n";
    for (const auto& r : d.rows) {
      o << d.name << ',' << r.instance << ',' << r.checks << ',' << format_number(r.min_slack1)
        << ',' << format_number(r.min_slack2) << ',' << (r.holds ? 1 : 0) << ",\"" << r.detail
        << "\"," << format_number(prm.p) << ',' << format_number(q) << ','
        << format_number(g.rel_tol) << '\n';
    }
    return o.str();
  }
  if (format == OutputFormat::json_lines) {
    for (const auto& r : d.rows) {
      o << "{\"demo\":" << quote(d.name) << ",\"instance\":" << quote(r.instance)
        << ",\"checks\":" << r.checks << ",\"min_slack1\":" << format_number(r.min_slack1)
        << ",\"min_slack2\":" << format_number(r.min_slack2)
        << ",\"holds\":" << (r.holds ? "true" : "false") << ",\"detail\":" << quote(r.detail)
        << ",\"p\":" << format_number(prm.p) << ",\"q\":" << format_number(q)
        << ",\"rel_tol\":" << format_number(g.rel_tol) << "}\n";
    }
    return o.str();
  }
  o << "demo " << d.name << " d=" << prm.d << " p=" << format_number(prm.p)
    << " q=" << format_number(q) << " seed=" << prm.seed << " rel_tol=" << format_number(g.rel_tol)
    << " count=" << prm.count << "\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-34s %7s %24s %24s %5s  %s\n", "instance", "checks",
                "min_slack1", "min_slack2", "holds", "detail");
  o << line;
  for (const auto& r : d.rows) {
    std::snprintf(line, sizeof line, "%-34s %7zu %24s %24s %5s  %s\n", r.instance.c_str(),
                  r.checks, format_number(r.min_slack1).c_str(),
                  format_number(r.min_slack2).c_str(), r.holds ? "yes" : "NO", r.detail.c_str());
    o << line;
  }
  o << (d.all_hold ? "result: all instances hold\n" : "result: VIOLATION\n");
  return o.str();
}

Outcome cmd_demo(const GlobalOptions& g, const DemoOptions& o, std::ostream& out) {
  Outcome res;
  DemoParams prm;
  prm.d = o.d;
  prm.p = o.p;
  prm.n = o.n;
  prm.pairs = o.pairs;
  prm.count = o.count;
  prm.seed = g.seed;
  prm.rel_tol = g.rel_tol;
  const OutputFormat format = parse_output_format(g.format);
  const DemoOutcome d = run_demo(o.name, prm);
  res.config = {{"name", d.name},
                {"d", std::to_string(d.params.d)},
                {"p", format_number(d.params.p)},
                {"n", std::to_string(d.params.n)},
                {"pairs", std::to_string(d.params.pairs)},
                {"count", std::to_string(d.params.count)}};
  emit(g, out, demo_table(d, format, g));
  res.summary = std::to_string(d.rows.size()) + " instances, " +
                (d.all_hold ? "all hold" : "violation");
  if (!d.all_hold) {
    const std::string path = certificate_path(g, o.certificate);
    if (d.failure) {
      write_file(path, falsification_document(d.failure->report, d.failure->witness));
    }
    res.exit_code = kFalsified;
    res.summary += " certificate=" + path;
  }
  return res;
}

// ---- search ----------------------------------------------------------------

std::pair<PSchauderFrame, PSchauderFrame> catalogue_pair(const std::string& name, std::size_t d,
                                                         double p, std::uint64_t seed) {
  if (name == "identity-fourier") {
    if (p != 2.0) throw ConfigError("identity-fourier pair uses p = 2");
    return {identity_frame(d, 2.0), fourier_frame(d)};
  }
  if (name == "identity-identity") return {identity_frame(d, p), identity_frame(d, p)};
  if (name == "random-onb") {
    if (p != 2.0) throw ConfigError("random-onb pair uses p = 2");
    return {parseval_frame_from_unitary(random_unitary(d, derive_seed(seed, 0)), d)
                .relabelled("onb-a(d=" + std::to_string(d) + ")"),
            parseval_frame_from_unitary(random_unitary(d, derive_seed(seed, 1)), d)
                .relabelled("onb-b(d=" + std::to_string(d) + ")")};
  }
  if (name == "splitting") {
    Rng rng(derive_seed(seed, 2));
    const std::size_t parts = std::max<std::size_t>(1, 12 / d);
    PSchauderFrame a = splitting_frame(d, p, random_split_weights(d, parts, rng));
    PSchauderFrame b = splitting_frame(d, p, random_split_weights(d, parts, rng));
    PSchauderFrame mixed = compose_frame(b, random_signed_permutation(b.size(), rng));
    return {std::move(a), std::move(mixed)};
  }
  throw ConfigError("unknown pair '" + name +
                    "' (identity-fourier, identity-identity, random-onb, splitting)");
}

Outcome cmd_search(const GlobalOptions& g, const SearchOptions& o, std::ostream& out) {
  Outcome res;
  SearchConfig cfg;
  cfg.mode = parse_search_mode(o.mode);
  cfg.d = o.d;
  cfg.p = o.p;
  cfg.seed = g.seed;
  cfg.iterations = o.iterations;
  cfg.rel_tol = g.rel_tol;

  std::string pair_name = o.pair.empty() ? (cfg.p == 2.0 ? "identity-fourier" : "splitting") : o.pair;
  std::optional<std::pair<PSchauderFrame, PSchauderFrame>> frames;
  if (!o.frame_f.empty() || !o.frame_g.empty()) {
    if (o.frame_f.empty() || o.frame_g.empty()) {
      throw ConfigError("--frame-f and --frame-g must be given together");
    }
    frames.emplace(load_frame(o.frame_f), load_frame(o.frame_g));
    pair_name = "files";
    cfg.d = frames->first.dim();
    cfg.p = frames->first.p();
  }
  cfg.validate();
  if (!frames) {
    if (cfg.mode == SearchMode::comb) pair_name = "identity-fourier";
    frames.emplace(catalogue_pair(pair_name, cfg.d, cfg.p, cfg.seed));
  }
  res.config = {{"mode", std::string(mode_name(cfg.mode))},
                {"pair", pair_name},
                {"frame_f", o.frame_f},
                {"frame_g", o.frame_g},
                {"d", std::to_string(cfg.d)},
                {"p", format_number(cfg.p)},
                {"iterations", std::to_string(cfg.iterations)}};

  const std::string result_path = g.out.empty() ? "search-result.json" : g.out;
  const std::string trace_path = o.trace.empty() ? result_path + ".trace.csv" : o.trace;
  try {
    const SearchResult r = run_search(cfg, frames->first, frames->second);
    write_file(result_path, serialize_search_result(r));
    write_file(trace_path, trace_csv(r));
    std::ostringstream s;
    s << "mode=" << mode_name(cfg.mode) << " pair=" << pair_name
      << " best_slack1=" << format_number(r.best_slack1)
      << " best_slack2=" << format_number(r.best_slack2)
      << " s_f=" << r.certificate.s_f.count << " s_g=" << r.certificate.s_g.count
      << " equality=" << (r.equality ? "yes" : "no");
    if (!r.combs.empty()) {
      s << " combs:";
      for (const auto& c : r.combs) {
        s << ' ' << c.spacing << "->" << c.product << (c.equality ? "=" : "");
      }
    }
    res.summary = s.str();
    out << res.summary << "\nresult=" << result_path << " trace=" << trace_path << "\n";
  } catch (const Falsification& f) {
    const std::string path = certificate_path(g, o.certificate);
    write_file(path, falsification_document(f.report(), f.witness()));
    res.exit_code = kFalsified;
    res.summary = std::string(f.what()) + " certificate=" + path;
  }
  return res;
}

void apply_search_config(const std::string& path, SearchOptions& o, GlobalOptions& g,
                         const CLI::App& sub, const CLI::App& app) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(path + ": expected a JSON object");
  auto unset = [](const CLI::App& a, const char* name) { return a.get_option(name)->count() == 0; };
  try {
    for (const auto& item : doc.items()) {
      const std::string& k = item.key();
      const auto& v = item.value();
      if (k == "mode") {
        if (unset(sub, "--mode")) o.mode = v.get<std::string>();
      } else if (k == "pair") {
        if (unset(sub, "--pair")) o.pair = v.get<std::string>();
      } else if (k == "d") {
        if (unset(sub, "--d")) o.d = v.get<std::size_t>();
      } else if (k == "p") {
        if (unset(sub, "--p")) o.p = v.get<double>();
      } else if (k == "iterations") {
        if (unset(sub, "--iterations")) o.iterations = v.get<std::size_t>();
      } else if (k == "seed") {
        if (unset(app, "--seed")) g.seed = v.get<std::uint64_t>();
      } else if (k == "rel_tol") {
        if (unset(app, "--rel-tol")) g.rel_tol = v.get<double>();
      } else if (k == "frame_f") {
        if (unset(sub, "--frame-f")) o.frame_f = v.get<std::string>();
      } else if (k == "frame_g") {
        if (unset(sub, "--frame-g")) o.frame_g = v.get<std::string>();
      } else {
        throw ConfigError(path + ": unknown key '" + k + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

// ---- manifest --------------------------------------------------------------

std::string manifest_json(const std::string& command, const GlobalOptions& g, const Outcome& res,
                          double seconds) {
  nlohmann::ordered_json m;
  m["tool"] = "psf";
  m["version"] = std::string(kToolVersion);
  m["command"] = command;
  nlohmann::ordered_json cfg;
  cfg["seed"] = g.seed;
  cfg["rel_tol"] = format_number(g.rel_tol);
  cfg["out"] = g.out;
  cfg["format"] = g.format;
  for (const auto& [k, v] : res.config) cfg[k] = v;
  m["config"] = cfg;
  m["seed"] = g.seed;
  m["kernels"] = std::string(kernels::name(kernels::active_isa()));
  m["duration_seconds"] = seconds;
  m["outcome"] = {{"exit_code", res.exit_code}, {"summary", res.summary}};
  return m.dump(2) + "\n";
}

}  // namespace

Scalar parse_complex(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError(0, "", "empty complex entry");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // split before the last sign that is not an exponent sign or the leading one
  std::size_t pos = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      pos = i;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (pos == std::string::npos) return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, pos)), imag_part(s.substr(pos))};
}

std::vector<Vec> parse_vector_text(std::string_view text) {
  std::vector<Vec> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string line =
        trim(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line.front() == '#') continue;
    std::vector<Scalar> entries;
    std::size_t col = 0;
    for (const auto& item : split(line, ',')) {
      try {
        entries.push_back(parse_complex(item));
      } catch (const ParseError& e) {
        throw ParseError(line_no, "entry " + std::to_string(col), e.what());
      }
      ++col;
    }
    if (!out.empty() && entries.size() != out.front().size()) {
      throw ParseError(line_no, "", "vector length " + std::to_string(entries.size()) +
                                        " differs from first vector (" +
                                        std::to_string(out.front().size()) + ")");
    }
    out.emplace_back(std::move(entries));
  }
  if (out.empty()) throw ParseError(0, "", "no vectors");
  return out;
}

std::vector<Vec> generate_vectors(std::string_view generator, std::size_t d, std::uint64_t default_seed) {
  const auto parts = split(generator, ':');
  if (parts.size() < 3 || parts.size() > 4 || parts[0] != "random") {
    throw ConfigError("vector generator must look like random:count:sparsity[:seed]");
  }
  const std::size_t count = parse_count(parts[1], "count");
  const std::size_t sparsity = parse_count(parts[2], "sparsity");
  const std::uint64_t seed = parts.size() == 4 ? parse_count(parts[3], "seed") : default_seed;
  if (count == 0) throw ConfigError("generator count must be >= 1");
  if (sparsity > d) throw ConfigError("generator sparsity exceeds dimension");
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<Scalar> x(d);
    if (sparsity == 0) {
      x = rng.complex_gaussian_entries(d);
    } else {
      for (std::size_t i : rng.subset(d, sparsity)) x[i] = rng.complex_gaussian();
    }
    if (max_modulus(x) > 0.0) out.emplace_back(std::move(x));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty principles for p-Schauder frames", "psf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--rel-tol", g.rel_tol, "Relative sparsity threshold")->capture_default_str();
  app.add_option("--out", g.out, "Output file (default: stdout)");
  app.add_option("--format", g.format, "Record format")
      ->check(CLI::IsMember({"text", "json-lines", "csv"}))
      ->capture_default_str();
  app.add_option("--manifest", g.manifest, "Run manifest path (default: <out>.manifest.json)");

  MakeFrameOptions mk;
  auto* make = app.add_subcommand("make-frame", "Build and validate a frame document");
  make->add_option("--family", mk.family, "identity|fourier|parseval|splitting|signed-perm")
      ->required();
  make->add_option("--d", mk.d, "Dimension")->required();
  make->add_option("--p", mk.p, "Exponent p")->capture_default_str();
  make->add_option("--n", mk.n, "Unitary size for parseval (default d)");
  make->add_option("--weights", mk.weights, "Splitting weights, e.g. 0.5,0.5;1");
  make->add_option("--perm", mk.perm, "Permutation, e.g. 1,0");
  make->add_option("--phases", mk.phases, "Unimodular phases, e.g. 0+1i,1");
  make->add_option("--label", mk.label, "Frame label");

  VerifyOptions vf;
  auto* verify = app.add_subcommand("verify", "Check the uncertainty inequality for a frame pair");
  verify->add_option("--frame-f", vf.frame_f, "First frame document")->required();
  verify->add_option("--frame-g", vf.frame_g, "Second frame document")->required();
  verify->add_option("--vectors", vf.vectors, "Vector file or random:count:sparsity[:seed]");
  verify->add_option("--certificate", vf.certificate, "Falsification certificate path");

  DemoOptions dm;
  auto* demo = app.add_subcommand("demo", "Reproduce a classical uncertainty principle");
  demo->add_option("name", dm.name, "donoho-stark|elad-bruckstein|ricaud-torresani|general-p")
      ->required();
  demo->add_option("--d", dm.d, "Dimension (per-demo default)");
  demo->add_option("--p", dm.p, "Exponent (general-p only)");
  demo->add_option("--n", dm.n, "Parseval frame size (ricaud-torresani)");
  demo->add_option("--pairs", dm.pairs, "Random frame pairs");
  demo->add_option("--count", dm.count, "Vectors per pair")->capture_default_str();
  demo->add_option("--certificate", dm.certificate, "Falsification certificate path");

  SearchOptions so;
  auto* search = app.add_subcommand("search", "Search for equality cases");
  search->add_option("--mode", so.mode, "comb|exhaustive-ternary|random|anneal")
      ->capture_default_str();
  search->add_option("--pair", so.pair,
                     "identity-fourier|identity-identity|random-onb|splitting");
  search->add_option("--d", so.d, "Dimension")->capture_default_str();
  search->add_option("--p", so.p, "Exponent")->capture_default_str();
  search->add_option("--iterations", so.iterations, "Iterations")->capture_default_str();
  search->add_option("--frame-f", so.frame_f, "First frame document");
  search->add_option("--frame-g", so.frame_g, "Second frame document");
  search->add_option("--config", so.config, "JSON search configuration");
  search->add_option("--trace", so.trace, "Trace CSV path (default <out>.trace.csv)");
  search->add_option("--certificate", so.certificate, "Falsification certificate path");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto t0 = Clock::now();
  std::string command;
  Outcome res;
  try {
    if (make->parsed()) {
      command = "make-frame";
      res = cmd_make_frame(g, mk, out, err);
    } else if (verify->parsed()) {
      command = "verify";
      res = cmd_verify(g, vf, out);
    } else if (demo->parsed()) {
      command = "demo";
      res = cmd_demo(g, dm, out);
    } else {
      command = "search";
      if (!so.config.empty()) apply_search_config(so.config, so, g, *search, app);
      res = cmd_search(g, so, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    res.exit_code = kInputError;
    res.summary = e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  const std::string manifest = manifest_json(command, g, res, seconds);
  const std::string manifest_path =
      !g.manifest.empty() ? g.manifest : (g.out.empty() ? std::string() : g.out + ".manifest.json");
  if (manifest_path.empty()) {
    err << manifest;
  } else {
    try {
      write_file(manifest_path, manifest);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  return res.exit_code;
}

}  // namespace psf::cli
