#include "psf/frame_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "psf/errors.hpp"
#include "psf/format.hpp"

namespace psf {

namespace {

using nlohmann::json;

void write_matrix(std::ostringstream& out, const Mat& m) {
  out << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << '[' << format_number(m(i, j).real()) << ", " << format_number(m(i, j).imag()) << ']';
    }
    out << (i + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]";
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

const json& require(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw ParseError(0, field, "missing");
  return *it;
}

std::size_t require_count(const json& doc, const char* field) {
  const json& v = require(doc, field);
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(0, field, "expected a positive integer");
  }
  const auto n = v.get<long long>();
  if (n < 1) throw ParseError(0, field, "expected a positive integer");
  return static_cast<std::size_t>(n);
}

Mat read_matrix(const json& doc, const char* field, std::size_t rows, std::size_t cols) {
  const json& m = require(doc, field);
  if (!m.is_array() || m.size() != rows) {
    throw ParseError(0, field, "expected " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> e;
  e.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    const json& row = m[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(0, where, "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const json& z = row[j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError(0, where + "[" + std::to_string(j) + "]", "expected a [re, im] pair");
      }
      e.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return Mat(rows, cols, std::move(e));
}

struct ParsedFrame {
  double p;
  Mat f;
  Mat t;
  std::string label;
};

ParsedFrame parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), "", e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "", "frame document must be a JSON object");

  static const std::set<std::string> known{"version", "label", "p", "dim", "n", "F", "T"};
  for (const auto& item : doc.items()) {
    if (!known.count(item.key())) throw ParseError(0, item.key(), "unknown field");
  }
  const json& version = require(doc, "version");
  if (!version.is_number_integer() || version.get<long long>() != 1) {
    throw ParseError(0, "version", "unsupported version (expected 1)");
  }
  const json& p = require(doc, "p");
  if (!p.is_number()) throw ParseError(0, "p", "expected a number");
  std::string label = "unlabelled";
  if (const auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError(0, "label", "expected a string");
    label = it->get<std::string>();
  }
  const std::size_t dim = require_count(doc, "dim");
  const std::size_t n = require_count(doc, "n");
  return ParsedFrame{p.get<double>(), read_matrix(doc, "F", n, dim), read_matrix(doc, "T", dim, n),
                     std::move(label)};
}

}  // namespace

std::string serialize_frame(const PSchauderFrame& frame) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": 1,\n";
  out << "  \"label\": " << quote(frame.label()) << ",\n";
  out << "  \"p\": " << format_number(frame.p()) << ",\n";
  out << "  \"dim\": " << frame.dim() << ",\n";
  out << "  \"n\": " << frame.size() << ",\n";
  out << "  \"F\": ";
  write_matrix(out, frame.analysis());
  out << ",\n  \"T\": ";
  write_matrix(out, frame.synthesis());
  out << "\n}\n";
  return out.str();
}

PSchauderFrame deserialize_frame(std::string_view text, const ProbeSet& probes) {
  ParsedFrame parsed = parse(text);
  return frame_from_operators(std::move(parsed.f), std::move(parsed.t), parsed.p, probes,
                              std::move(parsed.label));
}

PSchauderFrame deserialize_frame(std::string_view text) {
  ParsedFrame parsed = parse(text);
  const std::size_t d = parsed.f.cols();
  return frame_from_operators(std::move(parsed.f), std::move(parsed.t), parsed.p,
                              make_probe_set(d), std::move(parsed.label));
}

PSchauderFrame load_frame_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "", "cannot open frame file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_frame(buf.str());
}

void save_frame_file(const std::filesystem::path& path, const PSchauderFrame& frame) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << serialize_frame(frame);
}

}  // namespace psf
