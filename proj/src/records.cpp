#include "psf/records.hpp"

#include <sstream>

#include "psf/errors.hpp"
#include "psf/format.hpp"

namespace psf {

namespace {

std::string chain_values_compact(const ProofChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i) s += ',';
    s += format_number(c.values[i]);
  }
  return s;
}

std::string chain_json(const ProofChain& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    s += quote(std::string(ProofChain::kLabels[i])) + ":" + format_number(c.values[i]) + ",";
  }
  s += "\"ok\":" + std::string(c.ok ? "true" : "false");
  s += ",\"violation\":" + quote(c.violation) + "}";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string report_json_body(const UncertaintyReport& r) {
  std::string s;
  s += "\"label_f\":" + quote(r.label_f);
  s += ",\"label_g\":" + quote(r.label_g);
  s += ",\"p\":" + format_number(r.p);
  s += ",\"q\":" + format_number(r.q);
  s += ",\"rel_tol\":" + format_number(r.rel_tol);
  s += ",\"s_f\":" + std::to_string(r.s_f.count);
  s += ",\"s_g\":" + std::to_string(r.s_g.count);
  s += ",\"fragile\":" + std::string(r.fragile() ? "true" : "false");
  s += ",\"mu_fw\":" + format_number(r.mu_fw);
  s += ",\"mu_gt\":" + format_number(r.mu_gt);
  s += ",\"lhs1\":" + format_number(r.lhs1);
  s += ",\"bound1\":" + format_number(r.bound1);
  s += ",\"slack1\":" + format_number(r.slack1);
  s += ",\"lhs2\":" + format_number(r.lhs2);
  s += ",\"bound2\":" + format_number(r.bound2);
  s += ",\"slack2\":" + format_number(r.slack2);
  s += ",\"chain1\":" + chain_json(r.chain1);
  s += ",\"chain2\":" + chain_json(r.chain2);
  s += ",\"holds\":" + std::string(r.holds() ? "true" : "false");
  return s;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json-lines") return OutputFormat::json_lines;
  if (name == "csv") return OutputFormat::csv;
  throw ConfigError("unknown format '" + std::string(name) + "' (text, json-lines, csv)");
}

std::string_view format_name(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::text: return "text";
    case OutputFormat::json_lines: return "json-lines";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

std::string report_text(const UncertaintyReport& r, std::size_t index) {
  std::ostringstream o;
  o << "index=" << index << " label_f=" << quote(r.label_f) << " label_g=" << quote(r.label_g)
    << " p=" << format_number(r.p) << " q=" << format_number(r.q)
    << " rel_tol=" << format_number(r.rel_tol) << " s_f=" << r.s_f.count << " s_g=" << r.s_g.count
    << " fragile=" << (r.fragile() ? 1 : 0) << " mu_fw=" << format_number(r.mu_fw)
    << " mu_gt=" << format_number(r.mu_gt) << " lhs1=" << format_number(r.lhs1)
    << " bound1=" << format_number(r.bound1) << " slack1=" << format_number(r.slack1)
    << " lhs2=" << format_number(r.lhs2) << " bound2=" << format_number(r.bound2)
    << " slack2=" << format_number(r.slack2) << " chain1=" << chain_values_compact(r.chain1)
    << " chain1_ok=" << (r.chain1.ok ? 1 : 0) << " chain2=" << chain_values_compact(r.chain2)
    << " chain2_ok=" << (r.chain2.ok ? 1 : 0) << " holds=" << (r.holds() ? 1 : 0);
  return o.str();
}

std::string report_json(const UncertaintyReport& r) { return "{" + report_json_body(r) + "}"; }

std::string report_json(const UncertaintyReport& r, std::size_t index) {
  return "{\"index\":" + std::to_string(index) + "," + report_json_body(r) + "}";
}

std::string report_csv_header() {
  return "index,label_f,label_g,p,q,rel_tol,s_f,s_g,fragile,mu_fw,mu_gt,lhs1,bound1,slack1,"
         "lhs2,bound2,slack2,chain1_ok,chain2_ok,holds";
}

std::string report_csv_row(const UncertaintyReport& r, std::size_t index) {
  std::ostringstream o;
  o << index << ',' << csv_field(r.label_f) << ',' << csv_field(r.label_g) << ','
    << format_number(r.p) << ',' << format_number(r.q) << ',' << format_number(r.rel_tol) << ','
    << r.s_f.count << ',' << r.s_g.count << ',' << (r.fragile() ? 1 : 0) << ','
    << format_number(r.mu_fw) << ',' << format_number(r.mu_gt) << ',' << format_number(r.lhs1)
    << ',' << format_number(r.bound1) << ',' << format_number(r.slack1) << ','
    << format_number(r.lhs2) << ',' << format_number(r.bound2) << ','
    << format_number(r.slack2) << ',' << (r.chain1.ok ? 1 : 0) << ',' << (r.chain2.ok ? 1 : 0)
    << ',' << (r.holds() ? 1 : 0);
  return o.str();
}

std::string report_record(const UncertaintyReport& r, std::size_t index, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return report_text(r, index);
    case OutputFormat::json_lines: return report_json(r, index);
    case OutputFormat::csv: return report_csv_row(r, index);
  }
  return report_text(r, index);
}

std::string complex_array_json(std::span<const Scalar> x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += "[" + format_number(x[i].real()) + ", " + format_number(x[i].imag()) + "]";
  }
  return s + "]";
}

std::string falsification_document(const UncertaintyReport& r, std::span<const Scalar> witness) {
  std::string s = "{\n";
  s += "  \"version\": 1,\n";
  s += "  \"kind\": \"falsification\",\n";
  s += "  \"witness\": " + complex_array_json(witness) + ",\n";
  s += "  \"report\": " + report_json(r) + "\n";
  s += "}\n";
  return s;
}

}  // namespace psf
