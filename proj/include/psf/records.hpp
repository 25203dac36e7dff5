#pragma once

// Serialised forms of UncertaintyReport: a flat key=value text line, a JSON
// object (one per line for json-lines output) and a CSV row. All numbers go
// through format_number.

#include <cstddef>
#include <string>
#include <string_view>

#include "psf/numerics.hpp"
#include "psf/uncertainty.hpp"

namespace psf {

enum class OutputFormat { text, json_lines, csv };

/// ConfigError for anything but "text", "json-lines", "csv".
OutputFormat parse_output_format(std::string_view name);
std::string_view format_name(OutputFormat format) noexcept;

std::string report_text(const UncertaintyReport& r, std::size_t index);
std::string report_json(const UncertaintyReport& r);
std::string report_json(const UncertaintyReport& r, std::size_t index);
std::string report_csv_header();
std::string report_csv_row(const UncertaintyReport& r, std::size_t index);

/// One record (without trailing newline) in the requested format.
std::string report_record(const UncertaintyReport& r, std::size_t index, OutputFormat format);

/// [[re, im], ...]
std::string complex_array_json(std::span<const Scalar> x);

/// Document written whenever a check violates the inequality or its proof
/// chain: the offending vector plus the full report.
std::string falsification_document(const UncertaintyReport& r, std::span<const Scalar> witness);

}  // namespace psf
