#pragma once

#include <string>

namespace psf {

/// Decimal rendering shared by every document and record the tools write:
/// 17 significant digits, which round-trips any double exactly.
std::string format_number(double v);

/// JSON string literal with escaping.
std::string quote(const std::string& s);

}  // namespace psf
