#include "psf/format.hpp"

#include <cstdio>

#include "json.hpp"

namespace psf {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace psf
