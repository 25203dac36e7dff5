#include "psf/errors.hpp"

#include <cstdio>

namespace psf {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

NotReconstructing::NotReconstructing(double residual, std::size_t row, std::size_t col)
    : Error("NotReconstructing", "max |T*F - I| = " + sci(residual) + " at (" +
                                     std::to_string(row) + "," + std::to_string(col) +
                                     ") exceeds 1e-10"),
      residual_(residual),
      row_(row),
      col_(col) {}

NotIsometric::NotIsometric(std::size_t probe_index, double relative_error)
    : Error("NotIsometric", "probe " + std::to_string(probe_index) +
                                " has relative isometry error " + sci(relative_error) +
                                " (limit 1e-9)"),
      probe_index_(probe_index),
      relative_error_(relative_error) {}

NotUnitary::NotUnitary(double residual)
    : Error("NotUnitary", "max |W^H W - I| = " + sci(residual) + " exceeds 1e-10"),
      residual_(residual) {}

NotParseval::NotParseval(std::size_t probe_index, double relative_error)
    : Error("NotParseval", "probe " + std::to_string(probe_index) +
                               " is not reconstructed, relative error " + sci(relative_error)),
      probe_index_(probe_index),
      relative_error_(relative_error) {}

NotDivisor::NotDivisor(std::size_t d, std::size_t spacing)
    : Error("NotDivisor",
            "spacing " + std::to_string(spacing) + " does not divide d = " + std::to_string(d)) {}

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : Error("ParseError", (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                              (field.empty() ? std::string() : "field '" + field + "': ") +
                              message),
      line_(line),
      field_(std::move(field)) {}

}  // namespace psf
