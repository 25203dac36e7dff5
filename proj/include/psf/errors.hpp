#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace psf {

/// Base of every error raised by the library. `kind()` is the stable error
/// name (e.g. "NotReconstructing") that the CLI prints and tests match on.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message);

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}

 protected:
  DomainError(std::string kind, const std::string& message) : Error(std::move(kind), message) {}
};

class NonFiniteError : public DomainError {
 public:
  explicit NonFiniteError(const std::string& message) : DomainError("NonFinite", message) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& message) : Error("ShapeError", message) {}
};

class NotReconstructing : public Error {
 public:
  NotReconstructing(double residual, std::size_t row, std::size_t col);

  double residual() const noexcept { return residual_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  double residual_;
  std::size_t row_;
  std::size_t col_;
};

class NotIsometric : public Error {
 public:
  NotIsometric(std::size_t probe_index, double relative_error);

  std::size_t probe_index() const noexcept { return probe_index_; }
  double relative_error() const noexcept { return relative_error_; }

 private:
  std::size_t probe_index_;
  double relative_error_;
};

class NotUnitary : public Error {
 public:
  explicit NotUnitary(double residual);

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NotParseval : public Error {
 public:
  NotParseval(std::size_t probe_index, double relative_error);

  std::size_t probe_index() const noexcept { return probe_index_; }
  double relative_error() const noexcept { return relative_error_; }

 private:
  std::size_t probe_index_;
  double relative_error_;
};

class BadWeights : public Error {
 public:
  explicit BadWeights(const std::string& message) : Error("BadWeights", message) {}
};

class BadPhase : public Error {
 public:
  explicit BadPhase(const std::string& message) : Error("BadPhase", message) {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("ZeroVector", "vector is numerically zero") {}
};

class NotDivisor : public Error {
 public:
  NotDivisor(std::size_t d, std::size_t spacing);
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& message) : Error("TooLarge", message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("ConfigError", message) {}
};

/// Malformed document. `line` is 0 when the problem is semantic rather than
/// syntactic; `field` names the offending field path.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace psf
