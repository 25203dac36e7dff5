#pragma once

// Dense complex vectors and matrices, l^p norms and the handful of matrix
// builders (DFT, seeded unitaries) the frame constructions need.
// Everything here is an immutable value type; all functions are pure.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace psf {

using Scalar = std::complex<double>;

/// Marker for the sup-norm in `pnorm`.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Smallest accepted p is 1 + kMinExponentGap; closer to 1 the conjugate
/// exponent exceeds 1e6 and the Hoelder steps lose all precision.
inline constexpr double kMinExponentGap = 1e-6;

class Vec {
 public:
  /// Throws ShapeError when empty and NonFiniteError on NaN/Inf entries.
  explicit Vec(std::vector<Scalar> entries);
  Vec(std::initializer_list<Scalar> entries);

  static Vec zeros(std::size_t d);
  static Vec basis(std::size_t d, std::size_t index);
  static Vec ones(std::size_t d);

  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const noexcept { return entries_[i]; }
  const Scalar* data() const noexcept { return entries_.data(); }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool operator==(const Vec&) const = default;

 private:
  std::vector<Scalar> entries_;
};

Vec operator*(Scalar factor, const Vec& x);

/// Row-major dense matrix, at least 1x1.
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t d);
  static Mat zeros(std::size_t rows, std::size_t cols);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Mat from_columns(std::span<const Vec> columns);
  static Mat from_rows(std::span<const Vec> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;
  Mat adjoint() const;
  Mat transpose() const;
  /// First `k` columns, k in [1, cols].
  Mat leading_columns(std::size_t k) const;

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Hoelder pair (p, q) with 1/p + 1/q = 1. Only constructible through
/// `conjugate_exponent`, so q is always derived from p.
class PExponent {
 public:
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  bool operator==(const PExponent&) const = default;

 private:
  friend PExponent conjugate_exponent(double p);
  PExponent(double p, double q) : p_(p), q_(q) {}

  double p_;
  double q_;
};

/// (p, p/(p-1)). DomainError unless p is finite and p >= 1 + kMinExponentGap.
PExponent conjugate_exponent(double p);

/// (sum |x_i|^p)^(1/p) for p >= 1, max |x_i| for p = kInfinity.
double pnorm(std::span<const Scalar> x, double p);
inline double pnorm(const Vec& x, double p) { return pnorm(x.entries(), p); }

/// sum |x_i|^p, without the final root (the quantity the frame axioms use).
double pnorm_pow(std::span<const Scalar> x, double p);

Vec matvec(const Mat& a, const Vec& x);
Mat matmul(const Mat& a, const Mat& b);

double max_modulus(std::span<const Scalar> x);
/// max |a_ij - b_ij|; ShapeError on mismatch.
double max_abs_diff(const Mat& a, const Mat& b);
/// max |a_ij - delta_ij| for square a.
double identity_residual(const Mat& a);

/// Unitary DFT, entry (j, k) = d^(-1/2) exp(-2 pi i jk/d), zero-based.
Mat dft_matrix(std::size_t d);

/// Orthonormalised seeded complex Gaussian matrix.
Mat random_unitary(std::size_t d, std::uint64_t seed);
/// Real counterpart of `random_unitary` (all imaginary parts exactly 0).
Mat random_orthogonal(std::size_t d, std::uint64_t seed);

bool is_real(std::span<const Scalar> x) noexcept;

}  // namespace psf
