#include "psf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "psf/errors.hpp"
#include "psf/kernels.hpp"
#include "psf/random.hpp"

namespace psf {

namespace {

bool finite(const Scalar& z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Scalar> xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!finite(xs[i])) {
      throw NonFiniteError(std::string(what) + " entry " + std::to_string(i) + " is not finite");
    }
  }
}

Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v) {
  // <v, u> with conjugate on u
  Scalar s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

// Two-pass modified Gram-Schmidt on the columns of a square matrix.
// Columns are stored contiguously in `cols` (column-major).
Mat orthonormalise_columns(std::vector<Scalar> cols, std::size_t d) {
  for (std::size_t j = 0; j < d; ++j) {
    std::span<Scalar> v(cols.data() + j * d, d);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        std::span<const Scalar> qi(cols.data() + i * d, d);
        const Scalar c = inner(qi, v);
        for (std::size_t r = 0; r < d; ++r) v[r] -= c * qi[r];
      }
    }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw DomainError("degenerate Gaussian draw during orthonormalisation");
    for (auto& z : v) z /= norm;
  }
  std::vector<Scalar> rowmajor(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < d; ++r) rowmajor[r * d + j] = cols[j * d + r];
  }
  return Mat(d, d, std::move(rowmajor));
}

}  // namespace

// ---- Vec -------------------------------------------------------------------

Vec::Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ShapeError("vector must have at least one entry");
  require_finite(entries_, "vector");
}

Vec::Vec(std::initializer_list<Scalar> entries) : Vec(std::vector<Scalar>(entries)) {}

Vec Vec::zeros(std::size_t d) { return Vec(std::vector<Scalar>(d)); }

Vec Vec::basis(std::size_t d, std::size_t index) {
  if (index >= d) throw ShapeError("basis index out of range");
  std::vector<Scalar> v(d);
  v[index] = 1.0;
  return Vec(std::move(v));
}

Vec Vec::ones(std::size_t d) { return Vec(std::vector<Scalar>(d, Scalar{1.0, 0.0})); }

Vec operator*(Scalar factor, const Vec& x) {
  std::vector<Scalar> v(x.begin(), x.end());
  for (auto& z : v) z *= factor;
  return Vec(std::move(v));
}

// ---- Mat -------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must be at least 1x1");
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                     std::to_string(entries_.size()) + " entries");
  }
  require_finite(entries_, "matrix");
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must be at least 1x1");
  require_finite(entries_, "matrix");
}

Mat Mat::identity(std::size_t d) {
  std::vector<Scalar> e(d * d);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1.0;
  return Mat(d, d, std::move(e));
}

Mat Mat::zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, cols, std::vector<Scalar>(rows * cols));
}

Mat Mat::from_columns(std::span<const Vec> columns) {
  if (columns.empty()) throw ShapeError("no columns");
  const std::size_t r = columns[0].size();
  const std::size_t c = columns.size();
  std::vector<Scalar> e(r * c);
  for (std::size_t j = 0; j < c; ++j) {
    if (columns[j].size() != r) throw ShapeError("columns of unequal length");
    for (std::size_t i = 0; i < r; ++i) e[i * c + j] = columns[j][i];
  }
  return Mat(r, c, std::move(e));
}

Mat Mat::from_rows(std::span<const Vec> rows) {
  if (rows.empty()) throw ShapeError("no rows");
  const std::size_t c = rows[0].size();
  std::vector<Scalar> e;
  e.reserve(rows.size() * c);
  for (const auto& r : rows) {
    if (r.size() != c) throw ShapeError("rows of unequal length");
    e.insert(e.end(), r.begin(), r.end());
  }
  return Mat(rows.size(), c, std::move(e));
}

Vec Mat::row_vec(std::size_t r) const {
  const auto s = row(r);
  return Vec(std::vector<Scalar>(s.begin(), s.end()));
}

Vec Mat::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return Vec(std::move(v));
}

Mat Mat::adjoint() const {
  std::vector<Scalar> e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = std::conj((*this)(i, j));
  }
  return Mat(cols_, rows_, std::move(e));
}

Mat Mat::transpose() const {
  std::vector<Scalar> e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
  }
  return Mat(cols_, rows_, std::move(e));
}

Mat Mat::leading_columns(std::size_t k) const {
  if (k == 0 || k > cols_) throw ShapeError("leading_columns: k out of range");
  std::vector<Scalar> e(rows_ * k);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < k; ++j) e[i * k + j] = (*this)(i, j);
  }
  return Mat(rows_, k, std::move(e));
}

// ---- exponents and norms ---------------------------------------------------

PExponent conjugate_exponent(double p) {
  if (!std::isfinite(p)) throw DomainError("p must be finite");
  if (p <= 1.0) throw DomainError("p must exceed 1, got " + std::to_string(p));
  if (p < 1.0 + kMinExponentGap) {
    throw DomainError("p too close to 1 (conjugate exponent would exceed 1e6)");
  }
  return PExponent(p, p / (p - 1.0));
}

double pnorm_pow(std::span<const Scalar> x, double p) {
  if (std::isnan(p) || p < 1.0 || std::isinf(p)) {
    throw DomainError("pnorm_pow needs finite p >= 1");
  }
  const auto& k = kernels::active();
  if (p == 1.0) return k.sum_modulus(x.data(), x.size());
  if (p == 2.0) return k.sum_sq_modulus(x.data(), x.size());
  std::vector<double> m(x.size());
  k.modulus(x.data(), m.data(), m.size());
  double s = 0.0;
  for (double v : m) s += std::pow(v, p);
  return s;
}

namespace {

// Power-of-two factor bringing the largest component near 1, or 1 when the
// squares of all entries are representable. Scaling by it is exact.
double rescale_factor(std::span<const Scalar> x) {
  double cmax = 0.0;
  for (const Scalar& z : x) cmax = std::max({cmax, std::abs(z.real()), std::abs(z.imag())});
  if (cmax == 0.0 || (cmax < 1e150 && cmax > 1e-150)) return 1.0;
  return std::ldexp(1.0, -std::ilogb(cmax));
}

double pnorm_unscaled(std::span<const Scalar> x, double p) {
  const auto& k = kernels::active();
  if (p == 1.0) return k.sum_modulus(x.data(), x.size());
  if (p == 2.0) return std::sqrt(k.sum_sq_modulus(x.data(), x.size()));
  // max * (sum (|x_i|/max)^p)^(1/p)
  std::vector<double> m(x.size());
  k.modulus(x.data(), m.data(), m.size());
  const double top = m.empty() ? 0.0 : *std::max_element(m.begin(), m.end());
  if (top == 0.0) return 0.0;
  double s = 0.0;
  for (double v : m) s += std::pow(v / top, p);
  return top * std::pow(s, 1.0 / p);
}

}  // namespace

double pnorm(std::span<const Scalar> x, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("pnorm needs p >= 1");
  const double scale = rescale_factor(x);
  if (scale == 1.0) {
    if (std::isinf(p)) return kernels::active().max_modulus(x.data(), x.size());
    return pnorm_unscaled(x, p);
  }
  std::vector<Scalar> y(x.begin(), x.end());
  for (Scalar& z : y) z *= scale;
  const double n = std::isinf(p) ? kernels::active().max_modulus(y.data(), y.size())
                                 : pnorm_unscaled(y, p);
  return n / scale;
}

double max_modulus(std::span<const Scalar> x) {
  return kernels::active().max_modulus(x.data(), x.size());
}

// ---- products --------------------------------------------------------------

Vec matvec(const Mat& a, const Vec& x) {
  if (a.cols() != x.size()) {
    throw ShapeError("matvec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                     std::to_string(x.size()) + " entries");
  }
  const auto& k = kernels::active();
  std::vector<Scalar> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = k.dot(a.row(i).data(), x.data(), x.size());
  return Vec(std::move(y));
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Mat bt = b.transpose();
  const auto& k = kernels::active();
  std::vector<Scalar> c(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      c[i * b.cols() + j] = k.dot(a.row(i).data(), bt.row(j).data(), a.cols());
    }
  }
  return Mat(a.rows(), b.cols(), std::move(c));
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

double identity_residual(const Mat& a) {
  if (a.rows() != a.cols()) throw ShapeError("identity_residual: matrix not square");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar target = i == j ? Scalar{1.0, 0.0} : Scalar{0.0, 0.0};
      m = std::max(m, std::abs(a(i, j) - target));
    }
  }
  return m;
}

// ---- builders --------------------------------------------------------------

Mat dft_matrix(std::size_t d) {
  if (d == 0) throw ShapeError("dft_matrix: d must be >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Scalar> e(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t r = (j * k) % d;
      Scalar w;
      if ((4 * r) % d == 0) {
        // quarter turns are exact: 1, -i, -1, i
        switch ((4 * r) / d) {
          case 0: w = {1.0, 0.0}; break;
          case 1: w = {0.0, -1.0}; break;
          case 2: w = {-1.0, 0.0}; break;
          default: w = {0.0, 1.0}; break;
        }
      } else {
        const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(d);
        w = {std::cos(angle), -std::sin(angle)};
      }
      e[j * d + k] = scale * w;
    }
  }
  return Mat(d, d, std::move(e));
}

Mat random_unitary(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw ShapeError("random_unitary: d must be >= 1");
  Rng rng(seed);
  return orthonormalise_columns(rng.complex_gaussian_entries(d * d), d);
}

Mat random_orthogonal(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw ShapeError("random_orthogonal: d must be >= 1");
  Rng rng(seed);
  std::vector<Scalar> cols(d * d);
  for (auto& z : cols) z = {rng.gaussian(), 0.0};
  return orthonormalise_columns(std::move(cols), d);
}

bool is_real(std::span<const Scalar> x) noexcept {
  return std::all_of(x.begin(), x.end(), [](const Scalar& z) { return z.imag() == 0.0; });
}

}  // namespace psf
