#include "psf/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "psf/errors.hpp"
#include "psf/kernels.hpp"

namespace psf {

namespace {

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

bool rel_le(double a, double b, double tol) { return a <= b * (1.0 + tol); }

// One direction of the proof. `sa` is the support summed over on the
// outside, `b_coeffs` the coefficients expanded through the second frame's
// synthesis vectors; gram(j, k) couples the two.
ProofChain trace_chain(double norm_x_pow, const SparsityCount& sa, const Vec& b_coeffs,
                       const SparsityCount& sb, const CrossGram& cg, double p, double q) {
  const auto& k = kernels::active();
  const std::size_t m = b_coeffs.size();

  std::vector<Scalar> b_masked(m);
  std::vector<double> b_abs(m, 0.0);
  for (std::size_t idx : sb.support) {
    b_masked[idx] = b_coeffs[idx];
    b_abs[idx] = std::abs(b_coeffs[idx]);
  }
  double b_l1 = 0.0;
  for (std::size_t idx : sb.support) b_l1 += b_abs[idx];

  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<double> g_abs(m);
  for (std::size_t j : sa.support) {
    const auto row = cg.gram.row(j);
    c1 += std::pow(std::abs(k.dot(row.data(), b_masked.data(), m)), p);
    k.modulus(row.data(), g_abs.data(), m);
    double s = 0.0;
    for (std::size_t idx : sb.support) s += b_abs[idx] * g_abs[idx];
    c2 += std::pow(s, p);
  }

  const double mu_p = std::pow(cg.mu, p);
  const double s_a = static_cast<double>(sa.count);
  const double s_b_pow = std::pow(static_cast<double>(sb.count), p / q);
  const double c34 = mu_p * s_a * std::pow(b_l1, p);
  const double c5 = mu_p * s_a * pnorm_pow(b_coeffs.entries(), p) * s_b_pow;
  const double c6 = mu_p * s_a * norm_x_pow * s_b_pow;

  ProofChain chain;
  chain.values = {norm_x_pow, c1, c2, c34, c34, c5, c6};
  auto fail = [&chain](const char* step) {
    if (chain.ok) chain.violation = step;
    chain.ok = false;
  };
  if (!rel_close(norm_x_pow, c1, kChainEqualityTolerance)) fail("c0=c1");
  if (!rel_le(c1, c2, kChainInequalityTolerance)) fail("c1<=c2");
  if (!rel_le(c2, c34, kChainInequalityTolerance)) fail("c2<=c3");
  if (!rel_le(c34, c5, kChainInequalityTolerance)) fail("c4<=c5");
  if (!rel_close(c5, c6, kChainEqualityTolerance)) fail("c5=c6");
  if (!rel_le(norm_x_pow, c6, kChainEqualityTolerance)) fail("c0<=c6");
  return chain;
}

}  // namespace

SparsityCount sparsity(std::span<const Scalar> x, double rel_tol) {
  if (!(rel_tol >= 0.0)) throw DomainError("rel_tol must be >= 0");
  SparsityCount s;
  s.tolerance = rel_tol;
  std::vector<double> m(x.size());
  kernels::active().modulus(x.data(), m.data(), m.size());
  const double top = m.empty() ? 0.0 : *std::max_element(m.begin(), m.end());
  if (top == 0.0) return s;
  const double threshold = rel_tol * top;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > threshold) s.support.push_back(i);
    if (m[i] > threshold / kFragileFactor && m[i] < threshold * kFragileFactor) s.fragile = true;
  }
  s.count = s.support.size();
  return s;
}

CrossGram cross_gram(const PSchauderFrame& f, const PSchauderFrame& g) {
  if (f.dim() != g.dim()) {
    throw ShapeError("cross_gram: frames act on K^" + std::to_string(f.dim()) + " and K^" +
                     std::to_string(g.dim()));
  }
  Mat gram = matmul(f.analysis(), g.synthesis());
  const double mu = max_modulus(gram.entries());
  return CrossGram{std::move(gram), mu};
}

double sparsity_product_root(std::size_t s_first, std::size_t s_second, double p, double q) {
  if (p == 2.0 && q == 2.0) {
    return std::sqrt(static_cast<double>(s_first) * static_cast<double>(s_second));
  }
  return std::pow(static_cast<double>(s_first), 1.0 / p) *
         std::pow(static_cast<double>(s_second), 1.0 / q);
}

UncertaintyChecker::UncertaintyChecker(PSchauderFrame f, PSchauderFrame g)
    : f_(std::move(f)),
      g_(std::move(g)),
      forward_(cross_gram(f_, g_)),
      backward_(cross_gram(g_, f_)) {
  if (f_.p() != g_.p()) {
    throw DomainError("frames use different exponents (p = " + std::to_string(f_.p()) + " and " +
                      std::to_string(g_.p()) + ")");
  }
}

UncertaintyReport UncertaintyChecker::check(const Vec& x, double rel_tol) const {
  if (x.size() != f_.dim()) {
    throw ShapeError("vector has " + std::to_string(x.size()) + " entries, frames act on K^" +
                     std::to_string(f_.dim()));
  }
  const double p = f_.p();
  const double q = f_.q();
  const double norm_x_pow = pnorm_pow(x.entries(), p);
  if (!(norm_x_pow > 0.0)) throw ZeroVector();

  const Vec a = f_.coefficients(x);
  const Vec b = g_.coefficients(x);

  UncertaintyReport r;
  r.p = p;
  r.q = q;
  r.rel_tol = rel_tol;
  r.label_f = f_.label();
  r.label_g = g_.label();
  r.s_f = sparsity(a, rel_tol);
  r.s_g = sparsity(b, rel_tol);
  r.mu_fw = forward_.mu;
  r.mu_gt = backward_.mu;
  r.lhs1 = sparsity_product_root(r.s_f.count, r.s_g.count, p, q);
  r.lhs2 = sparsity_product_root(r.s_g.count, r.s_f.count, p, q);
  r.bound1 = 1.0 / r.mu_fw;
  r.bound2 = 1.0 / r.mu_gt;
  r.slack1 = r.lhs1 - r.bound1;
  r.slack2 = r.lhs2 - r.bound2;
  r.chain1 = trace_chain(norm_x_pow, r.s_f, b, r.s_g, forward_, p, q);
  r.chain2 = trace_chain(norm_x_pow, r.s_g, a, r.s_f, backward_, p, q);
  return r;
}

UncertaintyReport check_uncertainty(const PSchauderFrame& f, const PSchauderFrame& g, const Vec& x,
                                    double rel_tol) {
  return UncertaintyChecker(f, g).check(x, rel_tol);
}

DonohoStark donoho_stark_product(const Vec& x, const PSchauderFrame& fourier, double rel_tol) {
  if (fourier.dim() != x.size()) throw ShapeError("Fourier frame dimension differs from vector");
  if (max_modulus(x.entries()) == 0.0) throw ZeroVector();
  DonohoStark ds;
  ds.support = sparsity(x, rel_tol).count;
  ds.spectral_support = sparsity(fourier.coefficients(x), rel_tol).count;
  ds.product = ds.support * ds.spectral_support;
  ds.bound_holds = ds.product >= x.size();
  const std::size_t sum = ds.support + ds.spectral_support;
  ds.am_gm_holds = sum * sum >= 4 * ds.product;
  return ds;
}

DonohoStark donoho_stark_product(const Vec& x, double rel_tol) {
  return donoho_stark_product(x, fourier_frame(x.size()), rel_tol);
}

HilbertReduction hilbert_reduction(const std::vector<Vec>& tau, const std::vector<Vec>& omega) {
  if (tau.empty() || omega.empty()) throw ShapeError("hilbert_reduction: empty vector family");
  const std::size_t d = tau.front().size();
  for (const auto* family : {&tau, &omega}) {
    for (const Vec& v : *family) {
      if (v.size() != d) throw ShapeError("hilbert_reduction: vectors of unequal length");
      if (!is_real(v.entries())) {
        throw DomainError("hilbert_reduction is restricted to real scalars");
      }
    }
  }

  const ProbeSet probes = make_probe_set(d);
  auto induce = [&](const std::vector<Vec>& family, const char* name) {
    // f_j = <., tau_j>: row j of F is conj(tau_j), which for real data is tau_j
    std::vector<Vec> rows;
    rows.reserve(family.size());
    for (const Vec& v : family) {
      std::vector<Scalar> c(v.begin(), v.end());
      for (auto& z : c) z = std::conj(z);
      rows.emplace_back(std::move(c));
    }
    Mat analysis = Mat::from_rows(rows);
    Mat synthesis = Mat::from_columns(family);
    for (std::size_t k = 0; k < probes.vectors.size(); ++k) {
      const Vec& x = probes.vectors[k];
      const Vec back = matvec(synthesis, matvec(analysis, x));
      double err = 0.0;
      for (std::size_t i = 0; i < d; ++i) err = std::max(err, std::abs(back[i] - x[i]));
      const double rel = err / max_modulus(x.entries());
      if (rel > kReconstructionTolerance) throw NotParseval(k, rel);
    }
    return frame_from_operators(std::move(analysis), std::move(synthesis), 2.0, probes,
                                std::string(name) + "(n=" + std::to_string(family.size()) +
                                    ",d=" + std::to_string(d) + ")");
  };

  PSchauderFrame f = induce(tau, "parseval-tau");
  PSchauderFrame g = induce(omega, "parseval-omega");

  const std::size_t n = tau.size();
  const std::size_t m = omega.size();
  std::vector<Scalar> ot(n * m);
  std::vector<Scalar> to(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      Scalar a{0.0, 0.0};
      Scalar b{0.0, 0.0};
      for (std::size_t i = 0; i < d; ++i) {
        a += omega[k][i] * std::conj(tau[j][i]);
        b += tau[j][i] * std::conj(omega[k][i]);
      }
      ot[j * m + k] = a;
      to[j * m + k] = b;
    }
  }
  return HilbertReduction{std::move(f), std::move(g), Mat(n, m, std::move(ot)),
                          Mat(n, m, std::move(to))};
}

}  // namespace psf
