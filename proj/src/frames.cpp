#include "psf/frames.hpp"

#include <cmath>
#include <cstdio>

#include "psf/errors.hpp"
#include "psf/random.hpp"

namespace psf {

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

ProbeSet make_probe_set(std::size_t d, std::uint64_t seed, std::size_t random_probes) {
  if (d == 0) throw ShapeError("probe set needs d >= 1");
  ProbeSet set;
  set.seed = seed;
  set.vectors.reserve(d + 1 + random_probes);
  for (std::size_t i = 0; i < d; ++i) set.vectors.push_back(Vec::basis(d, i));
  set.vectors.push_back(Vec::ones(d));
  Rng rng(seed);
  while (set.vectors.size() < d + 1 + random_probes) {
    auto entries = rng.complex_gaussian_entries(d);
    Vec v(std::move(entries));
    if (max_modulus(v.entries()) > 0.0) set.vectors.push_back(std::move(v));
  }
  set.count = set.vectors.size();
  return set;
}

FrameValidation validate_frame(const Mat& analysis, const Mat& synthesis, const PExponent& p,
                               const ProbeSet& probes) {
  const std::size_t n = analysis.rows();
  const std::size_t d = analysis.cols();
  if (synthesis.rows() != d || synthesis.cols() != n) {
    throw ShapeError("synthesis must be " + std::to_string(d) + "x" + std::to_string(n) + ", got " +
                     std::to_string(synthesis.rows()) + "x" + std::to_string(synthesis.cols()));
  }
  if (n < d) {
    throw ShapeError("n = " + std::to_string(n) + " < d = " + std::to_string(d) +
                     ": reconstruction impossible");
  }

  FrameValidation v;
  const Mat tf = matmul(synthesis, analysis);
  std::size_t wr = 0, wc = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar target = i == j ? Scalar{1.0, 0.0} : Scalar{0.0, 0.0};
      const double r = std::abs(tf(i, j) - target);
      if (r > v.reconstruction_residual) {
        v.reconstruction_residual = r;
        wr = i;
        wc = j;
      }
    }
  }
  if (v.reconstruction_residual > kReconstructionTolerance) {
    throw NotReconstructing(v.reconstruction_residual, wr, wc);
  }

  for (std::size_t k = 0; k < probes.vectors.size(); ++k) {
    const Vec& x = probes.vectors[k];
    if (x.size() != d) throw ShapeError("probe dimension does not match frame dimension");
    const double nx = pnorm(x, p.p());
    const double nfx = pnorm(matvec(analysis, x), p.p());
    const double err = std::abs(nfx - nx) / nx;
    if (err > v.worst_isometry_error) {
      v.worst_isometry_error = err;
      v.worst_probe = k;
    }
    if (err > kIsometryTolerance) throw NotIsometric(k, err);
  }
  v.probes = probes.vectors.size();
  return v;
}

PSchauderFrame::PSchauderFrame(PExponent exponent, Mat analysis, Mat synthesis, std::string label,
                               FrameValidation validation)
    : exponent_(exponent),
      analysis_(std::move(analysis)),
      synthesis_(std::move(synthesis)),
      label_(std::move(label)),
      validation_(validation) {}

PSchauderFrame PSchauderFrame::relabelled(std::string label) const {
  PSchauderFrame copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

PSchauderFrame frame_from_operators(Mat analysis, Mat synthesis, double p, const ProbeSet& probes,
                                    std::string label) {
  const PExponent exponent = conjugate_exponent(p);
  const FrameValidation v = validate_frame(analysis, synthesis, exponent, probes);
  return PSchauderFrame(exponent, std::move(analysis), std::move(synthesis), std::move(label), v);
}

PSchauderFrame frame_from_operators(Mat analysis, Mat synthesis, double p, std::string label) {
  const ProbeSet probes = make_probe_set(analysis.cols());
  return frame_from_operators(std::move(analysis), std::move(synthesis), p, probes,
                              std::move(label));
}

PSchauderFrame identity_frame(std::size_t d, double p) {
  return frame_from_operators(Mat::identity(d), Mat::identity(d), p,
                              "identity(d=" + std::to_string(d) + ",p=" + short_number(p) + ")");
}

PSchauderFrame fourier_frame(std::size_t d) {
  Mat f = dft_matrix(d);
  Mat t = f.adjoint();
  return frame_from_operators(std::move(f), std::move(t), 2.0,
                              "fourier(d=" + std::to_string(d) + ")");
}

PSchauderFrame parseval_frame_from_unitary(const Mat& w, std::size_t d) {
  if (w.rows() != w.cols()) throw ShapeError("parseval_frame_from_unitary: W must be square");
  const std::size_t n = w.rows();
  if (d == 0 || d > n) {
    throw ShapeError("parseval_frame_from_unitary: need 1 <= d <= n = " + std::to_string(n));
  }
  const double residual = identity_residual(matmul(w.adjoint(), w));
  if (residual > kUnitaryTolerance) throw NotUnitary(residual);
  Mat f = w.leading_columns(d);
  Mat t = f.adjoint();
  return frame_from_operators(std::move(f), std::move(t), 2.0,
                              "parseval(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")");
}

PSchauderFrame splitting_frame(std::size_t d, double p, const SplitWeights& weights) {
  const PExponent exponent = conjugate_exponent(p);
  if (d == 0) throw ShapeError("splitting_frame: d must be >= 1");
  if (weights.size() != d) {
    throw BadWeights("expected " + std::to_string(d) + " weight lists, got " +
                     std::to_string(weights.size()));
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const auto& ws = weights[i];
    if (ws.empty()) throw BadWeights("weight list " + std::to_string(i) + " is empty");
    double sum = 0.0;
    for (double w : ws) {
      if (!std::isfinite(w) || w <= 0.0) {
        throw BadWeights("weight list " + std::to_string(i) + " has a non-positive entry");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
      throw BadWeights("weight list " + std::to_string(i) + " sums to " + short_number(sum) +
                       ", not 1");
    }
    n += ws.size();
  }

  const double inv_p = 1.0 / exponent.p();
  const double inv_q = 1.0 / exponent.q();
  std::vector<Scalar> f(n * d);
  std::vector<Scalar> t(d * n);
  std::size_t j = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (double w : weights[i]) {
      f[j * d + i] = std::pow(w, inv_p);
      t[i * n + j] = std::pow(w, inv_q);
      ++j;
    }
  }
  return frame_from_operators(Mat(n, d, std::move(f)), Mat(d, n, std::move(t)), p,
                              "splitting(d=" + std::to_string(d) + ",n=" + std::to_string(n) +
                                  ",p=" + short_number(p) + ")");
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation s;
  s.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.perm[i] = i;
  s.phases.assign(n, Scalar{1.0, 0.0});
  return s;
}

void SignedPermutation::validate() const {
  const std::size_t n = perm.size();
  if (n == 0) throw ShapeError("signed permutation must be non-empty");
  if (phases.size() != n) throw ShapeError("signed permutation: perm and phases differ in length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) throw DomainError("perm is not a bijection on {0.." + std::to_string(n - 1) + "}");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(std::abs(phases[i]) - 1.0) > kPhaseTolerance) {
      throw BadPhase("phase " + std::to_string(i) + " has modulus " +
                     short_number(std::abs(phases[i])));
    }
  }
}

Mat SignedPermutation::matrix() const {
  validate();
  const std::size_t n = perm.size();
  std::vector<Scalar> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + perm[i]] = phases[i];
  return Mat(n, n, std::move(e));
}

Mat SignedPermutation::inverse() const {
  validate();
  const std::size_t n = perm.size();
  std::vector<Scalar> e(n * n);
  // unitary: inverse is the adjoint, using the conjugate phase
  for (std::size_t i = 0; i < n; ++i) e[perm[i] * n + i] = std::conj(phases[i]);
  return Mat(n, n, std::move(e));
}

PSchauderFrame signed_permutation_frame(std::size_t d, double p, const SignedPermutation& iso) {
  if (iso.size() != d) throw ShapeError("signed permutation size differs from d");
  return frame_from_operators(iso.matrix(), iso.inverse(), p,
                              "signed-perm(d=" + std::to_string(d) + ",p=" + short_number(p) + ")");
}

PSchauderFrame signed_permutation_frame(std::size_t d, double p, std::vector<std::size_t> perm,
                                        std::vector<Scalar> phases) {
  return signed_permutation_frame(d, p, SignedPermutation{std::move(perm), std::move(phases)});
}

PSchauderFrame compose_frame(const PSchauderFrame& base, const SignedPermutation& iso) {
  if (iso.size() != base.size()) {
    throw ShapeError("compose_frame: permutation size " + std::to_string(iso.size()) +
                     " differs from frame size " + std::to_string(base.size()));
  }
  return frame_from_operators(matmul(iso.matrix(), base.analysis()),
                              matmul(base.synthesis(), iso.inverse()), base.p(),
                              base.label() + "*perm");
}

}  // namespace psf
