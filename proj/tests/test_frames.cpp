#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "psf/errors.hpp"
#include "psf/experiments.hpp"
#include "psf/frames.hpp"

using namespace psf;

namespace {

void check_axioms(const PSchauderFrame& fr) {
  CAPTURE(fr.label());
  CHECK(identity_residual(matmul(fr.synthesis(), fr.analysis())) <= kReconstructionTolerance);
  const ProbeSet probes = make_probe_set(fr.dim(), 12345);
  for (const Vec& x : probes.vectors) {
    const double nx = pnorm(x, fr.p());
    CHECK(std::abs(pnorm(fr.coefficients(x), fr.p()) - nx) <= kIsometryTolerance * nx);
  }
}

double ulp_distance(double a, double b) {
  return std::abs(a - b) / std::numeric_limits<double>::epsilon();
}

}  // namespace

TEST_CASE("probe set layout") {
  const ProbeSet ps = make_probe_set(4);
  REQUIRE(ps.vectors.size() == 4 + 1 + kDefaultRandomProbes);
  CHECK(ps.count == ps.vectors.size());
  for (std::size_t i = 0; i < 4; ++i) CHECK(ps.vectors[i] == Vec::basis(4, i));
  CHECK(ps.vectors[4] == Vec::ones(4));
  for (const auto& v : ps.vectors) CHECK(pnorm(v, 2) > 0.0);
  CHECK(make_probe_set(4, 7).vectors == make_probe_set(4, 7).vectors);
}

TEST_CASE("frame from operators") {
  for (double p : {1.5, 2.0, 3.0}) {
    const auto fr = frame_from_operators(Mat::identity(3), Mat::identity(3), p);
    CHECK(fr.size() == 3);
    CHECK(fr.validation().reconstruction_residual == 0.0);
  }
  const Mat w = dft_matrix(4);
  CHECK_NOTHROW(frame_from_operators(w, w.adjoint(), 2.0));

  try {
    frame_from_operators(Mat::identity(2), Mat{{1.0, 0.0}, {0.0, 0.0}}, 2.0);
    FAIL("expected NotReconstructing");
  } catch (const NotReconstructing& e) {
    CHECK(e.kind() == "NotReconstructing");
    CHECK(e.residual() == 1.0);
    CHECK(e.row() == 1);
    CHECK(e.col() == 1);
  }
  // reconstructs but is not an l^3 isometry
  const Mat u{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const Mat v{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  CHECK_THROWS_AS(frame_from_operators(u, v, 3.0), NotIsometric);
  CHECK_THROWS_AS(frame_from_operators(Mat::identity(3), Mat::identity(2), 2.0), ShapeError);
  CHECK_THROWS_AS(frame_from_operators(Mat(1, 2, {1.0, 0.0}), Mat(2, 1, {1.0, 0.0}), 2.0),
                  ShapeError);
  CHECK_THROWS_AS(frame_from_operators(Mat::identity(2), Mat::identity(2), 1.0), DomainError);
}

TEST_CASE("validation is idempotent") {
  Rng rng(4);
  const auto sp = splitting_frame(3, 3.0, random_split_weights(3, 4, rng));
  const auto again = frame_from_operators(sp.analysis(), sp.synthesis(), sp.p(), sp.label());
  CHECK(again.analysis() == sp.analysis());
  CHECK(again.synthesis() == sp.synthesis());
  CHECK(again.validation().reconstruction_residual == sp.validation().reconstruction_residual);
}

TEST_CASE("identity frame") {
  const auto one = identity_frame(1, 2.0);
  CHECK(one.analysis() == Mat{{1.0}});
  CHECK(one.synthesis() == Mat{{1.0}});
  const auto fr = identity_frame(3, 2.5);
  for (const auto& x : make_probe_set(3).vectors) CHECK(fr.coefficients(x) == x);
  CHECK(fr.label() == "identity(d=3,p=2.5)");
  CHECK(fr.q() == doctest::Approx(2.5 / 1.5));
}

TEST_CASE("fourier frame") {
  CHECK(max_abs_diff(fourier_frame(1).analysis(), Mat{{1.0}}) == 0.0);
  CHECK(fourier_frame(2).validation().reconstruction_residual <= 1e-12);
  const auto f4 = fourier_frame(4);
  const auto g = matmul(identity_frame(4, 2.0).analysis(), f4.synthesis());
  for (const auto& z : g.entries()) CHECK(std::abs(z) == doctest::Approx(0.5).epsilon(1e-15));
  for (std::size_t d = 1; d <= 32; ++d) check_axioms(fourier_frame(d));
}

TEST_CASE("parseval frame from unitary") {
  const auto id = parseval_frame_from_unitary(Mat::identity(3), 3);
  CHECK(id.analysis() == Mat::identity(3));
  const auto p4 = parseval_frame_from_unitary(dft_matrix(4), 2);
  CHECK(p4.size() == 4);
  CHECK(p4.dim() == 2);
  CHECK(identity_residual(matmul(p4.synthesis(), p4.analysis())) <= 1e-12);
  const auto r = parseval_frame_from_unitary(random_unitary(6, 17), 3);
  CHECK(r.validation().worst_isometry_error <= kIsometryTolerance);
  CHECK(r.synthesis() == r.analysis().adjoint());
  CHECK_THROWS_AS(parseval_frame_from_unitary(Mat{{1.0, 1.0}, {0.0, 1.0}}, 1), NotUnitary);
  CHECK_THROWS_AS(parseval_frame_from_unitary(Mat::identity(3), 4), ShapeError);
  CHECK_THROWS_AS(parseval_frame_from_unitary(Mat::identity(3), 0), ShapeError);
}

TEST_CASE("splitting frame hand example") {
  const auto fr = splitting_frame(2, 3.0, {{0.5, 0.5}, {1.0}});
  REQUIRE(fr.size() == 3);
  const double a = std::pow(2.0, -1.0 / 3.0), b = std::pow(2.0, -2.0 / 3.0);
  const Mat& f = fr.analysis();
  CHECK(f(0, 0).real() == doctest::Approx(a).epsilon(1e-15));
  CHECK(f(1, 0).real() == doctest::Approx(a).epsilon(1e-15));
  CHECK(f(0, 1) == 0.0);
  CHECK(f(2, 1) == 1.0);
  const Mat& t = fr.synthesis();
  CHECK(t(0, 0).real() == doctest::Approx(b).epsilon(1e-15));
  CHECK(t(0, 1).real() == doctest::Approx(b).epsilon(1e-15));
  CHECK(t(1, 2) == 1.0);
  CHECK(fr.validation().reconstruction_residual <= 4 * std::numeric_limits<double>::epsilon());
  CHECK(fr.validation().worst_isometry_error <= 1e-15);
}

TEST_CASE("splitting frame special cases") {
  CHECK(splitting_frame(3, 1.7, {{1.0}, {1.0}, {1.0}}).analysis() == Mat::identity(3));
  const auto one = splitting_frame(1, 2.0, {{0.25, 0.75}});
  CHECK(one.analysis()(0, 0).real() == 0.5);
  CHECK(one.analysis()(1, 0).real() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-16));
  CHECK_THROWS_AS(splitting_frame(2, 2.0, {{0.5, 0.4}, {1.0}}), BadWeights);
  CHECK_THROWS_AS(splitting_frame(2, 2.0, {{1.0}}), BadWeights);
  CHECK_THROWS_AS(splitting_frame(1, 2.0, {{}}), BadWeights);
  CHECK_THROWS_AS(splitting_frame(1, 2.0, {{1.5, -0.5}}), BadWeights);
  CHECK_THROWS_AS(splitting_frame(1, 2.0, {{0.0, 1.0}}), BadWeights);
}

TEST_CASE("dyadic splitting weights are exact to a few ulps") {
  const std::vector<std::vector<double>> groups{
      {0.5, 0.5}, {0.25, 0.75}, {0.125, 0.375, 0.5}, {0.0625, 0.4375, 0.25, 0.25}, {1.0}};
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    SplitWeights w(groups.begin(), groups.end());
    const auto fr = splitting_frame(w.size(), p, w);
    CAPTURE(p);
    const Mat tf = matmul(fr.synthesis(), fr.analysis());
    for (std::size_t i = 0; i < tf.rows(); ++i) {
      for (std::size_t j = 0; j < tf.cols(); ++j) {
        CHECK(ulp_distance(tf(i, j).real(), i == j ? 1.0 : 0.0) <= 4.0);
      }
    }
    // ||F e_i||_p^p = sum of weights = 1 exactly up to rounding
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(ulp_distance(pnorm(fr.coefficients(Vec::basis(w.size(), i)), p), 1.0) <= 4.0);
    }
  }
}

TEST_CASE("signed permutation frames") {
  CHECK(signed_permutation_frame(3, 2.0, SignedPermutation::identity(3)).analysis() ==
        Mat::identity(3));
  const auto swap = signed_permutation_frame(2, 3.0, {1, 0}, {1.0, 1.0});
  const Vec x{Scalar{1, 2}, Scalar{-3, 0.5}};
  CHECK(swap.coefficients(x) == Vec{x[1], x[0]});
  CHECK(pnorm(swap.coefficients(x), 3.0) == doctest::Approx(pnorm(x, 3.0)));
  const auto ph = signed_permutation_frame(2, 1.5, {0, 1}, {Scalar{0, 1}, 1.0});
  const Vec c = ph.coefficients(x);
  CHECK(std::abs(c[0]) == doctest::Approx(std::abs(x[0])));
  CHECK(c[1] == x[1]);
  CHECK_THROWS_AS(signed_permutation_frame(2, 2.0, {0, 0}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(signed_permutation_frame(2, 2.0, {0, 2}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(signed_permutation_frame(2, 2.0, {0, 1}, {1.0, 0.9}), BadPhase);
  CHECK_THROWS_AS(signed_permutation_frame(2, 2.0, {0, 1}, {1.0}), ShapeError);
}

TEST_CASE("compose frame") {
  const auto base = splitting_frame(2, 3.0, {{0.5, 0.5}, {1.0}});
  const auto same = compose_frame(base, SignedPermutation::identity(3));
  CHECK(same.analysis() == base.analysis());
  CHECK(same.synthesis() == base.synthesis());
  const SignedPermutation sw{{1, 0, 2}, {1.0, 1.0, 1.0}};
  const auto once = compose_frame(base, sw);
  CHECK(once.analysis().row_vec(0) == base.analysis().row_vec(1));
  CHECK(compose_frame(once, sw).analysis() == base.analysis());
  const SignedPermutation cyc{{2, 0, 1}, {Scalar{0, 1}, -1.0, Scalar{0, -1}}};
  check_axioms(compose_frame(base, cyc));
  CHECK_THROWS_AS(compose_frame(base, SignedPermutation::identity(2)), ShapeError);
}

TEST_CASE("every constructed family satisfies both axioms") {
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + rng.index(8);
    const double p = std::array{1.5, 2.0, 3.0, 4.25}[rng.index(4)];
    check_axioms(identity_frame(d, p));
    const auto sp = splitting_frame(d, p, random_split_weights(d, 3, rng));
    check_axioms(sp);
    check_axioms(compose_frame(sp, random_signed_permutation(sp.size(), rng)));
    check_axioms(signed_permutation_frame(d, p, random_signed_permutation(d, rng)));
    const std::size_t n = d + rng.index(5);
    check_axioms(parseval_frame_from_unitary(random_unitary(n, t), d));
  }
}

TEST_CASE("adjoint of a unitary-built analysis is a valid synthesis") {
  for (std::size_t n = 2; n <= 10; n += 2) {
    const auto fr = parseval_frame_from_unitary(random_unitary(n, 1000 + n), n / 2);
    CHECK_NOTHROW(frame_from_operators(fr.analysis(), fr.analysis().adjoint(), 2.0));
  }
}

TEST_CASE("zero functionals are permitted") {
  const Mat u{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}};
  const Mat v{{1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
  const auto fr = frame_from_operators(u, v, 3.0, "with-zero-row");
  CHECK(fr.size() == 3);
  CHECK(fr.coefficients(Vec{2.0, 5.0}) == Vec{2.0, 0.0, 5.0});
}
