#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "psf/kernels.hpp"

using namespace psf::kernels;

namespace {

std::vector<Complex> random_array(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, 3.0);
  std::vector<Complex> v(n);
  for (auto& z : v) z = {g(gen), g(gen)};
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("scalar kernels on small inputs") {
  const std::vector<Complex> a{{1, 2}, {3, -1}, {0, 1}};
  const std::vector<Complex> b{{2, 0}, {0, 1}, {1, 1}};
  const Complex d = scalar::dot(a.data(), b.data(), 3);
  CHECK(d.real() == doctest::Approx(2 + 1 - 1));
  CHECK(d.imag() == doctest::Approx(4 + 3 + 1));
  CHECK(scalar::max_modulus(a.data(), 3) == doctest::Approx(std::sqrt(10.0)));
  CHECK(scalar::sum_sq_modulus(a.data(), 3) == doctest::Approx(5 + 10 + 1));
  CHECK(scalar::sum_modulus(a.data(), 3) == doctest::Approx(std::sqrt(5.0) + std::sqrt(10.0) + 1));
  double out[3];
  scalar::modulus(a.data(), out, 3);
  CHECK(out[2] == 1.0);
}

TEST_CASE("empty inputs") {
  for (Isa isa : {Isa::scalar, Isa::avx2}) {
    const KernelTable& t = table(isa);
    CHECK(t.dot(nullptr, nullptr, 0) == Complex{});
    CHECK(t.max_modulus(nullptr, 0) == 0.0);
    CHECK(t.sum_modulus(nullptr, 0) == 0.0);
    CHECK(t.sum_sq_modulus(nullptr, 0) == 0.0);
  }
}

TEST_CASE("dispatch reports a usable variant") {
  CHECK(available(Isa::scalar));
  CHECK(available(active_isa()));
  CHECK(&active() == &table(active_isa()));
  CHECK(name(Isa::scalar) == "scalar");
  CHECK(name(Isa::avx2) == "avx2");
}

TEST_CASE("avx2 variant matches scalar reference") {
  if (!available(Isa::avx2)) {
    MESSAGE("avx2 not available, skipping");
    return;
  }
  const KernelTable& s = table(Isa::scalar);
  const KernelTable& v = table(Isa::avx2);
  for (std::size_t n = 0; n <= 67; ++n) {
    CAPTURE(n);
    const auto a = random_array(n, 100 + n);
    const auto b = random_array(n, 900 + n);
    std::vector<double> ms(n), mv(n);
    s.modulus(a.data(), ms.data(), n);
    v.modulus(a.data(), mv.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(same_bits(ms[i], mv[i]));
    CHECK(same_bits(s.max_modulus(a.data(), n), v.max_modulus(a.data(), n)));

    const double ref_sum = s.sum_modulus(a.data(), n);
    const double ref_sq = s.sum_sq_modulus(a.data(), n);
    CHECK(v.sum_modulus(a.data(), n) == doctest::Approx(ref_sum).epsilon(1e-14));
    CHECK(v.sum_sq_modulus(a.data(), n) == doctest::Approx(ref_sq).epsilon(1e-14));

    const Complex ds = s.dot(a.data(), b.data(), n);
    const Complex dv = v.dot(a.data(), b.data(), n);
    // reordered accumulation: bound by n eps sum |a_i||b_i|
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(a[i]) * std::abs(b[i]);
    const double tol = 4.0 * (n + 1) * 2.3e-16 * mag + 1e-300;
    CHECK(std::abs(ds - dv) <= tol);
  }
}

TEST_CASE("max_modulus picks the largest entry wherever it sits") {
  for (Isa isa : {Isa::scalar, Isa::avx2}) {
    const KernelTable& t = table(isa);
    for (std::size_t n = 1; n <= 13; ++n) {
      for (std::size_t at = 0; at < n; ++at) {
        std::vector<Complex> x(n, Complex{0.5, -0.5});
        x[at] = {-3.0, 4.0};
        CHECK(t.max_modulus(x.data(), n) == 5.0);
      }
    }
  }
}
