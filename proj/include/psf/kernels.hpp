#pragma once

// Inner-loop kernels over interleaved complex<double> arrays.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The variant is picked once per process from the CPU
// feature flags; setting PSF_FORCE_SCALAR=1 in the environment pins the
// scalar path. `modulus` and `max_modulus` are bit-identical across variants,
// the summing kernels differ only in accumulation order.

#include <complex>
#include <cstddef>
#include <string_view>

namespace psf::kernels {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  /// sum_i a[i] * b[i], no conjugation.
  Complex (*dot)(const Complex* a, const Complex* b, std::size_t n);
  /// out[i] = |x[i]|
  void (*modulus)(const Complex* x, double* out, std::size_t n);
  double (*max_modulus)(const Complex* x, std::size_t n);
  double (*sum_modulus)(const Complex* x, std::size_t n);
  double (*sum_sq_modulus)(const Complex* x, std::size_t n);
};

/// True if the variant was compiled in and the running CPU supports it.
bool available(Isa isa) noexcept;

/// Kernel table for a specific variant. Requesting an unavailable variant
/// returns the scalar table.
const KernelTable& table(Isa isa) noexcept;

/// Variant used by the library, fixed at first call.
Isa active_isa() noexcept;
const KernelTable& active() noexcept;

std::string_view name(Isa isa) noexcept;

namespace scalar {
Complex dot(const Complex* a, const Complex* b, std::size_t n);
void modulus(const Complex* x, double* out, std::size_t n);
double max_modulus(const Complex* x, std::size_t n);
double sum_modulus(const Complex* x, std::size_t n);
double sum_sq_modulus(const Complex* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
Complex dot(const Complex* a, const Complex* b, std::size_t n);
void modulus(const Complex* x, double* out, std::size_t n);
double max_modulus(const Complex* x, std::size_t n);
double sum_modulus(const Complex* x, std::size_t n);
double sum_sq_modulus(const Complex* x, std::size_t n);
}  // namespace avx2

}  // namespace psf::kernels
