#include <cstdlib>
#include <cstring>

#include "psf/kernels.hpp"

namespace psf::kernels {

namespace {

constexpr KernelTable kScalarTable{
    &scalar::dot, &scalar::modulus, &scalar::max_modulus, &scalar::sum_modulus,
    &scalar::sum_sq_modulus,
};

#if defined(PSF_HAVE_AVX2)
constexpr KernelTable kAvx2Table{
    &avx2::dot, &avx2::modulus, &avx2::max_modulus, &avx2::sum_modulus,
    &avx2::sum_sq_modulus,
};
#endif

bool scalar_forced() noexcept {
  const char* v = std::getenv("PSF_FORCE_SCALAR");
  return v != nullptr && *v != '\0' && std::strcmp(v, "0") != 0;
}

Isa pick() noexcept {
  if (scalar_forced()) return Isa::scalar;
  if (available(Isa::avx2)) return Isa::avx2;
  return Isa::scalar;
}

}  // namespace

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(PSF_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Isa isa) noexcept {
#if defined(PSF_HAVE_AVX2)
  if (isa == Isa::avx2 && available(Isa::avx2)) return kAvx2Table;
#else
  (void)isa;
#endif
  return kScalarTable;
}

Isa active_isa() noexcept {
  static const Isa chosen = pick();
  return chosen;
}

const KernelTable& active() noexcept {
  static const KernelTable& t = table(active_isa());
  return t;
}

std::string_view name(Isa isa) noexcept {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

}  // namespace psf::kernels
