#include <cstdlib>
#include <string_view>

#include "flp/error.hpp"
#include "kernels_impl.hpp"

namespace flp::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::horner3, scalar::starlike_terms,
                              scalar::omega_margin, scalar::distance_to};

#if defined(FLP_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::horner3, avx2::starlike_terms, avx2::omega_margin,
                            avx2::distance_to};
#endif

bool scalar_forced() noexcept {
  const char* env = std::getenv("FLP_ISA");
  return env != nullptr && std::string_view(env) == "scalar";
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

const KernelTable& scalar_table() noexcept { return kScalar; }

bool avx2_available() noexcept {
#if defined(FLP_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& avx2_table() {
#if defined(FLP_HAVE_AVX2_KERNELS)
  if (avx2_available()) return kAvx2;
#endif
  throw Error(ErrorKind::DomainError, "AVX2 kernels unavailable on this build or CPU");
}

const KernelTable& active() noexcept {
  static const KernelTable& table = [&]() -> const KernelTable& {
#if defined(FLP_HAVE_AVX2_KERNELS)
    if (!scalar_forced() && avx2_available()) return kAvx2;
#endif
    return kScalar;
  }();
  return table;
}

}  // namespace flp::kernels
