#pragma once

// Batched arithmetic kernels over structure-of-arrays complex data.
//
// Each kernel has a scalar reference and an AVX2 variant. The AVX2 code performs
// the same operations in the same order without FMA contraction, so both variants
// produce bit-identical results; the dispatcher picks one at runtime.

#include <cstddef>
#include <span>
#include <string_view>

namespace flp::kernels {

enum class Isa { Scalar, Avx2 };

[[nodiscard]] std::string_view isa_name(Isa isa) noexcept;

/// Complex values laid out as two parallel arrays.
struct SoaView {
  std::span<const double> re;
  std::span<const double> im;
  [[nodiscard]] std::size_t size() const noexcept { return re.size(); }
};

struct SoaSpan {
  std::span<double> re;
  std::span<double> im;
  [[nodiscard]] std::size_t size() const noexcept { return re.size(); }
};

/// Values and first two derivatives of a polynomial at a batch of points.
struct HornerOut {
  SoaSpan value;
  SoaSpan d1;
  SoaSpan d2;
};

struct KernelTable {
  Isa isa;
  /// p, p', p'' at each point. coeffs[k] multiplies z^k.
  void (*horner3)(SoaView coeffs, SoaView points, HornerOut out);
  /// u = z f'/f and v = 1 + z f''/f'. Naive complex division (no scaling).
  void (*starlike_terms)(SoaView points, SoaView f, SoaView d1, SoaView d2, SoaSpan u, SoaSpan v);
  /// 3 - 2 Re w - (Im w)^2.
  void (*omega_margin)(SoaView w, std::span<double> out);
  /// |w - c|.
  void (*distance_to)(SoaView w, double c_re, double c_im, std::span<double> out);
};

[[nodiscard]] const KernelTable& scalar_table() noexcept;
[[nodiscard]] bool avx2_available() noexcept;
/// Throws DomainError when the CPU lacks AVX2 or the build has no AVX2 kernels.
[[nodiscard]] const KernelTable& avx2_table();

/// AVX2 when the CPU supports it, unless FLP_ISA=scalar is set in the environment.
[[nodiscard]] const KernelTable& active() noexcept;

}  // namespace flp::kernels
