#pragma once

#include "flp/kernels.hpp"

namespace flp::kernels {

namespace scalar {
void horner3(SoaView coeffs, SoaView points, HornerOut out);
void starlike_terms(SoaView points, SoaView f, SoaView d1, SoaView d2, SoaSpan u, SoaSpan v);
void omega_margin(SoaView w, std::span<double> out);
void distance_to(SoaView w, double c_re, double c_im, std::span<double> out);
}  // namespace scalar

#if defined(FLP_HAVE_AVX2_KERNELS)
namespace avx2 {
void horner3(SoaView coeffs, SoaView points, HornerOut out);
void starlike_terms(SoaView points, SoaView f, SoaView d1, SoaView d2, SoaSpan u, SoaSpan v);
void omega_margin(SoaView w, std::span<double> out);
void distance_to(SoaView w, double c_re, double c_im, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace flp::kernels
