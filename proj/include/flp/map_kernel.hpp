#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string_view>

namespace flp {

using Complex = std::complex<double>;

/// Rotation tau and opening direction theta of the parabola family P_{tau,theta}.
/// Both angles live in (-pi, pi].
struct ParabolaParams {
  double tau = 0.0;
  double theta = 0.0;
};

// |e^{i tau} sqrt(z) - 1| below this raises SingularPoint.
inline constexpr double kSingularTolerance = 1e-12;

/// Square root on the branch with Im >= 0. Positive reals map to the positive root.
[[nodiscard]] Complex sqrt_upper(Complex z) noexcept;

/// 2 atanh(u) = log((1+u)/(1-u)) with the principal log, exact-branch for |u| <= 1.
[[nodiscard]] Complex log_ratio(Complex u);

/// P_{tau,theta}(z) = (2 e^{i(theta+pi)} / pi^2) log^2((1 + e^{i tau} sqrt z)/(1 - e^{i tau} sqrt z)).
/// Defined on the closed unit disc; throws SingularPoint where the log blows up and
/// DomainError outside the disc or for angles outside (-pi, pi].
[[nodiscard]] Complex eval_P(const ParabolaParams& params, Complex z);

/// P_0 = P_{0,0}: -(2/pi^2) log^2((1+sqrt z)/(1-sqrt z)).
[[nodiscard]] Complex eval_P0(Complex z);

/// LP(z) = 1 + P_0(z). Maps the disc onto the open parabolic region y^2 < 3 - 2x.
[[nodiscard]] Complex eval_LP(Complex z);

/// Real-axis shortcuts for 0 <= r < 1: P0(r) = -(2/pi^2) L(r)^2 and
/// P0(-r) = (2/pi^2) atan^2(2 sqrt r / (1 - r)), with L(r) = log((1+sqrt r)/(1-sqrt r)).
[[nodiscard]] double log_ratio_real(double r);
[[nodiscard]] double p0_real(double r);
[[nodiscard]] double p0_negative_real(double r);

enum class TargetId {
  LogParabolic,      // LP itself
  ExpShifted,        // alpha + (1-alpha) e^z
  LemniscateShifted, // alpha + (1-alpha) sqrt(1+z)
  Cardioid,          // 1 + z e^z
  Sigmoid,           // 2 / (1 + e^{-z})
  Sine,              // 1 + sin z
  Arcsinh,           // 1 + asinh z
  CoshSqrt,          // cosh sqrt z
  Crescent,          // z + sqrt(1 + z^2)
  Lemniscate,        // sqrt(1 + z)
  Janowski,          // (1 + A z) / (1 + B z)
  Nephroid,          // 1 + z - z^3/3
  Parabolic,         // 1 + P_{0,pi}(z)
  RightLemniscate,   // sqrt2 - (sqrt2 - 1) sqrt((1-z)/(1 + 2(sqrt2-1) z))
  Booth,             // 1 + z / (1 - alpha z^2)
};

struct TargetParams {
  double alpha = 0.0;
  double A = 1.0;
  double B = -1.0;
};

[[nodiscard]] std::span<const TargetId> all_targets() noexcept;
[[nodiscard]] std::string_view target_name(TargetId id) noexcept;
/// Throws UnknownTarget for names outside the closed enumeration.
[[nodiscard]] TargetId parse_target(std::string_view name);

/// Throws ParamRange when params are invalid for the map.
void validate_target_params(TargetId id, const TargetParams& params);

/// Evaluates the named target map at z in the closed disc.
[[nodiscard]] Complex eval_target(TargetId id, const TargetParams& params, Complex z);

}  // namespace flp
