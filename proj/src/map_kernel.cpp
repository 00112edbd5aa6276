#include "flp/map_kernel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "flp/error.hpp"

namespace flp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoOverPiSq = 2.0 / (kPi * kPi);
constexpr double kDiscSlack = 1e-12;

void require_closed_disc(Complex z, const char* who) {
  if (!(std::abs(z) <= 1.0 + kDiscSlack)) {
    throw Error(ErrorKind::DomainError,
                std::string(who) + ": |z| = " + std::to_string(std::abs(z)) + " exceeds 1");
  }
}

void require_angle(double a, const char* name) {
  if (!(a > -kPi && a <= kPi)) {
    throw Error(ErrorKind::DomainError, std::string(name) + " outside (-pi, pi]");
  }
}

// e^{i(theta + pi)} with the two axis-aligned cases kept exact.
Complex opening_factor(double theta) {
  if (theta == 0.0) return {-1.0, 0.0};
  if (theta == kPi) return {1.0, 0.0};
  return -std::polar(1.0, theta);
}

constexpr std::array kTargets = {
    TargetId::LogParabolic, TargetId::ExpShifted, TargetId::LemniscateShifted,
    TargetId::Cardioid,     TargetId::Sigmoid,    TargetId::Sine,
    TargetId::Arcsinh,      TargetId::CoshSqrt,   TargetId::Crescent,
    TargetId::Lemniscate,   TargetId::Janowski,   TargetId::Nephroid,
    TargetId::Parabolic,    TargetId::RightLemniscate, TargetId::Booth,
};

}  // namespace

Complex sqrt_upper(Complex z) noexcept {
  Complex s = std::sqrt(z);
  if (s.imag() < 0.0) s = -s;
  if (s.imag() == 0.0) s = {std::abs(s.real()), 0.0};
  return s;
}

Complex log_ratio(Complex u) {
  if (std::abs(1.0 - u) < kSingularTolerance || std::abs(1.0 + u) < kSingularTolerance) {
    throw Error(ErrorKind::SingularPoint, "log((1+u)/(1-u)) is singular at u = +-1");
  }
  // Inside the disc (1+u)/(1-u) has positive real part, so atanh and the principal
  // log of the quotient coincide; atanh keeps full relative accuracy near u = 0.
  if (std::abs(u) < 1.0) return 2.0 * std::atanh(u);
  return std::log((1.0 + u) / (1.0 - u));
}

Complex eval_P(const ParabolaParams& params, Complex z) {
  require_angle(params.tau, "tau");
  require_angle(params.theta, "theta");
  require_closed_disc(z, "eval_P");
  Complex u = sqrt_upper(z);
  if (params.tau != 0.0) u *= std::polar(1.0, params.tau);
  if (std::abs(u - 1.0) < kSingularTolerance) {
    throw Error(ErrorKind::SingularPoint, "eval_P: e^{i tau} sqrt(z) = 1");
  }
  const Complex l = log_ratio(u);
  return kTwoOverPiSq * opening_factor(params.theta) * (l * l);
}

Complex eval_P0(Complex z) {
  require_closed_disc(z, "eval_P0");
  const Complex u = sqrt_upper(z);
  if (std::abs(u - 1.0) < kSingularTolerance) {
    throw Error(ErrorKind::SingularPoint, "P0 is singular at z = 1");
  }
  const Complex l = log_ratio(u);
  return -kTwoOverPiSq * (l * l);
}

Complex eval_LP(Complex z) { return 1.0 + eval_P0(z); }

double log_ratio_real(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "log_ratio_real needs 0 <= r < 1");
  return 2.0 * std::atanh(std::sqrt(r));
}

double p0_real(double r) {
  const double l = log_ratio_real(r);
  return -kTwoOverPiSq * l * l;
}

double p0_negative_real(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "p0_negative_real needs 0 <= r <= 1");
  // 2 atan(sqrt r) = atan(2 sqrt r / (1 - r)) for r < 1 and stays finite at r = 1.
  const double a = 2.0 * std::atan(std::sqrt(r));
  return kTwoOverPiSq * a * a;
}

std::span<const TargetId> all_targets() noexcept { return kTargets; }

std::string_view target_name(TargetId id) noexcept {
  switch (id) {
    case TargetId::LogParabolic: return "lp";
    case TargetId::ExpShifted: return "exp";
    case TargetId::LemniscateShifted: return "sl";
    case TargetId::Cardioid: return "cardioid";
    case TargetId::Sigmoid: return "sigmoid";
    case TargetId::Sine: return "sine";
    case TargetId::Arcsinh: return "asinh";
    case TargetId::CoshSqrt: return "cosh-sqrt";
    case TargetId::Crescent: return "crescent";
    case TargetId::Lemniscate: return "lemniscate";
    case TargetId::Janowski: return "janowski";
    case TargetId::Nephroid: return "nephroid";
    case TargetId::Parabolic: return "parabolic";
    case TargetId::RightLemniscate: return "rl";
    case TargetId::Booth: return "booth";
  }
  return "?";
}

TargetId parse_target(std::string_view name) {
  for (TargetId id : kTargets) {
    if (target_name(id) == name) return id;
  }
  throw Error(ErrorKind::UnknownTarget, std::string(name));
}

void validate_target_params(TargetId id, const TargetParams& p) {
  switch (id) {
    case TargetId::ExpShifted:
    case TargetId::LemniscateShifted:
      if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw Error(ErrorKind::ParamRange, "alpha must lie in [0, 1)");
      break;
    case TargetId::Booth:
      if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) throw Error(ErrorKind::ParamRange, "alpha must lie in [0, 1]");
      break;
    case TargetId::Janowski:
      if (!(p.B >= -1.0 && p.B < p.A && p.A <= 1.0)) {
        throw Error(ErrorKind::ParamRange, "Janowski needs -1 <= B < A <= 1");
      }
      break;
    default:
      break;
  }
}

Complex eval_target(TargetId id, const TargetParams& p, Complex z) {
  validate_target_params(id, p);
  require_closed_disc(z, "eval_target");
  switch (id) {
    case TargetId::LogParabolic:
      return eval_LP(z);
    case TargetId::ExpShifted:
      return p.alpha + (1.0 - p.alpha) * std::exp(z);
    case TargetId::LemniscateShifted:
      return p.alpha + (1.0 - p.alpha) * std::sqrt(1.0 + z);
    case TargetId::Cardioid:
      return 1.0 + z * std::exp(z);
    case TargetId::Sigmoid:
      return 2.0 / (1.0 + std::exp(-z));
    case TargetId::Sine:
      return 1.0 + std::sin(z);
    case TargetId::Arcsinh:
      return 1.0 + std::asinh(z);
    case TargetId::CoshSqrt:
      return std::cosh(sqrt_upper(z));
    case TargetId::Crescent:
      return z + std::sqrt(1.0 + z * z);
    case TargetId::Lemniscate:
      return std::sqrt(1.0 + z);
    case TargetId::Janowski: {
      const Complex den = 1.0 + p.B * z;
      if (std::abs(den) < kSingularTolerance) throw Error(ErrorKind::SingularPoint, "Janowski pole at z = -1/B");
      return (1.0 + p.A * z) / den;
    }
    case TargetId::Nephroid:
      return 1.0 + z - z * z * z / 3.0;
    case TargetId::Parabolic:
      return 1.0 + eval_P(ParabolaParams{0.0, kPi}, z);
    case TargetId::RightLemniscate: {
      constexpr double s2 = std::numbers::sqrt2;
      return s2 - (s2 - 1.0) * std::sqrt((1.0 - z) / (1.0 + 2.0 * (s2 - 1.0) * z));
    }
    case TargetId::Booth: {
      const Complex den = 1.0 - p.alpha * z * z;
      if (std::abs(den) < kSingularTolerance) throw Error(ErrorKind::SingularPoint, "Booth pole at z^2 = 1/alpha");
      return 1.0 + z / den;
    }
  }
  throw Error(ErrorKind::UnknownTarget, "unhandled target");
}

}  // namespace flp
