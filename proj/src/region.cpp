#include "flp/region.hpp"

#include <cmath>
#include <numbers>

#include "flp/error.hpp"

namespace flp {
namespace {
constexpr double kPi = std::numbers::pi;
}

double support_margin(Complex w) noexcept { return 2.0 - w.real() - std::abs(1.0 - w); }

ReBounds re_p0_bounds(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "re_p0_bounds needs 0 <= r < 1");
  return {p0_real(r), p0_negative_real(r)};
}

double re_p0_profile(double r, double c) {
  if (!(r >= 0.0 && r < 1.0) || !(c >= -1.0 && c <= 1.0)) {
    throw Error(ErrorKind::DomainError, "re_p0_profile needs 0 <= r < 1 and |c| <= 1");
  }
  const double s = std::sqrt(r);
  const double mu1 = 1.0 + r + 2.0 * c * s;
  const double mu2 = 1.0 + r - 2.0 * c * s;
  const double lg = 0.5 * std::log(mu1 / mu2);
  const double at = std::atan2(2.0 * std::sqrt(1.0 - c * c) * s, 1.0 - r);
  return (2.0 / (kPi * kPi)) * (at * at - lg * lg);
}

double inscribed_radius_offaxis(double a) {
  if (a > 0.5) throw Error(ErrorKind::DomainError, "off-axis branch needs a <= 1/2");
  const double e = std::exp(-kPi * std::sqrt(1.0 - 2.0 * a));
  const double eta = e / (1.0 + e);
  const double zeta = std::log(std::sqrt(eta) / std::sqrt(1.0 - eta));
  const double z2 = zeta * zeta / (kPi * kPi);
  const double dx = a - 1.5 + 2.0 * z2;
  return std::sqrt(dx * dx + 4.0 * z2);
}

double inscribed_radius_vertex(double a) {
  if (a >= 1.5) throw Error(ErrorKind::CenterOutsideRange, "disc centre must satisfy a < 3/2");
  return 1.5 - a;
}

InscribedDisc inscribed_disc(double a) {
  if (!(a < 1.5)) throw Error(ErrorKind::CenterOutsideRange, "disc centre must satisfy a < 3/2");
  if (a > 0.5) return {a, inscribed_radius_vertex(a), std::nullopt, std::nullopt};
  const double e = std::exp(-kPi * std::sqrt(1.0 - 2.0 * a));
  const double eta = e / (1.0 + e);
  const double zeta = std::log(std::sqrt(eta) / std::sqrt(1.0 - eta));
  return {a, inscribed_radius_offaxis(a), zeta, eta};
}

double boundary_distance_profile(double a, double X) {
  if (!(a < 1.5)) throw Error(ErrorKind::CenterOutsideRange, "disc centre must satisfy a < 3/2");
  if (!(X > 0.0 && X < 1.0)) throw Error(ErrorKind::DomainError, "X must lie in (0, 1)");
  const double l = std::log(X / std::sqrt(1.0 - X * X));
  const double l2 = l * l / (kPi * kPi);
  const double dx = a + 2.0 * l2 - 1.5;
  return dx * dx + 4.0 * l2;
}

std::vector<double> critical_abscissae(double a) {
  if (!(a < 1.5)) throw Error(ErrorKind::CenterOutsideRange, "disc centre must satisfy a < 3/2");
  if (a >= 0.5) return {1.0 / std::sqrt(2.0)};
  const double s = kPi * std::sqrt(1.0 - 2.0 * a);
  return {std::exp(0.5 * s) / std::sqrt(1.0 + std::exp(s)),
          std::exp(-0.5 * s) / std::sqrt(1.0 + std::exp(-s))};
}

bool argument_sector_check(Complex w) {
  const Complex d = w - 2.0;
  if (d == Complex{0.0, 0.0}) throw Error(ErrorKind::ArgUndefined, "arg(w - 2) undefined at w = 2");
  return std::abs(std::arg(d)) > 0.75 * kPi;
}

}  // namespace flp
