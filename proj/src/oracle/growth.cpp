#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "flp/error.hpp"
#include "flp/oracle.hpp"

namespace flp {
namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kTwoOverPiSq = 2.0 / (std::numbers::pi * std::numbers::pi);
constexpr double kSeriesCutoff = 0.1;
constexpr double kGradedFrom = 0.9;
constexpr double kRelTol = 1e-10;
constexpr unsigned kMaxDepth = 15;
// Tighter panel tolerances sit below roundoff and make Boost recurse to full depth.
constexpr double kPanelTol = 1e-12;

template <class F>
double gk(F f, double a, double b, double& err_acc, unsigned depth = kMaxDepth) {
  double err = 0.0;
  const double v = gauss_kronrod<double, 31>::integrate(f, a, b, depth, kPanelTol, &err);
  err_acc += err;
  return v;
}

// int_0^a P0(sign t)/t dt termwise from the series; a <= 0.1 so 40 terms are ample.
double series_piece(double a, int sign) {
  static const PowerSeries integrated = integrate_over_t(p0_coefficients(40));
  return integrated.evaluate(Complex{sign * a, 0.0}).real();
}

// P0(t)/t written in u = 1 - t, exact in u as t -> 1.
double lower_integrand_in_u(double u) {
  const double s = std::sqrt(1.0 - u);
  const double l = std::log((1.0 + s) * (1.0 + s) / u);
  return -kTwoOverPiSq * l * l / (1.0 - u);
}

}  // namespace

double log_growth_integral(double r, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::DomainError, "sign must be +1 or -1");
  const bool upper = sign < 0;
  if (!(r >= 0.0 && (upper ? r <= 1.0 : r < 1.0))) {
    throw Error(ErrorKind::DomainError, "log_growth_integral: r out of range");
  }
  const double a = std::min(r, kSeriesCutoff);
  double total = series_piece(a, sign);
  if (r <= kSeriesCutoff) return total;

  double err = 0.0;
  if (upper) {
    total += gk([](double t) { return p0_negative_real(t) / t; }, kSeriesCutoff, r, err);
  } else {
    const double b = std::min(r, kGradedFrom);
    total += gk([](double t) { return p0_real(t) / t; }, kSeriesCutoff, b, err);
    if (r > kGradedFrom) {
      // Graded panels in u = 1 - t from 1 - r up to 0.1, doubling in width; one rule per panel.
      double u_hi = 1.0 - kGradedFrom;
      const double u_end = 1.0 - r;
      while (u_hi > u_end) {
        const double u_lo = std::max(u_end, 0.5 * u_hi);
        total += gk(lower_integrand_in_u, u_lo, u_hi, err, 0);
        u_hi = u_lo;
      }
    }
  }
  if (!(err <= kRelTol * std::max(std::abs(total), 1e-300))) {
    throw Error(ErrorKind::QuadratureFailure,
                "estimated error " + std::to_string(err) + " for integral " + std::to_string(total));
  }
  return total;
}

GrowthBounds growth_bounds(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::DomainError, "growth_bounds needs 0 <= r < 1");
  if (r == 0.0) return {0.0, 0.0};
  return {r * std::exp(log_growth_integral(r, 1)), r * std::exp(log_growth_integral(r, -1))};
}

Complex starlike_from_p(const ComplexMap& p_minus_one, Complex z) {
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
  double err = 0.0;
  const Complex integral = gauss_kronrod<double, 31>::integrate(
      [&](double s) { return p_minus_one(s * z) / s; }, 0.0, 1.0, kMaxDepth, kPanelTol, &err);
  if (!(err <= kRelTol * std::max(std::abs(integral), 1e-300))) {
    throw Error(ErrorKind::QuadratureFailure, "ray integral error estimate " + std::to_string(err));
  }
  return z * std::exp(integral);
}

CoveringResult covering_constant(int first_k, int max_k) {
  CoveringResult out{0.0, first_k, {}, {}};
  double prev = 0.0;
  for (int k = first_k; k <= max_k; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -k);
    // -f0(-r), with f0 evaluated along the ray from 0 to -r.
    const double v = -starlike_from_p(eval_P0, Complex{-r, 0.0}).real();
    out.sequence.push_back(v);
    out.last_k = k;
    if (k > first_k && std::abs(v - prev) < 1e-8) {
      out.value = v;
      out.note =
          "limit of -f0(-r) along r = 1 - 2^-k; equals lim g0(r) since -f0(-r) = g0(r) identically";
      return out;
    }
    prev = v;
  }
  throw Error(ErrorKind::NoConvergence,
              "covering sequence still moving at k = " + std::to_string(max_k) + ", last value " +
                  std::to_string(prev));
}

}  // namespace flp
