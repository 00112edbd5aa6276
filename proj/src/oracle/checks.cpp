#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "../parallel.hpp"
#include "flp/error.hpp"
#include "flp/kernels.hpp"
#include "flp/oracle.hpp"
#include "flp/region.hpp"

namespace flp {
namespace {

constexpr double kPi = std::numbers::pi;

double grid_angle(int k, int n) { return -kPi + 2.0 * kPi * (k + 1) / n; }

std::string fmt(double v) { return format_double(v); }

struct Soa {
  std::vector<double> re, im;
  explicit Soa(std::size_t n = 0) : re(n), im(n) {}
  kernels::SoaView view() const { return {re, im}; }
  kernels::SoaSpan span() { return {re, im}; }
};

}  // namespace

Region omega_lp_region() {
  return {"omega_lp", [](Complex w) { return omega_margin(w); }};
}

Region half_plane_region(double c) {
  return {"re>" + fmt(c), [c](Complex w) { return w.real() - c; }};
}

Region disc_region(Complex center, double radius) {
  return {"disc", [center, radius](Complex w) { return radius - std::abs(w - center); }};
}

VerificationReport check_subordination_inclusion(const ComplexMap& phi, double r, const Region& region,
                                                 SamplingOptions options, std::string id) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "radius must lie in [0, 1]");
  if (options.samples < 1) throw Error(ErrorKind::DomainError, "need at least one sample");
  const auto n = static_cast<std::size_t>(options.samples);
  Soa w(n);
  detail::parallel_for(n, options.threads, [&](std::size_t k) {
    const double theta = grid_angle(static_cast<int>(k), options.samples);
    Complex v;
    try {
      v = phi(std::polar(r, theta));
    } catch (const Error& e) {
      throw Error(ErrorKind::SingularOnCircle, "at angle " + fmt(theta) + ": " + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::SingularOnCircle, "non-finite value at angle " + fmt(theta));
    }
    w.re[k] = v.real();
    w.im[k] = v.imag();
  });

  std::vector<double> margin(n);
  const bool is_omega = region.name == "omega_lp";
  if (is_omega) {
    kernels::active().omega_margin(w.view(), margin);
  } else {
    for (std::size_t k = 0; k < n; ++k) margin[k] = region.margin({w.re[k], w.im[k]});
  }
  const auto worst = static_cast<std::size_t>(std::min_element(margin.begin(), margin.end()) - margin.begin());

  std::ostringstream notes;
  int disagreements = 0;
  if (is_omega) {
    // The focus/directrix form must agree in sign with y^2 < 3 - 2x everywhere.
    for (std::size_t k = 0; k < n; ++k) {
      const double s = support_margin({w.re[k], w.im[k]});
      if ((s > 0.0) != (margin[k] > 0.0) && std::abs(margin[k]) > 1e-12) ++disagreements;
    }
  }
  VerificationReport rep;
  rep.id = std::move(id);
  rep.kind = CheckKind::Containment;
  rep.params = {{"r", r}, {"samples", static_cast<double>(n)}};
  rep.closed_form = r;
  rep.oracle_value = margin[worst];
  rep.gap = std::max(0.0, -margin[worst]);
  rep.tolerance = 0.0;
  rep.samples = static_cast<std::int64_t>(n);
  rep.passed = margin[worst] > 0.0 && disagreements == 0;
  notes << (rep.passed ? "verified at " : "violated; sampled ") << n << " points of |z|=" << fmt(r)
        << " in " << region.name << "; worst margin at angle " << fmt(grid_angle(static_cast<int>(worst), options.samples));
  if (disagreements > 0) notes << "; support-line form disagrees at " << disagreements << " samples";
  rep.notes = notes.str();
  return rep;
}

Complex AnalyticSample::evaluate(Complex z) const {
  if (std::abs(z) > disc_radius + 1e-12) throw Error(ErrorKind::DomainError, "sample evaluated outside its disc");
  if (const auto* s = std::get_if<PowerSeries>(&source)) return s->evaluate(z);
  const auto& named = std::get<NamedMap>(source);
  return eval_target(named.id, named.params, z);
}

VerificationReport certify_sufficient_condition(const AnalyticSample& sample, double t, CertifyOptions options) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::ParamRange, "t must lie in [0, 1]");
  const auto* series = std::get_if<PowerSeries>(&sample.source);
  if (series == nullptr) throw Error(ErrorKind::DomainError, "certification needs Taylor coefficients");
  if (series->degree() < 1 || std::abs((*series)[0]) > 1e-14 || std::abs((*series)[1] - 1.0) > 1e-14) {
    throw Error(ErrorKind::DomainError, "f must satisfy f(0) = 0 and f'(0) = 1");
  }
  if (options.angles < 1 || options.radii.empty()) throw Error(ErrorKind::DomainError, "empty sample grid");

  Soa coeff(series->degree() + 1);
  for (std::size_t k = 0; k <= series->degree(); ++k) {
    coeff.re[k] = (*series)[k].real();
    coeff.im[k] = (*series)[k].imag();
  }
  const std::size_t per_circle = static_cast<std::size_t>(options.angles);
  const std::size_t n = per_circle * options.radii.size();
  Soa z(n);
  for (std::size_t c = 0; c < options.radii.size(); ++c) {
    const double r = options.radii[c];
    if (!(r > 0.0 && r < 1.0 && r <= sample.disc_radius)) throw Error(ErrorKind::DomainError, "sample radius out of range");
    for (std::size_t k = 0; k < per_circle; ++k) {
      const Complex p = std::polar(r, grid_angle(static_cast<int>(k), options.angles));
      z.re[c * per_circle + k] = p.real();
      z.im[c * per_circle + k] = p.imag();
    }
  }

  const auto& kt = kernels::active();
  Soa f(n), d1(n), d2(n), u(n), v(n);
  // Each block of points is independent; blocks are evaluated in parallel.
  const std::size_t blocks = options.radii.size();
  detail::parallel_for(blocks, options.threads, [&](std::size_t b) {
    const std::size_t off = b * per_circle;
    auto sub = [&](Soa& s) { return kernels::SoaSpan{std::span(s.re).subspan(off, per_circle), std::span(s.im).subspan(off, per_circle)}; };
    auto subv = [&](const Soa& s) { return kernels::SoaView{std::span(s.re).subspan(off, per_circle), std::span(s.im).subspan(off, per_circle)}; };
    kt.horner3(coeff.view(), subv(z), kernels::HornerOut{sub(f), sub(d1), sub(d2)});
  });

  for (std::size_t i = 0; i < n; ++i) {
    const double zf = std::hypot(z.re[i], z.im[i]);
    if (std::hypot(f.re[i], f.im[i]) <= 1e-14 * zf) {
      throw Error(ErrorKind::SingularSample, "f vanishes at a sample point");
    }
    if (std::hypot(d1.re[i], d1.im[i]) <= 1e-14) {
      throw Error(ErrorKind::DerivativeVanishes, "f' vanishes at a sample point");
    }
  }
  kt.starlike_terms(z.view(), f.view(), d1.view(), d2.view(), u.span(), v.span());

  double sup = 0.0;
  std::size_t at = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex lhs = t * Complex{v.re[i], v.im[i]} + (1.0 - t) * Complex{u.re[i], u.im[i]} - 1.0;
    const double a = std::abs(lhs);
    if (!std::isfinite(a)) throw Error(ErrorKind::SingularSample, "non-finite left-hand side");
    if (a > sup) {
      sup = a;
      at = i;
    }
  }
  const double bound = (3.0 + 2.0 * t) / 6.0;

  VerificationReport rep;
  rep.id = "certify";
  rep.kind = CheckKind::StrictBound;
  rep.params = {{"t", t}, {"degree", static_cast<double>(series->degree())}};
  rep.closed_form = bound;
  rep.oracle_value = sup;
  rep.gap = sup - bound;
  rep.tolerance = 0.0;
  rep.samples = static_cast<std::int64_t>(n);
  const bool inequality = sup < bound;

  std::ostringstream notes;
  notes << "sup of |t(1+zf''/f')+(1-t)zf'/f-1| = " << fmt(sup) << " at z = (" << fmt(z.re[at]) << ","
        << fmt(z.im[at]) << "), bound " << fmt(bound);
  bool conclusion = true;
  if (inequality) {
    std::vector<double> dist(n), margin(n);
    kt.distance_to(u.view(), 1.0, 0.0, dist);
    kt.omega_margin(u.view(), margin);
    const double max_dist = *std::max_element(dist.begin(), dist.end());
    const double min_margin = *std::min_element(margin.begin(), margin.end());
    conclusion = max_dist < 0.5 && min_margin > 0.0;
    notes << "; conclusion: max|zf'/f-1| = " << fmt(max_dist) << ", min Omega_LP margin = " << fmt(min_margin)
          << (conclusion ? "" : " (CONCLUSION VIOLATED)");
  } else {
    notes << "; inequality not satisfied on the sample grid";
  }
  rep.passed = inequality && conclusion;
  rep.notes = notes.str();
  return rep;
}

VerificationReport caratheodory_order_check(const AnalyticSample& p, double alpha, double r) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::ParamRange, "alpha must lie in [0, 1)");
  const Complex p0 = p.evaluate(0.0);
  if (std::abs(p0 - 1.0) > 1e-12) throw Error(ErrorKind::DomainError, "p(0) must equal 1");
  const CircleExtrema ext = extremize_on_circle([&](Complex z) { return p.evaluate(z); }, r, Functional::RealPart);
  VerificationReport rep;
  rep.id = "caratheodory-order";
  rep.kind = CheckKind::LowerBound;
  rep.params = {{"alpha", alpha}, {"r", r}};
  rep.closed_form = alpha;
  rep.oracle_value = ext.min;
  rep.gap = std::max(0.0, alpha - ext.min);
  rep.tolerance = 0.0;
  rep.samples = kCircleGrid;
  rep.passed = ext.min >= alpha;
  rep.notes = "min Re p on |z|=" + fmt(r) + " at angle " + fmt(ext.argmin_angle);
  return rep;
}

DiscBound janowski_disc_bound(double A, double B, double r, int n) {
  if (!(B >= -1.0 && B < A && A <= 1.0)) throw Error(ErrorKind::ParamRange, "need -1 <= B < A <= 1");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::ParamRange, "need 0 <= r < 1");
  if (n < 1) throw Error(ErrorKind::ParamRange, "need n >= 1");
  const double rn = std::pow(r, n);
  const double r2n = rn * rn;
  const double den = 1.0 - B * B * r2n;
  return {(1.0 - A * B * r2n) / den, std::abs(A - B) * rn / den};
}

DiscBound order_alpha_disc_bound(double alpha, double r, int n) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw Error(ErrorKind::ParamRange, "alpha must lie in [0, 1)");
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::ParamRange, "need 0 <= r < 1");
  if (n < 1) throw Error(ErrorKind::ParamRange, "need n >= 1");
  const double rn = std::pow(r, n);
  const double r2n = rn * rn;
  return {(1.0 + (1.0 - 2.0 * alpha) * r2n) / (1.0 - r2n), 2.0 * (1.0 - alpha) * rn / (1.0 - r2n)};
}

}  // namespace flp
