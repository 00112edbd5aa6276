#include "flp/radius_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "flp/error.hpp"
#include "flp/power_series.hpp"
#include "flp/region.hpp"

namespace flp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kE = std::numbers::e;
constexpr double kRootTol = 1e-12;
// Conditions built on LP are singular at r = 1.
constexpr double kLpBracketHi = 0.99;

double tanh_sq(double x) {
  const double t = std::tanh(x);
  return t * t;
}

// tanh^2(pi sqrt(alpha) / (2 sqrt 2)): the r with |P0(r)| = alpha.
double disc_radius_formula(double alpha) { return tanh_sq(kPi * std::sqrt(alpha) / (2.0 * kSqrt2)); }

double abs_p0(double r) { return -p0_real(r); }

RealFn max_re_condition(TargetId id, TargetParams p) {
  return [id, p](double r) {
    const auto ext =
        extremize_on_circle([&](Complex z) { return eval_target(id, p, z); }, r, Functional::RealPart);
    return ext.max - 1.5;
  };
}

InclusionProbe target_in_omega(TargetId id, TargetParams p) {
  return {[id, p](Complex z) { return eval_target(id, p, z); }, omega_lp_region()};
}

Witness boundary_witness(std::string description, TargetId id, TargetParams p) {
  return {std::move(description), [id, p](double r) { return omega_margin(eval_target(id, p, Complex{r, 0.0})); }};
}

std::string fmt(double v) { return format_double(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParamRange, what);
}

double root_of_r_exp_r() {
  static const double root = refine_root([](double r) { return r * std::exp(r) - 0.5; }, 0.0, 1.0, kRootTol);
  return root;
}

double majorization_root() {
  static const double root = refine_root([](double r) { return -majorization_phi(r, 0.0); }, 0.1, 0.6, kRootTol);
  return root;
}

double omega_root_from_series() {
  static const double root = [] {
    const PowerSeries g0 = extremal_g0(kDefaultSeriesDegree);
    const auto cond = [&](double r) {
      const double l = log_ratio_real(r);
      return 4.0 * g0.evaluate(Complex{r, 0.0}).real() * l * l - kPi * kPi;
    };
    return refine_root(cond, 0.3, 0.7, kRootTol);
  }();
  return root;
}

double corollary_formula(int k) {
  switch (k) {
    case 1: return tanh_sq(0.5 * std::sqrt((kE - 1.0) / (2.0 * kE)) * kPi);
    case 2: return tanh_sq(kPi / (2.0 * std::sqrt(2.0 / std::sin(1.0))));
    case 3: return tanh_sq(kPi * std::sin(0.5) / 2.0);
    case 4: return tanh_sq(kPi / (2.0 * std::sqrt(2.0 * kE)));
    case 5: return tanh_sq(kPi * std::sqrt(0.5 * std::asinh(1.0)) / 2.0);
    case 6: return tanh_sq(std::sqrt((kE - 1.0) / (kE + 1.0)) * kPi / (2.0 * kSqrt2));
    case 7: return tanh_sq(kPi / (2.0 * std::sqrt(3.0)));
    case 8: return tanh_sq(kPi * std::sqrt(kSqrt2 - 1.0) / (2.0 * kSqrt2));
    case 9: {
      const double s = std::sqrt(2.0 * (kSqrt2 - 1.0));
      return tanh_sq(kPi * std::pow(s * (1.0 - s), 0.25) / (2.0 * kSqrt2));
    }
    default: break;
  }
  throw Error(ErrorKind::UnknownId, "corollary radius r" + std::to_string(k));
}

constexpr std::array<const char*, 9> kCorollaryFormulas = {
    "tanh^2(lambda pi), lambda = sqrt((e-1)/(2e))/2",
    "tanh^2(pi/lambda), lambda = 2 sqrt(2 csc 1)",
    "tanh^2(pi lambda/2), lambda = sin(1/2)",
    "tanh^2(pi/(2 sqrt(2e)))",
    "tanh^2(pi sqrt(lambda)/2), lambda = asinh(1)/2",
    "tanh^2(lambda pi/(2 sqrt2)), lambda = sqrt((e-1)/(e+1))",
    "tanh^2(pi/(2 sqrt3))",
    "tanh^2(pi sqrt(eta)/(2 sqrt2)), eta = sqrt2 - 1",
    "tanh^2(pi (sqrt(2 eta)(1 - sqrt(2 eta)))^(1/4)/(2 sqrt2)), eta = sqrt2 - 1",
};

RadiusEntry base(std::string id, std::string family, ParamList params) {
  RadiusEntry e;
  e.id = std::move(id);
  e.family = std::move(family);
  e.params = std::move(params);
  return e;
}

}  // namespace

bool printed_matches(const PrintedValue& p, double v) noexcept {
  if (std::abs(v - p.value) <= kPrintedTolerance) return true;
  return p.truncated && v >= p.value && v < p.value + std::pow(10.0, -p.digits);
}

double majorization_phi(double r, double sigma) { return (1.0 - r * r) * eval_LP(r).real() - r * (1.0 + sigma); }

double majorization_psi(double r, double sigma) {
  return sigma + r * (1.0 - sigma * sigma) / ((1.0 - r * r) * eval_LP(r).real());
}

TargetId corollary_target_map(int k) {
  static constexpr std::array<TargetId, 9> ids = {
      TargetId::ExpShifted, TargetId::Sine,     TargetId::CoshSqrt,   TargetId::Cardioid,       TargetId::Arcsinh,
      TargetId::Sigmoid,    TargetId::Nephroid, TargetId::Lemniscate, TargetId::RightLemniscate,
  };
  if (k < 1 || k > 9) throw Error(ErrorKind::UnknownId, "corollary radius r" + std::to_string(k));
  return ids[static_cast<std::size_t>(k - 1)];
}

double corollary_target_radius(int k) {
  if (k < 1 || k > 9) throw Error(ErrorKind::UnknownId, "corollary radius r" + std::to_string(k));
  static const std::array<double, 9> radii = [] {
    std::array<double, 9> out{};
    for (int j = 1; j <= 9; ++j) {
      const TargetId id = corollary_target_map(j);
      TargetParams p;
      const auto ext = extremize_on_circle([&](Complex z) { return eval_target(id, p, z) - 1.0; }, 1.0,
                                           Functional::Modulus);
      out[static_cast<std::size_t>(j - 1)] = ext.min;
    }
    return out;
  }();
  return radii[static_cast<std::size_t>(k - 1)];
}

RadiusEntry radius_into_flp(FlpClass cls, const TargetParams& params) {
  RadiusEntry e;
  switch (cls) {
    case FlpClass::Sp:
      e = base("sp", "flp-radius", {});
      e.formula = "tanh^2(pi/4)";
      e.closed_form = tanh_sq(kPi / 4.0);
      e.condition = max_re_condition(TargetId::Parabolic, {});
      e.inclusion = target_in_omega(TargetId::Parabolic, {});
      e.witness = boundary_witness("1 + P_{0,pi}(z0) at z0 = R is the vertex 3/2", TargetId::Parabolic, {});
      break;
    case FlpClass::Ss:
      e = base("ss", "flp-radius", {});
      e.formula = "pi/6";
      e.closed_form = kPi / 6.0;
      e.condition = max_re_condition(TargetId::Sine, {});
      e.inclusion = target_in_omega(TargetId::Sine, {});
      break;
    case FlpClass::Delta:
      e = base("crescent", "flp-radius", {});
      e.formula = "5/12";
      e.closed_form = 5.0 / 12.0;
      e.condition = max_re_condition(TargetId::Crescent, {});
      e.inclusion = target_in_omega(TargetId::Crescent, {});
      break;
    case FlpClass::CoshSqrt:
      e = base("cosh-sqrt", "flp-radius", {});
      e.formula = "acosh(3/2)^2";
      e.closed_form = std::pow(std::acosh(1.5), 2);
      e.condition = max_re_condition(TargetId::CoshSqrt, {});
      e.inclusion = target_in_omega(TargetId::CoshSqrt, {});
      e.witness = boundary_witness("cosh(sqrt z0) at z0 = R equals 3/2", TargetId::CoshSqrt, {});
      break;
    case FlpClass::Asinh:
      e = base("asinh", "flp-radius", {});
      e.formula = "sinh(1/2)";
      e.closed_form = std::sinh(0.5);
      e.condition = max_re_condition(TargetId::Arcsinh, {});
      e.inclusion = target_in_omega(TargetId::Arcsinh, {});
      break;
    case FlpClass::Cardioid:
      e = base("cardioid", "flp-radius", {});
      e.formula = "root of r e^r = 1/2";
      e.closed_form = root_of_r_exp_r();
      e.condition = max_re_condition(TargetId::Cardioid, {});
      e.inclusion = target_in_omega(TargetId::Cardioid, {});
      e.printed = {{0.3517, 4, true}};
      e.notes = "closed form memoized by TOMS 748";
      break;
    case FlpClass::Booth: {
      const double a = params.alpha;
      require(a >= 0.0 && a < 1.0, "booth: alpha must lie in [0, 1)");
      e = base("booth", "flp-radius", {{"alpha", a}});
      e.formula = a == 0.0 ? "1/2" : "(sqrt(1+alpha)-1)/alpha";
      e.closed_form = a == 0.0 ? 0.5 : (std::sqrt(1.0 + a) - 1.0) / a;
      TargetParams p;
      p.alpha = a;
      e.condition = max_re_condition(TargetId::Booth, p);
      e.inclusion = target_in_omega(TargetId::Booth, p);
      break;
    }
    case FlpClass::ExpAlpha: {
      const double a = params.alpha;
      require(a >= 0.0 && a < 1.0, "exp-alpha: alpha must lie in [0, 1)");
      e = base("exp-alpha", "flp-radius", {{"alpha", a}});
      const double r = std::log(1.0 - 1.0 / (2.0 * (a - 1.0)));
      e.capped = a >= 1.0 - 1.0 / (2.0 * (kE - 1.0));
      e.formula = e.capped ? "1" : "log(1 - 1/(2(alpha-1)))";
      e.closed_form = e.capped ? 1.0 : r;
      TargetParams p;
      p.alpha = a;
      e.condition = max_re_condition(TargetId::ExpShifted, p);
      e.inclusion = target_in_omega(TargetId::ExpShifted, p);
      break;
    }
    case FlpClass::Janowski: {
      const double A = params.A;
      const double B = params.B;
      require(B >= -1.0 && B < A && A <= 1.0, "janowski: need -1 <= B < A <= 1");
      e = base("janowski", "flp-radius", {{"A", A}, {"B", B}});
      const double d = 2.0 * A - 3.0 * B;
      e.capped = !(d > 1.0);
      e.formula = e.capped ? "1" : "1/(2A-3B)";
      e.closed_form = e.capped ? 1.0 : 1.0 / d;
      e.condition = [A, B](double r) {
        const DiscBound disc = janowski_disc_bound(A, B, std::min(r, 1.0 - 1e-15));
        return disc.center + disc.radius - 1.5;
      };
      TargetParams p;
      p.A = A;
      p.B = B;
      e.inclusion = target_in_omega(TargetId::Janowski, p);
      if (!e.capped) e.witness = boundary_witness("(1 + A z0)/(1 + B z0) at z0 = R equals 3/2", TargetId::Janowski, p);
      break;
    }
  }
  e.bracket_lo = 0.0;
  // Janowski and exp radii can sit at or next to 1, so their bracket is the whole disc.
  e.bracket_hi = (cls == FlpClass::Janowski || cls == FlpClass::ExpAlpha) ? 1.0 : kLpBracketHi;
  return e;
}

RadiusEntry caratheodory_order_radius(double alpha) {
  require(alpha >= 0.0 && alpha < 1.0, "caratheodory-order: alpha must lie in [0, 1)");
  RadiusEntry e = base("caratheodory-order", "caratheodory", {{"alpha", alpha}});
  e.formula = "tanh^2(pi sqrt(1-alpha)/(2 sqrt2))";
  e.closed_form = disc_radius_formula(1.0 - alpha);
  e.condition = [alpha](double r) { return alpha - eval_LP(r).real(); };
  e.bracket_hi = kLpBracketHi;
  e.inclusion = InclusionProbe{eval_LP, half_plane_region(alpha)};
  if (alpha == 0.0) e.printed = {{0.6469, 4, true}};
  return e;
}

RadiusEntry starlike_disc_radius(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "disc-alpha: alpha must lie in (0, 1]");
  RadiusEntry e = base("disc-alpha", "starlike-disc", {{"alpha", alpha}});
  e.formula = "tanh^2(pi sqrt(alpha)/(2 sqrt2))";
  e.closed_form = disc_radius_formula(alpha);
  e.condition = [alpha](double r) {
    const double l = log_ratio_real(r);
    return 2.0 * l * l - alpha * kPi * kPi;
  };
  e.bracket_hi = kLpBracketHi;
  e.inclusion = InclusionProbe{eval_LP, disc_region(1.0, alpha)};
  return e;
}

RadiusEntry corollary_radius(int k) {
  const double formula = corollary_formula(k);
  const std::string name = "r" + std::to_string(k);
  RadiusEntry e = base(name, "corollary", {});
  e.formula = kCorollaryFormulas[static_cast<std::size_t>(k - 1)];
  e.closed_form = formula;
  const double target = corollary_target_radius(k);
  e.condition = [target](double r) { return abs_p0(r) - target; };
  e.bracket_hi = kLpBracketHi;
  e.inclusion = InclusionProbe{eval_LP, disc_region(1.0, target)};
  e.notes = "inner-disc radius of " + std::string(target_name(corollary_target_map(k))) + " = min_{|z|=1} |phi - 1| = " +
            fmt(target);
  if (k == 8) e.printed = {{0.376, 3, true}};
  if (k == 9) e.printed = {{0.283, 3, true}};
  return e;
}

RadiusEntry s_star_beta_radius(double beta) {
  require(beta >= 0.0 && beta < 1.0, "starlike-beta: beta must lie in [0, 1)");
  RadiusEntry e = base("starlike-beta", "starlike-beta", {{"beta", beta}});
  e.formula = "tanh^2(pi sqrt(beta)/(2 sqrt2))";
  e.closed_form = disc_radius_formula(beta);
  e.condition = [beta](double r) {
    const auto ext = extremize_on_circle([](Complex z) { return eval_LP(z) - 1.0; }, r, Functional::Modulus);
    return ext.max - beta;
  };
  e.bracket_hi = kLpBracketHi;
  e.inclusion = InclusionProbe{eval_LP, disc_region(1.0, beta)};
  e.notes = "disc reading |w - 1| < beta; equals caratheodory-order at alpha = 1 - beta";
  return e;
}

RadiusEntry frak_f_radius(double A) {
  require(A >= -1.0 && A <= 1.0, "frak-f: A must lie in [-1, 1]");
  RadiusEntry e = base("frak-f", "frak-f", {{"A", A}});
  e.formula = "(sqrt(A^2+12A+28)-(5+A))/(2A+3)";
  e.closed_form = (std::sqrt(A * A + 12.0 * A + 28.0) - (5.0 + A)) / (2.0 * A + 3.0);
  e.condition = [A](double r) {
    const double q = 1.0 - r * r;
    return (5.0 + A) * r / q - (1.5 - (1.0 + A * r * r) / q);
  };
  e.bracket_hi = kLpBracketHi;
  // Boundary of the disc |w - a(r)| = (5+A) r/(1-r^2), parametrized by z/|z|.
  e.inclusion = InclusionProbe{[A](Complex z) {
                                 const double r = std::abs(z);
                                 const double q = 1.0 - r * r;
                                 const Complex unit = r > 0.0 ? z / r : Complex{1.0, 0.0};
                                 return (1.0 + A * r * r) / q + (5.0 + A) * r / q * unit;
                               },
                               omega_lp_region()};
  if (A == -1.0) e.printed = {{0.123, 3, true}};
  if (A == 1.0) e.printed = {{0.080, 3, true}};
  return e;
}

RadiusEntry m_beta_radius(double beta) {
  require(beta > 1.0 && beta < 1.5, "m-beta: beta must lie in (1, 3/2)");
  RadiusEntry e = base("m-beta", "m-beta", {{"beta", beta}});
  e.formula = "1 + 2 cot^2(d) - 2|sec(d)/tan^2(d)|, d = pi sqrt(beta-1)/sqrt2";
  const double d = kPi * std::sqrt(beta - 1.0) / kSqrt2;
  const double t = std::tan(d);
  e.closed_form = 1.0 + 2.0 / (t * t) - 2.0 * std::abs(1.0 / std::cos(d) / (t * t));
  e.condition = [beta](double r) {
    const double a = std::atan(2.0 * std::sqrt(r) / (1.0 - r));
    return (1.0 - beta) * kPi * kPi + 2.0 * a * a;
  };
  e.bracket_hi = kLpBracketHi;
  e.inclusion = InclusionProbe{eval_LP, Region{"re<" + fmt(beta), [beta](Complex w) { return beta - w.real(); }}};
  return e;
}

RadiusEntry majorization_radius() {
  RadiusEntry e = base("majorization", "majorization", {});
  e.formula = "smallest root of pi^2 r - (1-r^2)(pi^2 - 2 log^2((1+sqrt r)/(1-sqrt r)))";
  e.closed_form = majorization_root();
  e.condition = [](double r) { return -majorization_phi(r, 0.0); };
  e.bracket_lo = 0.1;
  e.bracket_hi = 0.6;
  e.printed = {{0.4220, 4, true}};
  const double sigma_one = refine_root([](double r) { return -majorization_phi(r, 1.0); }, 0.1, 0.6, kRootTol);
  e.notes = "condition Phi(r,0); the sigma = 1 equation 2 pi^2 r - (1-r^2)(...) has root " + fmt(sigma_one) +
            "; closed form memoized by TOMS 748";
  return e;
}

RadiusEntry omega_radius() {
  RadiusEntry e = base("omega", "omega", {});
  e.formula = "smallest root of 4 g0(r) log^2((1+sqrt r)/(1-sqrt r)) = pi^2";
  e.closed_form = omega_root_from_series();
  e.condition = [](double r) {
    const double l = log_ratio_real(r);
    return 4.0 * growth_bounds(r).upper * l * l - kPi * kPi;
  };
  e.bracket_lo = 0.3;
  e.bracket_hi = 0.7;
  e.printed = {{0.522, 3, true}, {0.522864, 6, false}};
  e.notes = "closed form from the degree-64 g0 series (TOMS 748); oracle from quadrature g0 (bisection)";
  return e;
}

std::vector<std::string> radius_ids() {
  std::vector<std::string> ids = {"sp",     "ss",       "crescent", "cosh-sqrt",          "asinh",
                                  "cardioid", "booth",  "exp-alpha", "janowski", "caratheodory-order",
                                  "disc-alpha", "starlike-beta"};
  for (int k = 1; k <= 9; ++k) ids.push_back("r" + std::to_string(k));
  for (const char* id : {"frak-f", "m-beta", "majorization", "omega"}) ids.emplace_back(id);
  return ids;
}

RadiusEntry make_radius_entry(std::string_view id, const ParamList& params) {
  auto take = [&](std::initializer_list<std::pair<const char*, double>> defaults) {
    std::vector<double> values;
    for (const auto& [name, value] : defaults) values.push_back(value);
    for (const auto& [key, value] : params) {
      bool known = false;
      std::size_t i = 0;
      for (const auto& [name, _] : defaults) {
        if (key == name) {
          values[i] = value;
          known = true;
        }
        ++i;
      }
      if (!known) throw Error(ErrorKind::ParamRange, "unknown parameter '" + key + "' for " + std::string(id));
    }
    return values;
  };

  if (id == "sp") {
    take({});
    return radius_into_flp(FlpClass::Sp);
  }
  if (id == "ss") {
    take({});
    return radius_into_flp(FlpClass::Ss);
  }
  if (id == "crescent") {
    take({});
    return radius_into_flp(FlpClass::Delta);
  }
  if (id == "cosh-sqrt") {
    take({});
    return radius_into_flp(FlpClass::CoshSqrt);
  }
  if (id == "asinh") {
    take({});
    return radius_into_flp(FlpClass::Asinh);
  }
  if (id == "cardioid") {
    take({});
    return radius_into_flp(FlpClass::Cardioid);
  }
  if (id == "booth" || id == "exp-alpha") {
    TargetParams p;
    p.alpha = take({{"alpha", id == "booth" ? 0.5 : 0.0}})[0];
    return radius_into_flp(id == "booth" ? FlpClass::Booth : FlpClass::ExpAlpha, p);
  }
  if (id == "janowski") {
    const auto v = take({{"A", 1.0}, {"B", -1.0}});
    TargetParams p;
    p.A = v[0];
    p.B = v[1];
    return radius_into_flp(FlpClass::Janowski, p);
  }
  if (id == "caratheodory-order") return caratheodory_order_radius(take({{"alpha", 0.0}})[0]);
  if (id == "disc-alpha") return starlike_disc_radius(take({{"alpha", 1.0}})[0]);
  if (id == "starlike-beta") return s_star_beta_radius(take({{"beta", 0.5}})[0]);
  if (id.size() == 2 && id[0] == 'r' && id[1] >= '1' && id[1] <= '9') {
    take({});
    return corollary_radius(id[1] - '0');
  }
  if (id == "frak-f") return frak_f_radius(take({{"A", 0.0}})[0]);
  if (id == "m-beta") return m_beta_radius(take({{"beta", 1.25}})[0]);
  if (id == "majorization") {
    take({});
    return majorization_radius();
  }
  if (id == "omega") {
    take({});
    return omega_radius();
  }
  throw Error(ErrorKind::UnknownId, "no radius entry '" + std::string(id) + "'");
}

std::vector<RadiusEntry> radius_catalog() {
  std::vector<RadiusEntry> out;
  for (FlpClass c : {FlpClass::Sp, FlpClass::Ss, FlpClass::Delta, FlpClass::CoshSqrt, FlpClass::Asinh,
                     FlpClass::Cardioid}) {
    out.push_back(radius_into_flp(c));
  }
  for (double a : {0.0, 0.25, 0.5, 0.9}) {
    TargetParams p;
    p.alpha = a;
    out.push_back(radius_into_flp(FlpClass::Booth, p));
  }
  for (double a : {0.0, 0.3, 0.6, 0.8}) {
    TargetParams p;
    p.alpha = a;
    out.push_back(radius_into_flp(FlpClass::ExpAlpha, p));
  }
  for (double A : {-0.6, -0.2, 0.2, 0.6, 1.0}) {
    for (int j = 1; j <= 5; ++j) {
      TargetParams p;
      p.A = A;
      p.B = -1.0 + (A + 1.0) * j / 6.0;
      out.push_back(radius_into_flp(FlpClass::Janowski, p));
    }
  }
  for (double a : {0.0, 0.25, 0.5, 0.75, 0.9}) out.push_back(caratheodory_order_radius(a));
  for (double a : {0.1, 0.25, 0.5, 0.75, 1.0}) out.push_back(starlike_disc_radius(a));
  for (double b : {0.25, 0.5, 0.75}) out.push_back(s_star_beta_radius(b));
  for (int k = 1; k <= 9; ++k) out.push_back(corollary_radius(k));
  for (double A : {-1.0, 0.0, 1.0}) out.push_back(frak_f_radius(A));
  for (double b : {1.1, 1.25, 1.4}) out.push_back(m_beta_radius(b));
  out.push_back(majorization_radius());
  out.push_back(omega_radius());
  return out;
}

}  // namespace flp
