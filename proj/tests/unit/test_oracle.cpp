#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flp/error.hpp"
#include "flp/map_kernel.hpp"
#include "flp/oracle.hpp"
#include "flp/power_series.hpp"

using namespace flp;
using std::numbers::pi;

TEST_CASE("bracket_root examples") {
  CHECK(bracket_root([](double r) { return r - 0.5; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  const double c = bracket_root([](double r) { return r * std::exp(r) - 0.5; }, 0.0, 1.0);
  CHECK(c == doctest::Approx(0.3517).epsilon(1e-4));
  try {
    (void)bracket_root([](double r) { return r + 1.0; }, 0.0, 1.0);
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSignChange);
  }
}

TEST_CASE("bracket_root does not depend on the scan resolution") {
  auto f = [](double r) { return eval_LP(r).real() - 0.25; };
  const auto [a1, b1] = scan_bracket(f, 0.0, 0.99, 64);
  const auto [a2, b2] = scan_bracket(f, 0.0, 0.99, 128);
  CHECK(std::abs(refine_root(f, a1, b1) - refine_root(f, a2, b2)) < 1e-12);
}

TEST_CASE("circle extrema") {
  const auto lp = [](Complex z) { return eval_LP(z); };
  const CircleExtrema c0 = extremize_on_circle(lp, 0.0, Functional::RealPart);
  CHECK(c0.min == doctest::Approx(1.0));
  CHECK(c0.max == doctest::Approx(1.0));
  const CircleExtrema s = extremize_on_circle([](Complex z) { return 1.0 + std::sin(z); }, 0.4, Functional::RealPart);
  CHECK(s.max == doctest::Approx(1.0 + std::sin(0.4)).epsilon(1e-12));
}

TEST_CASE("growth bounds against series") {
  const GrowthBounds z = growth_bounds(0.0);
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
  const PowerSeries f0 = extremal_f0(400), g0 = extremal_g0(400);
  for (double r : {0.2, 0.5, 0.8}) {
    const GrowthBounds b = growth_bounds(r);
    CHECK(std::abs(b.lower - f0.evaluate(r).real()) < 1e-8);
    CHECK(std::abs(b.upper - g0.evaluate(r).real()) < 1e-8);
  }
}

TEST_CASE("covering constant is stable and increasing") {
  const CoveringResult c = covering_constant();
  REQUIRE(c.sequence.size() >= 2);
  for (std::size_t i = 1; i < c.sequence.size(); ++i) CHECK(c.sequence[i] >= c.sequence[i - 1]);
  CHECK(std::abs(c.sequence.back() - c.sequence[c.sequence.size() - 2]) < 1e-8);
  const double near_one = growth_bounds(1.0 - 1e-6).upper;
  CHECK(c.value > near_one);
  CHECK(c.value - near_one < 1e-5);
}

TEST_CASE("inclusion checks") {
  const auto cosh_sqrt = [](Complex z) { return eval_target(TargetId::CoshSqrt, {}, z); };
  const double a = std::acosh(1.5);
  const double r = a * a;
  CHECK(check_subordination_inclusion(cosh_sqrt, r * (1 - 1e-6), omega_lp_region()).passed);
  CHECK_FALSE(check_subordination_inclusion(cosh_sqrt, r * (1 + 1e-3), omega_lp_region()).passed);
  CHECK(check_subordination_inclusion([](Complex) { return Complex(1.0); }, 0.9, omega_lp_region()).passed);
}

TEST_CASE("sufficient condition") {
  const AnalyticSample id{PowerSeries(std::vector<Complex>{0.0, 1.0}), 1.0};
  for (double t : {0.0, 0.5, 1.0}) CHECK(certify_sufficient_condition(id, t).passed);
  const auto quad = [](double c) { return AnalyticSample{PowerSeries(std::vector<Complex>{0.0, 1.0, c}), 1.0}; };
  CHECK(certify_sufficient_condition(quad(0.3), 0.0).passed);
  CHECK_FALSE(certify_sufficient_condition(quad(0.4), 0.0).passed);
}

TEST_CASE("Caratheodory order") {
  const AnalyticSample lp{NamedMap{TargetId::LogParabolic, {}}, 1.0};
  const double t = std::tanh(pi / (2.0 * std::sqrt(2.0)));
  CHECK(caratheodory_order_check(lp, 0.0, t * t * (1 - 1e-6)).passed);
  CHECK_FALSE(caratheodory_order_check(lp, 0.0, t * t * (1 + 1e-3)).passed);
  const AnalyticSample one{PowerSeries(std::vector<Complex>{1.0}), 1.0};
  CHECK(caratheodory_order_check(one, 0.9, 0.5).passed);
}

TEST_CASE("disc bounds") {
  const DiscBound d0 = janowski_disc_bound(1.0, -1.0, 0.0);
  CHECK(d0.center == 1.0);
  CHECK(d0.radius == 0.0);
  const double r = 0.3, q = 1 - r * r;
  const DiscBound d = janowski_disc_bound(1.0, -1.0, r);
  CHECK(d.center == doctest::Approx((1 + r * r) / q));
  CHECK(d.radius == doctest::Approx(2 * r / q));
  const DiscBound o = order_alpha_disc_bound(0.0, r);
  CHECK(o.center == doctest::Approx(d.center));
  CHECK(o.radius == doctest::Approx(d.radius));
  try {
    (void)janowski_disc_bound(0.5, 0.5, 0.3);
    FAIL("expected ParamRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParamRange);
  }
}
