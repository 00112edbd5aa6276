#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flp/error.hpp"
#include "flp/map_kernel.hpp"
#include "flp/power_series.hpp"

using namespace flp;
using std::numbers::pi;

namespace {
bool throws_kind(auto&& fn, ErrorKind kind) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}
}  // namespace

TEST_CASE("P0 and LP at distinguished points") {
  CHECK(std::abs(eval_P0(0.0)) == 0.0);
  const double l3 = std::log(3.0);
  CHECK(eval_P0(0.25).real() == doctest::Approx(-2.0 / (pi * pi) * l3 * l3).epsilon(1e-14));
  CHECK(std::abs(eval_LP(0.0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(eval_LP(-1.0) - Complex(1.5)) < 1e-14);
  const double t = std::tanh(pi / (2.0 * std::sqrt(2.0)));
  CHECK(std::abs(eval_LP(t * t)) < 1e-12);
  CHECK(p0_real(0.25) == doctest::Approx(eval_P0(0.25).real()).epsilon(1e-14));
  CHECK(p0_negative_real(0.3) == doctest::Approx(eval_P0(-0.3).real()).epsilon(1e-13));
}

TEST_CASE("LP is singular at z = 1") {
  CHECK(throws_kind([] { (void)eval_LP(1.0); }, ErrorKind::SingularPoint));
  CHECK(eval_P({0.0, pi}, 1.0 - 1e-9).real() > 10.0);
}

TEST_CASE("sqrt_upper branch and conjugate symmetry on a grid") {
  for (int i = 1; i <= 20; ++i) {
    for (int k = 0; k < 64; ++k) {
      const double r = 0.049 * i;
      const Complex z = std::polar(r, -pi + 2.0 * pi * (k + 0.5) / 64.0);
      const Complex s = sqrt_upper(z);
      CHECK(std::abs(s * s - z) < 1e-12);
      CHECK(s.imag() >= -1e-15);
      CHECK(std::abs(eval_LP(std::conj(z)) - std::conj(eval_LP(z))) < 1e-12);
    }
  }
}

TEST_CASE("P0 agrees with its series on |z| <= 0.5") {
  const PowerSeries s = p0_coefficients(120);
  for (int k = 0; k < 32; ++k) {
    const Complex z = std::polar(0.5, 2.0 * pi * k / 32.0);
    CHECK(std::abs(s.evaluate(z) - eval_P0(z)) < 1e-12);
  }
}

TEST_CASE("every target map is normalized at the origin") {
  for (TargetId id : all_targets()) {
    TargetParams p;
    if (id == TargetId::Janowski) p = {0.0, 0.5, -0.5};
    CHECK(std::abs(eval_target(id, p, 0.0) - Complex(1.0)) < 1e-15);
    CHECK(parse_target(target_name(id)) == id);
  }
}

TEST_CASE("target map examples") {
  const Complex s = eval_target(TargetId::Sine, {}, 0.3);
  CHECK(s.real() == doctest::Approx(1.0 + std::sin(0.3)));
  CHECK(s.imag() == 0.0);
  CHECK(std::abs(eval_target(TargetId::Janowski, {0.0, 1.0, -1.0}, 0.5) - Complex(3.0)) < 1e-15);
  CHECK(throws_kind([] { (void)parse_target("nope"); }, ErrorKind::UnknownTarget));
  CHECK(throws_kind([] { (void)eval_target(TargetId::Janowski, {0.0, 0.5, 0.5}, 0.1); }, ErrorKind::ParamRange));
}
