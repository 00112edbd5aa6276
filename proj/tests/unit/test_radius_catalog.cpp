#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "flp/error.hpp"
#include "flp/radius_catalog.hpp"
#include "flp/verification.hpp"

using namespace flp;
using std::numbers::pi;

TEST_CASE("main theorem values") {
  CHECK(radius_into_flp(FlpClass::Ss).closed_form == doctest::Approx(pi / 6));
  CHECK(radius_into_flp(FlpClass::Delta).closed_form == doctest::Approx(5.0 / 12));
  CHECK(radius_into_flp(FlpClass::ExpAlpha, {0.0}).closed_form == doctest::Approx(std::log(1.5)));
  CHECK(radius_into_flp(FlpClass::Cardioid).closed_form == doctest::Approx(0.3517).epsilon(1e-4));
}

TEST_CASE("every catalog entry agrees with its oracle and crosses zero") {
  std::set<std::string> families;
  for (const auto& e : radius_catalog()) {
    families.insert(e.id);
    CAPTURE(e.id);
    CHECK(e.closed_form > 0.0);
    CHECK(e.closed_form <= 1.0);
    CHECK(std::abs(e.closed_form - oracle_root(e)) < 1e-9);
    if (!e.capped) {
      CHECK(e.condition(e.closed_form - 1e-3) < 0.0);
      if (e.closed_form + 1e-3 < 1.0) CHECK(e.condition(e.closed_form + 1e-3) > 0.0);
    }
  }
  CHECK(families.size() == radius_ids().size());
}

TEST_CASE("monotonicity in parameters") {
  double prev = 1.0;
  for (double a : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95}) {
    const double g = caratheodory_order_radius(a).closed_form;
    CHECK(g < prev);
    prev = g;
  }
  prev = 0.0;
  for (double a : {0.1, 0.3, 0.5, 0.7, 1.0}) {
    const double r = starlike_disc_radius(a).closed_form;
    CHECK(r > prev);
    prev = r;
  }
  prev = 1.0;
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double r = radius_into_flp(FlpClass::Booth, {a}).closed_form;
    CHECK(r < prev);
    prev = r;
  }
  prev = 1.0;
  for (double a : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double r = frak_f_radius(a).closed_form;
    CHECK(r < prev);
    prev = r;
  }
}

TEST_CASE("duality and limits") {
  for (double b : {0.1, 0.5, 0.9}) {
    CHECK(s_star_beta_radius(b).closed_form == caratheodory_order_radius(1.0 - b).closed_form);
  }
  CHECK(caratheodory_order_radius(1.0 - 1e-12).closed_form < 1e-10);
  CHECK(starlike_disc_radius(1e-4).closed_form / (1e-4 * pi * pi / 8) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(m_beta_radius(1.0 + 1e-6).closed_form < 1e-3);
  CHECK(m_beta_radius(1.5 - 1e-6).closed_form > 0.99);
}

TEST_CASE("frak-f closed forms and disc aggregation") {
  CHECK(frak_f_radius(-1.0).closed_form == doctest::Approx(std::sqrt(17.0) - 4).epsilon(1e-14));
  CHECK(frak_f_radius(1.0).closed_form == doctest::Approx((std::sqrt(41.0) - 6) / 5).epsilon(1e-14));
  for (double A : {-1.0, 0.0, 1.0}) {
    for (double r : {0.05, 0.1, 0.2}) {
      const double q = 1 - r * r;
      // A = -1 makes (1+Az)/(1-z) the constant 1.
      const DiscBound j = A > -1.0 ? janowski_disc_bound(A, -1.0, r) : DiscBound{1.0, 0.0};
      const DiscBound p = order_alpha_disc_bound(0.0, r);
      // Janowski disc of (1+Az)/(1-z) plus the two log-derivative discs of z p'/p.
      const double p_rad = 2 * r / q;
      CHECK(j.center == doctest::Approx((1 + A * r * r) / q));
      CHECK(j.radius + 2 * p_rad == doctest::Approx((5 + A) * r / q));
      CHECK(p.radius == doctest::Approx(p_rad));
    }
  }
}

TEST_CASE("majorization profile") {
  for (double s : {-1.0, 0.0, 0.5, 1.0}) CHECK(majorization_phi(0.0, s) == doctest::Approx(1.0));
  const double t = std::tanh(pi / (2.0 * std::sqrt(2.0)));
  const double rs = t * t;
  CHECK(majorization_phi(rs, 0.0) == doctest::Approx(-rs));
  CHECK(majorization_phi(rs, 1.0) < 0.0);
  CHECK(majorization_psi(0.3, 1.0) == doctest::Approx(1.0));
  CHECK(majorization_radius().closed_form == doctest::Approx(0.4220).epsilon(1e-4));
}

TEST_CASE("printed-decimal rule") {
  CHECK(printed_matches({0.3517, 4, true}, 0.351733));
  CHECK(printed_matches({0.376, 3, true}, 0.3766));
  CHECK(printed_matches({0.5, 1, false}, 0.5004));
  CHECK_FALSE(printed_matches({0.5, 1, false}, 0.5006));
}

TEST_CASE("omega radius condition") {
  const RadiusEntry e = omega_radius();
  CHECK(e.condition(0.0) < 0.0);
  CHECK(e.condition(0.6) > 0.0);
}

TEST_CASE("entry lookup errors") {
  try {
    (void)make_radius_entry("no-such");
    FAIL("expected UnknownId");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
  try {
    (void)make_radius_entry("booth", {{"beta", 0.5}});
    FAIL("expected ParamRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParamRange);
  }
  try {
    (void)corollary_radius(10);
    FAIL("expected UnknownId");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }
}

TEST_CASE("witnesses land on the boundary") {
  for (const char* id : {"sp", "cosh-sqrt", "janowski"}) {
    const RadiusEntry e = make_radius_entry(id);
    REQUIRE(e.witness);
    CHECK(std::abs(e.witness->margin(e.closed_form)) < 1e-9);
  }
}
