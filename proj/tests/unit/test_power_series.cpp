#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flp/error.hpp"
#include "flp/map_kernel.hpp"
#include "flp/power_series.hpp"

using namespace flp;
using std::numbers::pi;

TEST_CASE("P0 coefficients") {
  const PowerSeries s = p0_coefficients(40);
  CHECK(s[0] == Complex(0.0));
  CHECK(s[1].real() == doctest::Approx(-8.0 / (pi * pi)).epsilon(1e-15));
  CHECK(s[2].real() == doctest::Approx(-16.0 / (3.0 * pi * pi)).epsilon(1e-15));
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(s[n].real() < 0.0);
    CHECK(s[n].imag() == 0.0);
  }
}

TEST_CASE("exp and integrate") {
  CHECK(std::abs(series_exp(PowerSeries(4))[0] - Complex(1.0)) == 0.0);
  const PowerSeries e = series_exp(PowerSeries::monomial(1, 3));
  CHECK(e[2].real() == doctest::Approx(0.5));
  CHECK(e[3].real() == doctest::Approx(1.0 / 6.0));
  CHECK(integrate_over_t(PowerSeries::monomial(2, 4))[2].real() == doctest::Approx(0.5));
  CHECK(integrate_over_t(PowerSeries::monomial(1, 4))[1].real() == doctest::Approx(1.0));
  try {
    (void)series_exp(PowerSeries(std::vector<Complex>{1.0, 2.0}));
    FAIL("expected NonzeroConstantTerm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroConstantTerm);
  }
}

TEST_CASE("exp and log round trip") {
  PowerSeries p(std::vector<Complex>{1.0, 0.3, {-0.2, 0.1}, 0.05, 0.0, {0.01, -0.02}, 0.0, 0.0, 0.0, 0.0, 0.0});
  const PowerSeries back = series_exp(series_log(p));
  for (std::size_t n = 0; n <= p.degree(); ++n) CHECK(std::abs(back[n] - p[n]) < 1e-12);
}

TEST_CASE("f0 and g0 leading terms") {
  const PowerSeries f = extremal_f0(10);
  const PowerSeries g = extremal_g0(10);
  CHECK(f[1].real() == doctest::Approx(1.0));
  CHECK(f[2].real() == doctest::Approx(-8.0 / (pi * pi)).epsilon(1e-14));
  CHECK(g[2].real() == doctest::Approx(8.0 / (pi * pi)).epsilon(1e-14));
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(std::abs(f[n].imag()) < 1e-14);
    CHECK(std::abs(g[n].imag()) < 1e-14);
  }
}

TEST_CASE("f0 satisfies z f0' = f0 LP coefficientwise") {
  const std::size_t n = 48;
  const PowerSeries f = extremal_f0(n);
  const PowerSeries lhs = f.euler();
  const PowerSeries rhs = f * lp_series(n);
  for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-12);
}

TEST_CASE("ratio tail bound is small well inside the disc") {
  const PowerSeries g = extremal_g0(kDefaultSeriesDegree);
  CHECK(ratio_tail_bound(g, 0.52) < 1e-12);
}
