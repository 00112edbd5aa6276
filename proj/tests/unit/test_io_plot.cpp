#include <doctest.h>

#include <sstream>

#include "flp/error.hpp"
#include "flp/plot.hpp"
#include "flp/power_series.hpp"
#include "flp/radius_catalog.hpp"
#include "flp/region.hpp"
#include "flp/series_io.hpp"
#include "flp/verification.hpp"

using namespace flp;

namespace {
bool parse_fails(const std::string& text) {
  std::istringstream in(text);
  try {
    (void)series_from_csv(in);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ParseError;
  }
  return false;
}
}  // namespace

TEST_CASE("series CSV round trip") {
  const PowerSeries g = extremal_g0(12);
  std::istringstream in(series_to_csv(g));
  const PowerSeries back = series_from_csv(in);
  REQUIRE(back.degree() == g.degree());
  for (std::size_t n = 0; n <= g.degree(); ++n) CHECK(back[n] == g[n]);
}

TEST_CASE("series CSV accepts two columns and rejects garbage") {
  std::istringstream in("index,re\n1,1\n3,0.5\n");
  const PowerSeries s = series_from_csv(in);
  CHECK(s.degree() == 3);
  CHECK(s[2] == Complex(0.0));
  CHECK(s[3] == Complex(0.5));
  CHECK(parse_fails(""));
  CHECK(parse_fails("1,abc,0\n"));
  CHECK(parse_fails("1,1,0\n1,2,0\n"));
}

TEST_CASE("region plot contains the vertex") {
  PlotSpec spec;
  spec.kind = PlotKind::Region;
  bool vertex = false;
  for (const Curve& c : plot_curves(spec)) {
    for (const Complex& p : c.points) vertex = vertex || (p == Complex(1.5, 0.0));
  }
  CHECK(vertex);
}

TEST_CASE("map image approaches the parabola as r grows") {
  auto gap = [](double r) {
    PlotSpec spec;
    spec.kind = PlotKind::MapImage;
    spec.r = r;
    double best = 1e9;
    for (const Curve& c : plot_curves(spec)) {
      if (c.name.find("|z|=") == std::string::npos) continue;
      for (const Complex& p : c.points) best = std::min(best, omega_margin(p));
    }
    return best;
  };
  const double g5 = gap(0.5), g9 = gap(0.9), g99 = gap(0.99);
  CHECK(g99 > 0.0);
  CHECK(g99 < g9);
  CHECK(g9 < g5);
}

TEST_CASE("corollary figure for r7 stays inside the nephroid") {
  PlotSpec spec;
  spec.kind = PlotKind::CorollaryFigure;
  spec.corollary = 7;
  spec.format = PlotFormat::Csv;
  const std::string a = render_plot(spec);
  CHECK(a == render_plot(spec));
  CHECK(a.rfind("# schema: 1", 0) == 0);
  CHECK(check_subordination_inclusion([](Complex z) { return eval_LP(z); },
                                      corollary_radius(7).closed_form * (1 - 1e-6),
                                      disc_region(1.0, corollary_target_radius(7)))
            .passed);
}

TEST_CASE("plot spec validation") {
  PlotSpec spec;
  spec.samples = 32;
  CHECK_THROWS_AS((void)render_plot(spec), Error);
  spec.samples = 512;
  spec.kind = PlotKind::MapImage;
  spec.r = 1.0;
  CHECK_THROWS_AS((void)render_plot(spec), Error);
}

TEST_CASE("verify reports are deterministic") {
  VerifyOptions o;
  o.samples = 256;
  CHECK(to_jsonl(verify_all(o, "cardioid")) == to_jsonl(verify_all(o, "cardioid")));
  CHECK(to_jsonl(verify_all(o, "majorization")).find("majorization/agreement") != std::string::npos);
}

TEST_CASE("tolerance below double precision reports failures") {
  VerifyOptions o;
  o.tolerance = 1e-15;
  bool any_failed = false;
  for (const auto& r : verify_all(o, "r1")) any_failed = any_failed || !r.passed;
  CHECK(any_failed);
}
