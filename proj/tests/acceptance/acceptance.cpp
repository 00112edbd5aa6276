// One PASS/FAIL line per acceptance criterion. argv[1] is the flp executable (criterion 8).

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flp/map_kernel.hpp"
#include "flp/oracle.hpp"
#include "flp/radius_catalog.hpp"
#include "flp/region.hpp"
#include "flp/report.hpp"
#include "flp/verification.hpp"

using namespace flp;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string describe(const VerificationReport& r) {
  std::ostringstream o;
  o << r.id;
  for (const auto& [k, v] : r.params) o << ' ' << k << '=' << format_double(v);
  o << ": closed " << format_double(r.closed_form) << " oracle " << format_double(r.oracle_value) << " gap "
    << format_double(r.gap) << " (" << r.notes << ')';
  return o.str();
}

void absorb(Outcome& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) out.require(r.passed, describe(r));
}

Outcome radius_agreement() {
  Outcome out;
  const auto catalog = radius_catalog();
  int agreements = 0, printed = 0;
  std::set<std::pair<double, double>> janowski_grid;
  for (const auto& e : catalog) {
    if (e.id == "janowski") janowski_grid.insert({e.params[0].second, e.params[1].second});
    for (const auto& r : verify_entry(e)) {
      if (ends_with(r.id, "/agreement")) {
        ++agreements;
        out.require(r.passed && r.gap < 1e-9, describe(r));
      } else if (ends_with(r.id, "/printed")) {
        ++printed;
        out.require(r.passed, describe(r));
      }
    }
  }
  out.require(catalog.size() >= 20, "fewer than 20 radius entries");
  out.require(janowski_grid.size() == 25, "Janowski grid is not 5x5");
  out.summary = std::to_string(agreements) + " closed-form/oracle agreements within 1e-9, " + std::to_string(printed) +
                " printed decimals";
  return out;
}

Outcome series_reproduction() {
  Outcome out;
  const auto reports = verify_suite("g0-series");
  absorb(out, reports);
  out.summary = "g0 coefficients a2..a4 from the exp-of-integral recurrence within 1e-12";
  return out;
}

Outcome real_part_lemma() {
  Outcome out;
  const auto p0 = [](Complex z) { return eval_P0(z); };
  double worst = 0.0;
  double prev_max = -1.0, prev_min = 1.0;
  for (int i = 1; i <= 19; ++i) {
    const double r = 0.05 * i;
    const ReBounds b = re_p0_bounds(r);
    const CircleExtrema e = extremize_on_circle(p0, r, Functional::RealPart);
    const double gap = std::max(std::abs(e.min - b.min), std::abs(e.max - b.max));
    worst = std::max(worst, gap);
    out.require(gap < 1e-8, "extremes differ at r=" + format_double(r));
    out.require(std::abs(e.argmin_angle) < 1e-6, "argmin not at 0 for r=" + format_double(r));
    out.require(std::abs(std::abs(e.argmax_angle) - std::numbers::pi) < 1e-6,
                "argmax not at pi for r=" + format_double(r));
    const double g_max = re_p0_profile(r, 0.0), g_min = re_p0_profile(r, 1.0);
    out.require(g_max > prev_max, "G(r,0) not increasing at r=" + format_double(r));
    out.require(g_min < prev_min, "G(r,1) not decreasing at r=" + format_double(r));
    prev_max = g_max;
    prev_min = g_min;
  }
  out.summary = "19 radii, worst extremum gap " + format_double(worst);
  return out;
}

Outcome inscribed_discs() {
  Outcome out;
  constexpr int n = 256;
  auto worst_margin = [](double a, double rho) {
    double m = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      const double th = -std::numbers::pi + 2.0 * std::numbers::pi * (k + 1) / n;
      m = std::min(m, omega_margin(Complex(a, 0.0) + std::polar(rho, th)));
    }
    return m;
  };
  double worst_identity = 0.0;
  for (double a : {-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.4}) {
    const double ra = inscribed_disc(a).radius;
    out.require(worst_margin(a, ra * (1 - 1e-9)) > 0.0, "disc not inside at a=" + format_double(a));
    out.require(worst_margin(a, ra * (1 + 1e-3)) < 0.0, "enlarged disc still inside at a=" + format_double(a));
    if (a <= 0.5) {
      double best = std::numeric_limits<double>::infinity();
      for (double x : critical_abscissae(a)) best = std::min(best, boundary_distance_profile(a, x));
      worst_identity = std::max(worst_identity, std::abs(ra * ra - best));
      out.require(std::abs(ra * ra - best) < 1e-9, "r_a^2 differs from min D_a at a=" + format_double(a));
    }
  }
  out.summary = "7 centers at 256 samples, worst |r_a^2 - min D_a| " + format_double(worst_identity);
  return out;
}

Outcome witnesses() {
  Outcome out;
  int count = 0;
  for (const auto& e : radius_catalog()) {
    if (e.id != "sp" && e.id != "cosh-sqrt" && e.id != "janowski") continue;
    for (const auto& r : verify_entry(e)) {
      if (ends_with(r.id, "/witness")) {
        ++count;
        out.require(r.passed && std::abs(r.closed_form - r.oracle_value) < 1e-9, describe(r));
      } else if (ends_with(r.id, "/sign-change") || ends_with(r.id, "/inclusion-inside") ||
                 ends_with(r.id, "/inclusion-outside")) {
        out.require(r.passed, describe(r));
      }
    }
  }
  out.require(count >= 3, "missing witnesses");
  out.summary = std::to_string(count) + " witness margins within 1e-9 plus two-sided probes";
  return out;
}

Outcome sufficiency() {
  Outcome out;
  const auto a = verify_suite("sufficiency");
  const auto b = verify_suite("certify-pair");
  absorb(out, a);
  absorb(out, b);
  out.summary = std::to_string(a.size()) + " sufficiency reports, c=0.3 passes and c=0.4 fails";
  return out;
}

Outcome growth() {
  Outcome out;
  const auto g = verify_suite("growth");
  const auto s = verify_suite("sandwich");
  const auto c = verify_suite("covering");
  absorb(out, g);
  absorb(out, s);
  absorb(out, c);
  const CoveringResult cov = covering_constant();
  const auto& seq = cov.sequence;
  out.require(seq.size() >= 2 && std::abs(seq.back() - seq[seq.size() - 2]) < 1e-8, "covering sequence not stable");
  out.summary = "quadrature vs series at r<=0.9, " + std::to_string(s.size()) + " sandwich reports, covering constant " +
                format_double(cov.value);
  return out;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism(const std::string& exe) {
  Outcome out;
  if (exe.empty()) {
    out.require(false, "no flp executable given");
    return out;
  }
  int s1 = 0, s2 = 0;
  const std::string cmd = "'" + exe + "' verify --all";
  const std::string a = run_capture(cmd, s1);
  const std::string b = run_capture(cmd, s2);
  out.require(!a.empty(), "verify --all produced no output");
  out.require(a == b, "outputs differ");
  out.require(s1 == s2, "exit statuses differ");
  out.summary = "verify --all twice, " + std::to_string(a.size()) + " identical bytes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"radius agreement", radius_agreement},
      {"series reproduction", series_reproduction},
      {"real-part lemma", real_part_lemma},
      {"inscribed discs", inscribed_discs},
      {"sharpness witnesses", witnesses},
      {"sufficiency implication", sufficiency},
      {"growth sandwich", growth},
      {"determinism", [&] { return determinism(exe); }},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    if (!o.summary.empty()) std::cout << " (" << o.summary << ')';
    std::cout << '\n';
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    failed += o.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
