#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flp/radius_catalog.hpp"
#include "flp/report.hpp"

namespace flp {

struct VerifyOptions {
  double tolerance = 1e-9;  // closed form vs oracle root
  int samples = 4096;       // per inclusion probe
  int threads = 1;
  std::uint64_t seed = 20240601;  // random members in the sufficiency and sandwich suites
};

// Two-sided probes: the condition must change sign across R -+ kSignProbe, and the
// image must fit at R(1 - kInsideShrink) but not at R(1 + kOutsideGrow).
inline constexpr double kSignProbe = 1e-3;
inline constexpr double kInsideShrink = 1e-6;
inline constexpr double kOutsideGrow = 1e-3;
inline constexpr double kWitnessTolerance = 1e-9;

/// Bisection root of entry.condition on its bracket, or bracket_hi when the
/// condition never turns positive there.
[[nodiscard]] double oracle_root(const RadiusEntry& entry);

/// Agreement, printed decimals, sign change, inclusion probes and witness, as applicable.
[[nodiscard]] std::vector<VerificationReport> verify_entry(const RadiusEntry& entry, const VerifyOptions& options = {});

/// Checks outside the radius catalog: g0 coefficients, growth bounds (series vs quadrature),
/// covering constant, the sufficiency pair f = z + c z^2, random polynomials passing the
/// sufficient condition ("sufficiency"), and random class members against the growth bounds
/// ("sandwich").
[[nodiscard]] std::vector<std::string> suite_ids();
[[nodiscard]] std::vector<VerificationReport> verify_suite(std::string_view id, const VerifyOptions& options = {});

inline constexpr int kSufficiencyTarget = 200;
inline constexpr int kSandwichMembers = 100;

/// Schwarz function e^{i gamma} z prod (z - a_j)/(1 - conj(a_j) z) with |a_j| <= 0.8.
struct SchwarzSample {
  double gamma = 0.0;
  std::vector<Complex> zeros;
  [[nodiscard]] Complex operator()(Complex z) const;
};

/// Every catalog entry followed by every suite. `only` keeps one radius family or suite id.
/// Throws UnknownId if `only` matches nothing.
[[nodiscard]] std::vector<VerificationReport> verify_all(const VerifyOptions& options = {}, std::string_view only = {});

}  // namespace flp
