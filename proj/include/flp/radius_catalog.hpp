#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flp/map_kernel.hpp"
#include "flp/oracle.hpp"
#include "flp/report.hpp"

namespace flp {

/// A decimal as quoted in print. `truncated` marks values quoted with a trailing
/// ellipsis, whose true value lies in [value, value + 10^-digits).
struct PrintedValue {
  double value;
  int digits;
  bool truncated;
};

inline constexpr double kPrintedTolerance = 5e-4;

/// |v - p| <= 5e-4, or p <= v < p + 10^-digits for truncated quotes.
[[nodiscard]] bool printed_matches(const PrintedValue& printed, double v) noexcept;

/// Where the image of |z| = r has to stay for r below the radius.
struct InclusionProbe {
  /// Sampled on |z| = r. Disc-type bounds use z/|z| to parametrize their boundary circle.
  ComplexMap image;
  Region region;
};

/// The extremal point: the value at z0 = radius lands on the boundary of the target region.
struct Witness {
  std::string description;
  /// Signed margin of the extremal value at z0 = radius; zero when sharp.
  std::function<double(double radius)> margin;
};

struct RadiusEntry {
  std::string id;
  std::string family;
  ParamList params;
  std::string formula;
  double closed_form = 0.0;
  /// Closed form is 1 because the condition stays negative on the whole disc.
  bool capped = false;
  /// Negative below the radius, zero at it, positive above it.
  RealFn condition;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  std::vector<PrintedValue> printed;
  std::optional<InclusionProbe> inclusion;
  std::optional<Witness> witness;
  std::string notes;
};

enum class FlpClass { Sp, Ss, Delta, CoshSqrt, Asinh, Cardioid, Booth, ExpAlpha, Janowski };

/// Radius of the class into F_LP; params.alpha for Booth and ExpAlpha, params.A/B for Janowski.
[[nodiscard]] RadiusEntry radius_into_flp(FlpClass cls, const TargetParams& params = {});
/// Largest r with Re LP > alpha on |z| < r.
[[nodiscard]] RadiusEntry caratheodory_order_radius(double alpha);
/// Largest r with |LP - 1| < alpha on |z| < r.
[[nodiscard]] RadiusEntry starlike_disc_radius(double alpha);
/// Corollary radii r1 .. r9; throws UnknownId for k outside 1..9.
[[nodiscard]] RadiusEntry corollary_radius(int k);
[[nodiscard]] RadiusEntry s_star_beta_radius(double beta);
[[nodiscard]] RadiusEntry frak_f_radius(double A);
[[nodiscard]] RadiusEntry m_beta_radius(double beta);
[[nodiscard]] RadiusEntry majorization_radius();
[[nodiscard]] RadiusEntry omega_radius();

/// (1 - r^2) LP(r) - r(1 + sigma).
[[nodiscard]] double majorization_phi(double r, double sigma);
/// sigma + r(1 - sigma^2) / ((1 - r^2) LP(r)).
[[nodiscard]] double majorization_psi(double r, double sigma);

/// The class map behind corollary radius k (exp, sine, cosh-sqrt, cardioid, asinh,
/// sigmoid, nephroid, lemniscate, rl).
[[nodiscard]] TargetId corollary_target_map(int k);
/// min over |z| = 1 of |phi - 1| for the class behind corollary radius k.
[[nodiscard]] double corollary_target_radius(int k);

/// Family ids accepted by make_radius_entry, in catalog order.
[[nodiscard]] std::vector<std::string> radius_ids();
/// Builds one entry by family id. Missing params take the family default;
/// unknown ids raise UnknownId, unknown parameter names ParamRange.
[[nodiscard]] RadiusEntry make_radius_entry(std::string_view id, const ParamList& params = {});
/// Every family on its parameter grid.
[[nodiscard]] std::vector<RadiusEntry> radius_catalog();

}  // namespace flp
