#pragma once

#include <optional>
#include <vector>

#include "flp/map_kernel.hpp"

namespace flp {

/// Signed margin m(w) = 3 - 2 Re w - (Im w)^2; positive exactly on the open region.
[[nodiscard]] inline double omega_margin(Complex w) noexcept {
  return 3.0 - 2.0 * w.real() - w.imag() * w.imag();
}

/// Same region via the focus/directrix form |1 - w| < 2 - Re w; returns 2 - Re w - |1 - w|.
[[nodiscard]] double support_margin(Complex w) noexcept;

[[nodiscard]] inline bool in_omega_lp(Complex w) noexcept { return omega_margin(w) > 0.0; }

struct ReBounds {
  double min;  // Re P0 on |z| = r is smallest at z = r
  double max;  // and largest at z = -r
};

/// Extremes of Re P0 over |z| = r, 0 <= r < 1.
[[nodiscard]] ReBounds re_p0_bounds(double r);

/// G(r, c) from the proof of the real-part bounds, c = cos(alpha/2) in [-1, 1].
[[nodiscard]] double re_p0_profile(double r, double c);

struct InscribedDisc {
  double center;
  double radius;
  // Only defined for center <= 1/2, where the nearest boundary point is off-axis.
  std::optional<double> zeta;
  std::optional<double> eta;
};

/// Largest disc centred at (a, 0) inside Omega_LP. Throws CenterOutsideRange for a >= 3/2.
[[nodiscard]] InscribedDisc inscribed_disc(double a);

/// The two branches of the radius formula, exposed separately so both can be
/// checked where they meet at a = 1/2.
[[nodiscard]] double inscribed_radius_offaxis(double a);
[[nodiscard]] double inscribed_radius_vertex(double a);

/// Squared distance D_a(X) from (a, 0) to the boundary point labelled by X = cos t in (0, 1).
[[nodiscard]] double boundary_distance_profile(double a, double X);

/// Positive critical abscissae X' of D_a on (0, 1).
[[nodiscard]] std::vector<double> critical_abscissae(double a);

/// |arg(w - 2)| > 3 pi / 4 (principal argument); throws ArgUndefined at w = 2.
[[nodiscard]] bool argument_sector_check(Complex w);

}  // namespace flp
