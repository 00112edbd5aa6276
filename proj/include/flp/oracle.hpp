#pragma once

// Independent numerical machinery used to re-derive every closed-form result:
// circle extremizers, root bracketing, growth-bound quadrature, image containment,
// and the differential-inequality certifier.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "flp/map_kernel.hpp"
#include "flp/power_series.hpp"
#include "flp/report.hpp"

namespace flp {

using RealFn = std::function<double(double)>;
using ComplexMap = std::function<Complex(Complex)>;

// ---------------------------------------------------------------------------
// Root finding

struct BracketSolverConfig {
  double abs_tol = 1e-12;
  int max_iter = 200;
};

/// Bisection on [lo, hi]. Requires f(lo) f(hi) < 0 (NoSignChange otherwise);
/// MaxIterExceeded if the bracket is still wider than abs_tol after max_iter halvings.
[[nodiscard]] double bracket_root(const RealFn& f, double lo, double hi, BracketSolverConfig cfg = {});

/// Second, unrelated solver (TOMS 748) used to memoize roots that have no closed form.
[[nodiscard]] double refine_root(const RealFn& f, double lo, double hi, double abs_tol = 1e-12);

/// Scans [lo, hi] on `cells` equal cells and returns the first sign-change bracket.
/// Throws NoSignChange when none is found.
[[nodiscard]] std::pair<double, double> scan_bracket(const RealFn& f, double lo, double hi, int cells);

// ---------------------------------------------------------------------------
// Extremization on circles

enum class Functional { RealPart, Modulus, ArgShifted };

struct CircleExtrema {
  double min;
  double max;
  double argmin_angle;  // in (-pi, pi]
  double argmax_angle;
};

inline constexpr int kCircleGrid = 4096;

/// Scans |z| = r on a uniform grid of `grid` angles covering (-pi, pi] (0 and pi
/// included), then polishes the best cell with Brent's method. ArgShifted is
/// |arg(w - 2)|. Any evaluation failure is rethrown as SingularOnCircle.
[[nodiscard]] CircleExtrema extremize_on_circle(const ComplexMap& map, double r, Functional functional,
                                                int grid = kCircleGrid);

// ---------------------------------------------------------------------------
// Growth and covering

/// int_0^r P0(sign * t)/t dt for sign = +1 or -1, 0 <= r <= 1 (r = 1 only for sign = -1).
/// The piece on [0, min(r, 0.1)] is integrated termwise from the P0 series; the rest
/// by adaptive Gauss-Kronrod. Throws QuadratureFailure if the error estimate
/// exceeds 1e-10 relative.
[[nodiscard]] double log_growth_integral(double r, int sign);

struct GrowthBounds {
  double lower;  // r exp(int_0^r P0(t)/t dt)  = f0(r)
  double upper;  // r exp(int_0^r P0(-t)/t dt) = g0(r)
};

[[nodiscard]] GrowthBounds growth_bounds(double r);

/// f(z) for the normalized f with z f'/f = p, via f(z) = z exp(int_0^1 (p(sz) - 1)/s ds).
/// `p_minus_one` must return p - 1 directly so small values keep their relative accuracy.
[[nodiscard]] Complex starlike_from_p(const ComplexMap& p_minus_one, Complex z);

struct CoveringResult {
  double value;
  int last_k;                   // evaluated at r = 1 - 2^-k, k = first_k .. last_k
  std::vector<double> sequence;
  std::string note;
};

/// lim_{r -> 1-} -f0(-r), iterating r = 1 - 2^-k until successive values differ by < 1e-8.
[[nodiscard]] CoveringResult covering_constant(int first_k = 4, int max_k = 40);

// ---------------------------------------------------------------------------
// Containment and certification

/// A region given by its signed margin (positive inside).
struct Region {
  std::string name;
  std::function<double(Complex)> margin;
};

[[nodiscard]] Region omega_lp_region();
[[nodiscard]] Region half_plane_region(double re_greater_than);
[[nodiscard]] Region disc_region(Complex center, double radius);

struct SamplingOptions {
  int samples = 4096;
  int threads = 1;
};

/// Samples phi on |z| = r and reports the worst region margin. Failing at any
/// sample is conclusive; passing means "verified at N samples".
[[nodiscard]] VerificationReport check_subordination_inclusion(const ComplexMap& phi, double r,
                                                               const Region& region,
                                                               SamplingOptions options = {},
                                                               std::string id = "inclusion");

/// A test function given either by its Taylor coefficients or by a named target map.
struct NamedMap {
  TargetId id;
  TargetParams params;
};

struct AnalyticSample {
  std::variant<PowerSeries, NamedMap> source;
  double disc_radius = 1.0;

  [[nodiscard]] Complex evaluate(Complex z) const;
};

struct CertifyOptions {
  std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999};
  int angles = 1024;
  int threads = 1;
};

/// Checks |t(1 + z f''/f') + (1 - t) z f'/f - 1| < (3 + 2t)/6 on concentric circles;
/// on a pass it also checks that z f'/f stays in |w - 1| < 1/2 and in Omega_LP.
/// f must be a power series with f(0) = 0, f'(0) = 1.
[[nodiscard]] VerificationReport certify_sufficient_condition(const AnalyticSample& f, double t,
                                                              CertifyOptions options = {});

/// min Re p on |z| = r compared against alpha.
[[nodiscard]] VerificationReport caratheodory_order_check(const AnalyticSample& p, double alpha, double r);

struct DiscBound {
  double center;
  double radius;
};

/// Disc containing p(|z| = r) for p in P_n[A, B].
[[nodiscard]] DiscBound janowski_disc_bound(double A, double B, double r, int n = 1);
/// Order-alpha specialization (A = 1 - 2 alpha, B = -1).
[[nodiscard]] DiscBound order_alpha_disc_bound(double alpha, double r, int n = 1);

}  // namespace flp
