#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "flp/error.hpp"
#include "flp/oracle.hpp"

namespace flp {

double bracket_root(const RealFn& f, double lo, double hi, BracketSolverConfig cfg) {
  if (!(cfg.abs_tol > 0.0) || cfg.max_iter < 1) throw Error(ErrorKind::DomainError, "invalid solver config");
  if (lo > hi) std::swap(lo, hi);
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (!(f_lo * f_hi < 0.0)) {
    throw Error(ErrorKind::NoSignChange, "f(" + std::to_string(lo) + ") and f(" + std::to_string(hi) +
                                             ") share a sign");
  }
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= cfg.abs_tol) return lo + 0.5 * (hi - lo);
  }
  throw Error(ErrorKind::MaxIterExceeded, "bracket still " + std::to_string(hi - lo) + " wide");
}

double refine_root(const RealFn& f, double lo, double hi, double abs_tol) {
  std::uintmax_t max_iter = 500;
  try {
    const auto [a, b] = boost::math::tools::toms748_solve(
        f, lo, hi, [abs_tol](double x, double y) { return std::abs(y - x) <= abs_tol; }, max_iter);
    if (max_iter >= 500) throw Error(ErrorKind::MaxIterExceeded, "toms748 did not converge");
    return a + 0.5 * (b - a);
  } catch (const boost::math::evaluation_error& e) {
    throw Error(ErrorKind::NoSignChange, e.what());
  } catch (const std::domain_error& e) {
    throw Error(ErrorKind::NoSignChange, e.what());
  }
}

std::pair<double, double> scan_bracket(const RealFn& f, double lo, double hi, int cells) {
  if (cells < 1) throw Error(ErrorKind::DomainError, "scan needs at least one cell");
  const double h = (hi - lo) / cells;
  double x_prev = lo;
  double f_prev = f(lo);
  for (int k = 1; k <= cells; ++k) {
    const double x = (k == cells) ? hi : lo + k * h;
    const double fx = f(x);
    if (f_prev == 0.0) return {x_prev, x_prev};
    if (f_prev * fx <= 0.0) return {x_prev, x};
    x_prev = x;
    f_prev = fx;
  }
  throw Error(ErrorKind::NoSignChange, "no sign change on the scanned interval");
}

}  // namespace flp
