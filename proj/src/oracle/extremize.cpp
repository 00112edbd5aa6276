#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "flp/error.hpp"
#include "flp/oracle.hpp"

namespace flp {
namespace {

constexpr double kPi = std::numbers::pi;

double apply(Functional functional, Complex w) {
  switch (functional) {
    case Functional::RealPart: return w.real();
    case Functional::Modulus: return std::abs(w);
    case Functional::ArgShifted: {
      const Complex d = w - 2.0;
      if (d == Complex{0.0, 0.0}) throw Error(ErrorKind::ArgUndefined, "w = 2");
      return std::abs(std::arg(d));
    }
  }
  return w.real();
}

double normalize_angle(double theta) {
  while (theta <= -kPi) theta += 2.0 * kPi;
  while (theta > kPi) theta -= 2.0 * kPi;
  return theta;
}

struct Probe {
  const ComplexMap& map;
  double r;
  Functional functional;

  double operator()(double theta) const {
    const Complex w = map(std::polar(r, theta));
    const double v = apply(functional, w);
    if (!std::isfinite(v)) throw Error(ErrorKind::SingularOnCircle, "non-finite value");
    return v;
  }
};

// Brent polish of the cell around `theta`; keeps the grid value if the polish fails
// or does not improve on it.
void polish(const Probe& probe, double theta, double h, double sign, double& best_value, double& best_angle) {
  try {
    const auto [x, fx] = boost::math::tools::brent_find_minima(
        [&](double t) { return sign * probe(t); }, theta - h, theta + h, std::numeric_limits<double>::digits / 2);
    if (sign * fx < sign * best_value) {
      best_value = sign * fx;
      best_angle = normalize_angle(x);
    }
  } catch (const Error&) {
    // Singular inside the cell: the grid value stands.
  }
}

}  // namespace

CircleExtrema extremize_on_circle(const ComplexMap& map, double r, Functional functional, int grid) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "circle radius must lie in [0, 1]");
  if (grid < 8) throw Error(ErrorKind::DomainError, "grid needs at least 8 angles");
  const Probe probe{map, r, functional};
  const double h = 2.0 * kPi / grid;

  std::vector<double> values(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    const double theta = -kPi + h * (k + 1);
    try {
      values[static_cast<std::size_t>(k)] = probe(theta);
    } catch (const Error& e) {
      throw Error(ErrorKind::SingularOnCircle, "at angle " + std::to_string(theta) + ": " + e.what());
    }
  }
  int kmin = 0, kmax = 0;
  for (int k = 1; k < grid; ++k) {
    if (values[k] < values[kmin]) kmin = k;
    if (values[k] > values[kmax]) kmax = k;
  }
  CircleExtrema out{values[kmin], values[kmax], -kPi + h * (kmin + 1), -kPi + h * (kmax + 1)};
  if (r == 0.0) return out;
  polish(probe, out.argmin_angle, h, 1.0, out.min, out.argmin_angle);
  polish(probe, out.argmax_angle, h, -1.0, out.max, out.argmax_angle);
  return out;
}

}  // namespace flp
