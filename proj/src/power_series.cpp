#include "flp/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "flp/error.hpp"

namespace flp {

PowerSeries::PowerSeries(std::size_t degree) : coeffs_(degree + 1, Complex{0.0, 0.0}) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::DomainError, "power series needs at least one coefficient");
}

PowerSeries PowerSeries::monomial(std::size_t power, std::size_t degree, Complex c) {
  PowerSeries s(degree);
  if (power <= degree) s.coeffs_[power] = c;
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t degree) const {
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(degree, this->degree()) + 1));
  c.resize(degree + 1, Complex{0.0, 0.0});
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::derivative() const {
  if (degree() == 0) return PowerSeries(0);
  std::vector<Complex> c(degree());
  for (std::size_t n = 1; n <= degree(); ++n) c[n - 1] = static_cast<double>(n) * coeffs_[n];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::euler() const {
  PowerSeries out(degree());
  for (std::size_t n = 1; n <= degree(); ++n) out.coeffs_[n] = static_cast<double>(n) * coeffs_[n];
  return out;
}

Complex PowerSeries::evaluate(Complex z) const noexcept {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(degree(), rhs.degree()) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(degree(), rhs.degree()) + 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.degree(), b.degree());
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k <= i; ++k) acc += a.coeffs_[k] * b.coeffs_[i - k];
    out.coeffs_[i] = acc;
  }
  return out;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  if (b.coeffs_[0] == Complex{0.0, 0.0}) throw Error(ErrorKind::DomainError, "series division by b with b(0) = 0");
  const std::size_t n = std::min(a.degree(), b.degree());
  PowerSeries q(n);
  for (std::size_t i = 0; i <= n; ++i) {
    Complex acc = a.coeffs_[i];
    for (std::size_t k = 1; k <= i; ++k) acc -= b.coeffs_[k] * q.coeffs_[i - k];
    q.coeffs_[i] = acc / b.coeffs_[0];
  }
  return q;
}

PowerSeries p0_coefficients(std::size_t n_max) {
  if (n_max < 1) throw Error(ErrorKind::DomainError, "p0_coefficients needs n_max >= 1");
  constexpr double scale = -8.0 / (std::numbers::pi * std::numbers::pi);
  PowerSeries s(n_max);
  double odd_harmonic = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    odd_harmonic += 1.0 / static_cast<double>(2 * n - 1);
    s[n] = scale * odd_harmonic / static_cast<double>(n);
  }
  return s;
}

PowerSeries lp_series(std::size_t n_max) {
  PowerSeries s = p0_coefficients(n_max);
  s[0] = 1.0;
  return s;
}

PowerSeries series_exp(const PowerSeries& s) {
  if (s[0] != Complex{0.0, 0.0}) throw Error(ErrorKind::NonzeroConstantTerm, "series_exp needs s(0) = 0");
  const std::size_t n_max = s.degree();
  PowerSeries e(n_max);
  e[0] = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 1; k <= n; ++k) acc += static_cast<double>(k) * s[k] * e[n - k];
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

PowerSeries series_log(const PowerSeries& p) {
  if (p[0] != Complex{1.0, 0.0}) throw Error(ErrorKind::NonzeroConstantTerm, "series_log needs p(0) = 1");
  return integrate_over_t(divide(p.euler(), p));
}

PowerSeries integrate_over_t(const PowerSeries& s) {
  if (s[0] != Complex{0.0, 0.0}) throw Error(ErrorKind::NonzeroConstantTerm, "s(t)/t is singular at 0");
  PowerSeries out(s.degree());
  for (std::size_t n = 1; n <= s.degree(); ++n) out[n] = s[n] / static_cast<double>(n);
  return out;
}

PowerSeries reflect(const PowerSeries& s) {
  PowerSeries out = s;
  for (std::size_t n = 1; n <= s.degree(); n += 2) out[n] = -out[n];
  return out;
}

namespace {

// z * exp(int_0^z q(t)/t dt) where q is P0 or its reflection.
PowerSeries extremal_from(const PowerSeries& q) {
  const PowerSeries e = series_exp(integrate_over_t(q));
  PowerSeries f(q.degree() + 1);
  for (std::size_t n = 0; n <= q.degree(); ++n) f[n + 1] = e[n];
  return f;
}

}  // namespace

PowerSeries extremal_f0(std::size_t n_max) {
  if (n_max < 1) throw Error(ErrorKind::DomainError, "extremal_f0 needs n_max >= 1");
  if (n_max == 1) return PowerSeries::monomial(1, 1);
  return extremal_from(p0_coefficients(n_max - 1));
}

PowerSeries extremal_g0(std::size_t n_max) {
  if (n_max < 1) throw Error(ErrorKind::DomainError, "extremal_g0 needs n_max >= 1");
  if (n_max == 1) return PowerSeries::monomial(1, 1);
  return extremal_from(reflect(p0_coefficients(n_max - 1)));
}

double ratio_tail_bound(const PowerSeries& s, double r) {
  const std::size_t n = s.degree();
  if (n < 4) return std::numeric_limits<double>::infinity();
  double q = 0.0;
  for (std::size_t k = n - n / 4; k < n; ++k) {
    const double lo = std::abs(s[k]);
    const double hi = std::abs(s[k + 1]);
    if (lo == 0.0) {
      if (hi != 0.0) return std::numeric_limits<double>::infinity();
      continue;
    }
    q = std::max(q, hi / lo);
  }
  const double qr = q * r;
  if (qr >= 1.0) return std::numeric_limits<double>::infinity();
  return std::abs(s[n]) * std::pow(r, static_cast<double>(n)) * qr / (1.0 - qr);
}

}  // namespace flp
