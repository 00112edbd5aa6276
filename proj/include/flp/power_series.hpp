#pragma once

#include <cstddef>
#include <vector>

#include "flp/map_kernel.hpp"

namespace flp {

/// Truncated power series sum_{n=0}^{N} c_n z^n with complex coefficients.
///
/// Binary operations truncate to the smaller of the two degrees, so callers that
/// need N exact coefficients of a product should request both operands at degree N.
class PowerSeries {
 public:
  /// Zero series of the given degree.
  explicit PowerSeries(std::size_t degree = 0);
  /// Throws DomainError on an empty coefficient list.
  explicit PowerSeries(std::vector<Complex> coeffs);

  [[nodiscard]] static PowerSeries monomial(std::size_t power, std::size_t degree, Complex c = 1.0);

  [[nodiscard]] std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] Complex operator[](std::size_t n) const { return coeffs_.at(n); }
  Complex& operator[](std::size_t n) { return coeffs_.at(n); }

  [[nodiscard]] PowerSeries truncated(std::size_t degree) const;
  [[nodiscard]] PowerSeries derivative() const;
  /// Series of z * s'(z), the Euler operator; keeps the degree.
  [[nodiscard]] PowerSeries euler() const;

  [[nodiscard]] Complex evaluate(Complex z) const noexcept;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex k);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, Complex k) { return a *= k; }
  friend PowerSeries operator*(Complex k, PowerSeries a) { return a *= k; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  /// a / b to min degree; b[0] must be nonzero (DomainError otherwise).
  [[nodiscard]] friend PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

 private:
  std::vector<Complex> coeffs_;
};

/// P_0 coefficients: c_0 = 0, c_n = -(8/pi^2)(1/n) sum_{k<n} 1/(2k+1).
[[nodiscard]] PowerSeries p0_coefficients(std::size_t n_max);

/// 1 + P_0 as a series.
[[nodiscard]] PowerSeries lp_series(std::size_t n_max);

/// exp(s) via n e_n = sum_{k=1}^n k s_k e_{n-k}; throws NonzeroConstantTerm if s_0 != 0.
[[nodiscard]] PowerSeries series_exp(const PowerSeries& s);

/// log(p) for p_0 = 1, as the antiderivative of p'/p. Throws NonzeroConstantTerm otherwise.
[[nodiscard]] PowerSeries series_log(const PowerSeries& p);

/// Termwise int_0^z s(t)/t dt. Throws NonzeroConstantTerm if s_0 != 0.
[[nodiscard]] PowerSeries integrate_over_t(const PowerSeries& s);

/// s(-z).
[[nodiscard]] PowerSeries reflect(const PowerSeries& s);

/// f0(z) = z exp(int_0^z P0(t)/t dt), coefficients of z^0 .. z^{n_max}.
[[nodiscard]] PowerSeries extremal_f0(std::size_t n_max);

/// g0(z) = z exp(int_0^z P0(-t)/t dt), coefficients of z^0 .. z^{n_max}.
[[nodiscard]] PowerSeries extremal_g0(std::size_t n_max);

inline constexpr std::size_t kDefaultSeriesDegree = 64;

/// Ratio-test estimate of the truncation error sum_{n>N} |c_n| r^n, using the
/// largest coefficient ratio over the last quarter of the series. Returns +inf when
/// the estimated ratio times r reaches 1.
[[nodiscard]] double ratio_tail_bound(const PowerSeries& s, double r);

}  // namespace flp
