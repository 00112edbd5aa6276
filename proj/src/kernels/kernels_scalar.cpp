#include "kernels_impl.hpp"

#include <cmath>

namespace flp::kernels::scalar {

void horner3(SoaView c, SoaView z, HornerOut out) {
  const std::size_t n_coeff = c.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double x = z.re[i];
    const double y = z.im[i];
    double p_re = 0.0, p_im = 0.0;
    double q_re = 0.0, q_im = 0.0;  // first derivative
    double s_re = 0.0, s_im = 0.0;  // half the second derivative
    for (std::size_t k = n_coeff; k-- > 0;) {
      double t_re = s_re * x - s_im * y;
      double t_im = s_re * y + s_im * x;
      s_re = t_re + q_re;
      s_im = t_im + q_im;
      t_re = q_re * x - q_im * y;
      t_im = q_re * y + q_im * x;
      q_re = t_re + p_re;
      q_im = t_im + p_im;
      t_re = p_re * x - p_im * y;
      t_im = p_re * y + p_im * x;
      p_re = t_re + c.re[k];
      p_im = t_im + c.im[k];
    }
    out.value.re[i] = p_re;
    out.value.im[i] = p_im;
    out.d1.re[i] = q_re;
    out.d1.im[i] = q_im;
    out.d2.re[i] = s_re + s_re;
    out.d2.im[i] = s_im + s_im;
  }
}

void starlike_terms(SoaView z, SoaView f, SoaView d1, SoaView d2, SoaSpan u, SoaSpan v) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double x = z.re[i];
    const double y = z.im[i];
    // z f'
    const double a_re = x * d1.re[i] - y * d1.im[i];
    const double a_im = x * d1.im[i] + y * d1.re[i];
    const double fd = f.re[i] * f.re[i] + f.im[i] * f.im[i];
    u.re[i] = (a_re * f.re[i] + a_im * f.im[i]) / fd;
    u.im[i] = (a_im * f.re[i] - a_re * f.im[i]) / fd;
    // z f''
    const double b_re = x * d2.re[i] - y * d2.im[i];
    const double b_im = x * d2.im[i] + y * d2.re[i];
    const double gd = d1.re[i] * d1.re[i] + d1.im[i] * d1.im[i];
    v.re[i] = 1.0 + (b_re * d1.re[i] + b_im * d1.im[i]) / gd;
    v.im[i] = (b_im * d1.re[i] - b_re * d1.im[i]) / gd;
  }
}

void omega_margin(SoaView w, std::span<double> out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = (3.0 - 2.0 * w.re[i]) - w.im[i] * w.im[i];
  }
}

void distance_to(SoaView w, double c_re, double c_im, std::span<double> out) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double dx = w.re[i] - c_re;
    const double dy = w.im[i] - c_im;
    out[i] = std::sqrt(dx * dx + dy * dy);
  }
}

}  // namespace flp::kernels::scalar
