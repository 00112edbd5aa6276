// Compiled with -mavx2 only; no -mfma, so every multiply and add rounds exactly as
// in the scalar reference.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace flp::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 4;

// (a + ib)(x + iy), same operation order as the scalar kernels.
inline void cmul(__m256d a, __m256d b, __m256d x, __m256d y, __m256d& re, __m256d& im) {
  re = _mm256_sub_pd(_mm256_mul_pd(a, x), _mm256_mul_pd(b, y));
  im = _mm256_add_pd(_mm256_mul_pd(a, y), _mm256_mul_pd(b, x));
}

SoaView tail(SoaView v, std::size_t from) {
  return {v.re.subspan(from), v.im.subspan(from)};
}

SoaSpan tail(SoaSpan v, std::size_t from) {
  return {v.re.subspan(from), v.im.subspan(from)};
}

}  // namespace

void horner3(SoaView c, SoaView z, HornerOut out) {
  const std::size_t n = z.size();
  const std::size_t n_coeff = c.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(z.re.data() + i);
    const __m256d y = _mm256_loadu_pd(z.im.data() + i);
    __m256d p_re = _mm256_setzero_pd(), p_im = _mm256_setzero_pd();
    __m256d q_re = _mm256_setzero_pd(), q_im = _mm256_setzero_pd();
    __m256d s_re = _mm256_setzero_pd(), s_im = _mm256_setzero_pd();
    for (std::size_t k = n_coeff; k-- > 0;) {
      __m256d t_re, t_im;
      // s_re * x - s_im * y, s_re * y + s_im * x
      t_re = _mm256_sub_pd(_mm256_mul_pd(s_re, x), _mm256_mul_pd(s_im, y));
      t_im = _mm256_add_pd(_mm256_mul_pd(s_re, y), _mm256_mul_pd(s_im, x));
      s_re = _mm256_add_pd(t_re, q_re);
      s_im = _mm256_add_pd(t_im, q_im);
      t_re = _mm256_sub_pd(_mm256_mul_pd(q_re, x), _mm256_mul_pd(q_im, y));
      t_im = _mm256_add_pd(_mm256_mul_pd(q_re, y), _mm256_mul_pd(q_im, x));
      q_re = _mm256_add_pd(t_re, p_re);
      q_im = _mm256_add_pd(t_im, p_im);
      t_re = _mm256_sub_pd(_mm256_mul_pd(p_re, x), _mm256_mul_pd(p_im, y));
      t_im = _mm256_add_pd(_mm256_mul_pd(p_re, y), _mm256_mul_pd(p_im, x));
      p_re = _mm256_add_pd(t_re, _mm256_set1_pd(c.re[k]));
      p_im = _mm256_add_pd(t_im, _mm256_set1_pd(c.im[k]));
    }
    _mm256_storeu_pd(out.value.re.data() + i, p_re);
    _mm256_storeu_pd(out.value.im.data() + i, p_im);
    _mm256_storeu_pd(out.d1.re.data() + i, q_re);
    _mm256_storeu_pd(out.d1.im.data() + i, q_im);
    _mm256_storeu_pd(out.d2.re.data() + i, _mm256_add_pd(s_re, s_re));
    _mm256_storeu_pd(out.d2.im.data() + i, _mm256_add_pd(s_im, s_im));
  }
  if (i < n) {
    scalar::horner3(c, tail(z, i),
                    HornerOut{tail(out.value, i), tail(out.d1, i), tail(out.d2, i)});
  }
}

void starlike_terms(SoaView z, SoaView f, SoaView d1, SoaView d2, SoaSpan u, SoaSpan v) {
  const std::size_t n = z.size();
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(z.re.data() + i);
    const __m256d y = _mm256_loadu_pd(z.im.data() + i);
    const __m256d f_re = _mm256_loadu_pd(f.re.data() + i);
    const __m256d f_im = _mm256_loadu_pd(f.im.data() + i);
    const __m256d g_re = _mm256_loadu_pd(d1.re.data() + i);
    const __m256d g_im = _mm256_loadu_pd(d1.im.data() + i);
    const __m256d h_re = _mm256_loadu_pd(d2.re.data() + i);
    const __m256d h_im = _mm256_loadu_pd(d2.im.data() + i);

    const __m256d a_re = _mm256_sub_pd(_mm256_mul_pd(x, g_re), _mm256_mul_pd(y, g_im));
    const __m256d a_im = _mm256_add_pd(_mm256_mul_pd(x, g_im), _mm256_mul_pd(y, g_re));
    const __m256d fd = _mm256_add_pd(_mm256_mul_pd(f_re, f_re), _mm256_mul_pd(f_im, f_im));
    const __m256d u_re = _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(a_re, f_re), _mm256_mul_pd(a_im, f_im)), fd);
    const __m256d u_im = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(a_im, f_re), _mm256_mul_pd(a_re, f_im)), fd);

    const __m256d b_re = _mm256_sub_pd(_mm256_mul_pd(x, h_re), _mm256_mul_pd(y, h_im));
    const __m256d b_im = _mm256_add_pd(_mm256_mul_pd(x, h_im), _mm256_mul_pd(y, h_re));
    const __m256d gd = _mm256_add_pd(_mm256_mul_pd(g_re, g_re), _mm256_mul_pd(g_im, g_im));
    const __m256d v_re = _mm256_add_pd(
        one, _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(b_re, g_re), _mm256_mul_pd(b_im, g_im)), gd));
    const __m256d v_im = _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(b_im, g_re), _mm256_mul_pd(b_re, g_im)), gd);

    _mm256_storeu_pd(u.re.data() + i, u_re);
    _mm256_storeu_pd(u.im.data() + i, u_im);
    _mm256_storeu_pd(v.re.data() + i, v_re);
    _mm256_storeu_pd(v.im.data() + i, v_im);
  }
  if (i < n) {
    scalar::starlike_terms(tail(z, i), tail(f, i), tail(d1, i), tail(d2, i), tail(u, i), tail(v, i));
  }
}

void omega_margin(SoaView w, std::span<double> out) {
  const std::size_t n = w.size();
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d x = _mm256_loadu_pd(w.re.data() + i);
    const __m256d y = _mm256_loadu_pd(w.im.data() + i);
    const __m256d m = _mm256_sub_pd(_mm256_sub_pd(three, _mm256_mul_pd(two, x)), _mm256_mul_pd(y, y));
    _mm256_storeu_pd(out.data() + i, m);
  }
  if (i < n) scalar::omega_margin(tail(w, i), out.subspan(i));
}

void distance_to(SoaView w, double c_re, double c_im, std::span<double> out) {
  const std::size_t n = w.size();
  const __m256d cr = _mm256_set1_pd(c_re);
  const __m256d ci = _mm256_set1_pd(c_im);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(w.re.data() + i), cr);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(w.im.data() + i), ci);
    const __m256d d = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
    _mm256_storeu_pd(out.data() + i, d);
  }
  if (i < n) scalar::distance_to(tail(w, i), c_re, c_im, out.subspan(i));
}

}  // namespace flp::kernels::avx2
