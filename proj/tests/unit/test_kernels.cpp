#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "flp/kernels.hpp"

using namespace flp;
using namespace flp::kernels;

namespace {

struct Soa {
  std::vector<double> re, im;
  explicit Soa(std::size_t n) : re(n), im(n) {}
  SoaView view() const { return {re, im}; }
  SoaSpan span() { return {re, im}; }
};

Soa random_soa(std::size_t n, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Soa s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.re[i] = u(rng);
    s.im[i] = u(rng);
  }
  return s;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree bit for bit") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  const KernelTable& s = scalar_table();
  const KernelTable& v = avx2_table();
  std::mt19937_64 rng(11);
  // Odd sizes exercise the scalar tail of the vector loop.
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 1031u}) {
    const Soa pts = random_soa(n, rng, 0.9);
    const Soa coeffs = random_soa(9, rng, 1.0);

    Soa a0(n), a1(n), a2(n), b0(n), b1(n), b2(n);
    s.horner3(coeffs.view(), pts.view(), {a0.span(), a1.span(), a2.span()});
    v.horner3(coeffs.view(), pts.view(), {b0.span(), b1.span(), b2.span()});
    CHECK(same_bits(a0.re, b0.re));
    CHECK(same_bits(a0.im, b0.im));
    CHECK(same_bits(a1.re, b1.re));
    CHECK(same_bits(a2.im, b2.im));

    Soa u1(n), w1(n), u2(n), w2(n);
    s.starlike_terms(pts.view(), a0.view(), a1.view(), a2.view(), u1.span(), w1.span());
    v.starlike_terms(pts.view(), a0.view(), a1.view(), a2.view(), u2.span(), w2.span());
    CHECK(same_bits(u1.re, u2.re));
    CHECK(same_bits(u1.im, u2.im));
    CHECK(same_bits(w1.re, w2.re));
    CHECK(same_bits(w1.im, w2.im));

    const Soa w = random_soa(n, rng, 3.0);
    std::vector<double> m1(n), m2(n), d1(n), d2(n);
    s.omega_margin(w.view(), m1);
    v.omega_margin(w.view(), m2);
    CHECK(same_bits(m1, m2));
    s.distance_to(w.view(), 0.25, -0.5, d1);
    v.distance_to(w.view(), 0.25, -0.5, d2);
    CHECK(same_bits(d1, d2));
  }
}

TEST_CASE("scalar horner matches direct evaluation") {
  std::vector<double> cre{0.0, 1.0, 0.5}, cim{0.0, 0.0, 0.0};
  std::vector<double> pre{0.5}, pim{0.0};
  Soa v(1), d1(1), d2(1);
  scalar_table().horner3({cre, cim}, {pre, pim}, {v.span(), d1.span(), d2.span()});
  CHECK(v.re[0] == doctest::Approx(0.625));
  CHECK(d1.re[0] == doctest::Approx(1.5));
  CHECK(d2.re[0] == doctest::Approx(1.0));
}

TEST_CASE("active table reports its ISA") {
  const KernelTable& t = active();
  CHECK((&t == &scalar_table() || (avx2_available() && &t == &avx2_table())));
}
