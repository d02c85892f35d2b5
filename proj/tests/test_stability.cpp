#include "helpers.hpp"
#include "oracles.hpp"

#include "mukai/stability.hpp"

#include <doctest.h>

#include <cmath>

using namespace mukai;
using testing::error_of;
using testing::q;

namespace {

// -1, 0, 1 comparing phases in (0, 2] of two nonzero charges at the same point.
int phase_compare(const oracle::Charge& z, const oracle::Charge& w) {
  auto half = [](const oracle::Charge& c) { return (c.im_t > 0 || (c.im_t == 0 && c.re < 0)) ? 0 : 1; };
  int hz = half(z), hw = half(w);
  if (hz != hw) return hz < hw ? -1 : 1;
  oracle::Q cross = z.re * w.im_t - z.im_t * w.re;
  return cross > 0 ? -1 : (cross < 0 ? 1 : 0);
}

} // namespace

TEST_CASE("stability parameter validation") {
  CHECK(error_of([] { StabilityParam::from_t(0, 0); }) == ErrorCode::NonPositive);
  CHECK(error_of([] { StabilityParam::from_t2(0, q(-1)); }) == ErrorCode::NonPositive);
  auto p = StabilityParam::from_t(1, q(3, 2));
  CHECK(p.t2 == q(9, 4));
}

TEST_CASE("central charge examples") {
  auto A = Surface::abelian(2);
  auto z = central_charge({1, 1, 0}, StabilityParam::from_t(0, 1), A);
  CHECK(z.re == 1);
  CHECK(z.im_over_t == 2);
  z = central_charge({0, 0, 1}, StabilityParam::from_t2(q(5, 3), q(7)), A);
  CHECK(z.re == -1);
  CHECK(z.im_over_t == 0);
  z = central_charge({1, 0, 0}, StabilityParam::from_t2(0, 1), A);
  CHECK(z.re == 1);
  CHECK(z.im_over_t == 0);
}

TEST_CASE("central charge matches the exponential pairing") {
  oracle::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    long h2 = rng.even_h2();
    auto S = Surface::abelian(h2);
    auto v = rng.vec(20, 7);
    Rational s = rng.rational(10, 5), t2 = rng.positive(10, 5);
    auto z = central_charge(oracle::to(v), StabilityParam::from_t2(s, t2), S);
    auto o = oracle::charge(v, s, t2, h2);
    CHECK(z.re == o.re);
    CHECK(z.im_over_t == o.im_t);
  }
}

TEST_CASE("reduced sigma examples") {
  auto A = Surface::abelian(2);
  CHECK(reduced_sigma({1, -1, 1}, {1, 0, -2}, StabilityParam::from_t2(q(-3, 2), q(1, 4)), A) == 0);
  CHECK(reduced_sigma({1, 0, -2}, {1, 0, -2}, StabilityParam::from_t2(q(1, 3), q(2)), A) == 0);
  CHECK(reduced_sigma({1, -1, 1}, {1, 0, -2}, StabilityParam::from_t2(q(-3, 2), 1), A) == q(3, 4));
  auto c = sigma_coefficients({1, -1, 1}, {1, 0, -2}, A);
  CHECK(c.A == 1);
  CHECK(c.C == 3);
  CHECK(c.D == 2);
}

TEST_CASE("closed form, antisymmetry and linearity of rho") {
  oracle::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    long h2 = rng.even_h2();
    auto S = Surface::k3(h2);
    auto v1 = rng.vec(15, 6), v = rng.vec(15, 6), w = rng.vec(15, 6);
    Rational s = rng.rational(10, 6), t2 = rng.positive(10, 6), k = rng.rational(5, 4);
    auto p = StabilityParam::from_t2(s, t2);
    Rational det = oracle::rho(v1, v, s, t2, h2);
    CHECK(reduced_sigma(oracle::to(v1), oracle::to(v), p, S) == det);
    CHECK(sigma_coefficients(oracle::to(v1), oracle::to(v), S).evaluate(s, t2) == det);
    CHECK(reduced_sigma(oracle::to(v), oracle::to(v1), p, S) == -det);
    MukaiVector mix = k * oracle::to(v1) + oracle::to(w);
    CHECK(reduced_sigma(mix, oracle::to(v), p, S) ==
          k * det + reduced_sigma(oracle::to(w), oracle::to(v), p, S));
  }
}

TEST_CASE("phase key examples") {
  auto A = Surface::abelian(2);
  auto p = StabilityParam::from_t(0, 1);
  auto k1 = phase_key({0, 0, 1}, p, A);
  CHECK(k1.boundary);
  CHECK(k1.revolution == 0);
  auto k2 = phase_key({0, 0, -1}, p, A);
  CHECK(k2.boundary);
  CHECK(k2.revolution == 1);
  CHECK(k1 < k2);
  auto k3 = phase_key({1, 1, 0}, p, A);
  CHECK(k3.revolution == 0);
  CHECK(!k3.boundary);
  CHECK(k3.slope == q(-1, 2));
  CHECK(k3 < k1);
  CHECK(k3.approx(1) == doctest::Approx(std::atan2(2.0, 1.0) / M_PI));
  CHECK(error_of([&] { phase_key({1, 0, 1}, StabilityParam::from_t2(0, 1), A); }) == ErrorCode::ZeroCharge);
}

TEST_CASE("domain check examples") {
  auto A = Surface::abelian(2);
  auto p = StabilityParam::from_t(0, 1);
  CHECK(z_domain_check({0, 0, 1}, p, A) == ZDomain::NegativeReal);
  CHECK(z_domain_check({0, 0, -1}, p, A) == ZDomain::Outside);
  CHECK(z_domain_check({1, 1, 0}, p, A) == ZDomain::UpperHalf);
  CHECK(z_domain_check({1, 0, 1}, StabilityParam::from_t2(0, 1), A) == ZDomain::Zero);
}

TEST_CASE("phase keys order phases like the quadrant oracle") {
  oracle::Rng rng(23);
  int compared = 0;
  for (int i = 0; i < 1000; ++i) {
    long h2 = rng.even_h2();
    auto S = Surface::abelian(h2);
    auto v = rng.ivec(6), w = rng.ivec(6);
    Rational s = rng.rational(6, 4), t2 = rng.positive(6, 4);
    auto zv = oracle::charge(v, s, t2, h2), zw = oracle::charge(w, s, t2, h2);
    if ((zv.re == 0 && zv.im_t == 0) || (zw.re == 0 && zw.im_t == 0)) continue;
    auto p = StabilityParam::from_t2(s, t2);
    auto kv = phase_key(oracle::to(v), p, S), kw = phase_key(oracle::to(w), p, S);
    int expect = phase_compare(zv, zw);
    CHECK((kv < kw) == (expect < 0));
    CHECK((kv == kw) == (expect == 0));
    ++compared;
  }
  CHECK(compared > 900);
}

TEST_CASE("rho sign agrees with phase order inside the heart half-plane") {
  oracle::Rng rng(24);
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 1000; ++i) {
    long h2 = rng.even_h2();
    auto S = Surface::abelian(h2);
    auto v = rng.ivec(6), w = rng.ivec(6);
    Rational s = rng.rational(6, 4), t2 = rng.positive(6, 4);
    auto p = StabilityParam::from_t2(s, t2);
    auto dv = z_domain_check(oracle::to(v), p, S), dw = z_domain_check(oracle::to(w), p, S);
    bool in_v = dv == ZDomain::UpperHalf || dv == ZDomain::NegativeReal;
    bool in_w = dw == ZDomain::UpperHalf || dw == ZDomain::NegativeReal;
    if (!in_v || !in_w) continue;
    Rational r = reduced_sigma(oracle::to(w), oracle::to(v), p, S);
    CHECK((r >= 0) == (phase_key(oracle::to(v), p, S) >= phase_key(oracle::to(w), p, S)));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("pairing identity in twisted coordinates") {
  oracle::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    long h2 = rng.even_h2();
    auto S = Surface::abelian(h2);
    MukaiVector v1 = oracle::to(rng.vec(12, 5)), v2 = oracle::to(rng.vec(12, 5));
    Rational s = rng.rational(8, 5);
    auto t1 = twisted_invariants(v1, s, S), t2 = twisted_invariants(v2, s, S);
    if (t1.d_b == 0 || t2.d_b == 0) continue;
    Rational lhs = mukai_pairing(v1, v2, S) / (t1.d_b * t2.d_b);
    Rational rhs = square(v1, S) / (2 * t1.d_b * t1.d_b) + square(v2, S) / (2 * t2.d_b * t2.d_b) +
                   (t1.r_b / t1.d_b - t2.r_b / t2.d_b) * (t1.a_b / t1.d_b - t2.a_b / t2.d_b);
    CHECK(lhs == rhs);
  }
}
