#include "mukai/fourier_mukai.hpp"

#include "mukai/errors.hpp"

namespace mukai {

ComplexRational ComplexRational::inverse() const {
  Rational n = re * re + im * im;
  if (n == 0) throw Error(ErrorCode::ZeroDenominator, "inverse of 0");
  return {re / n, -im / n};
}

FMTransform FMTransform::make(long r1, const Rational& c, const Surface& S) {
  if (r1 == 0) throw Error(ErrorCode::ZeroRank, "r1 must be nonzero");
  FMTransform T(r1, c, S);
  MukaiVector w = T.w1();
  if (!w.is_integral())
    throw Error(ErrorCode::NotIntegral, "w1 = " + to_string(w) + " is not integral");
  if (!w.is_primitive())
    throw Error(ErrorCode::NotPrimitive, "w1 = " + to_string(w) + " is not primitive");
  return T;
}

MukaiVector FMTransform::w1() const { return Rational(r1_) * exp_vector(c_, S_); }

Integer FMTransform::pairing_divisibility() const {
  // <w1, x> = (-w1.a, h2 w1.d, -w1.r) . x
  MukaiVector w = w1();
  Integer g;
  Integer h2d = S_.h2() * w.d.get_num();
  mpz_gcd(g.get_mpz_t(), w.a.get_num_mpz_t(), h2d.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.r.get_num_mpz_t());
  return g;
}

namespace {

int sign_of(long x) { return x > 0 ? 1 : -1; }

} // namespace

// Lattice action: e^gamma -> -rho/r1, rho -> -r1 e^{gamma'},
// H + (H, gamma) rho -> sign(r1) (H + (H, gamma') rho).
MukaiVector fm_apply(const FMTransform& T, const MukaiVector& v) {
  TwistedInvariants tw = twisted_invariants(v, T.c(), T.source());
  const long r1 = T.r1();
  return {Rational(-r1 * tw.a_b), Rational(sign_of(r1) * tw.d_b), Rational(-tw.r_b / r1)};
}

MukaiVector fm_inverse(const FMTransform& T, const MukaiVector& image) {
  const long r1 = T.r1();
  TwistedInvariants tw{Rational(-r1 * image.a), Rational(sign_of(r1) * image.d), Rational(-image.r / r1)};
  return untwist(tw, T.c(), T.source());
}

MukaiVector dual(const MukaiVector& v) { return {v.r, -v.d, v.a}; }

Rational l_divisor(const Rational& lambda, const Rational& t2, const Surface&) {
  if (t2 <= 0) throw Error(ErrorCode::NonPositive, "t2 must be positive");
  return (t2 + lambda * lambda) / 2;
}

Rational slope_defect(const MukaiVector& image, const FMTransform& T, const StabilityParam& p) {
  const Rational lambda = T.c() - p.s;
  const long h2 = T.source().h2();
  const Rational L = l_divisor(lambda, p.t2, T.source());
  return Rational(-std::abs(T.r1()) * image.d * L * h2 + lambda * image.r);
}

TransformedCharge transform_central_charge(const FMTransform& T, const StabilityParam& p) {
  if (!p.t)
    throw Error(ErrorCode::InvalidInput, "the transformed charge needs t itself, not only t2");
  const Rational& t = *p.t;
  const Rational lambda = T.c() - p.s;
  const long h2 = T.source().h2();
  const long r1 = T.r1();
  const Rational P = (lambda * lambda * h2 - t * t * h2) / 2;
  const Rational Q = lambda * t * h2;
  const Rational delta = P * P + Q * Q;
  if (delta == 0) throw Error(ErrorCode::ZeroDenominator, "lambda = t = 0");
  TransformedCharge out;
  out.zeta = {Rational(-r1 * P), Rational(r1 * Q)};
  // Phi(e^{beta + i omega}) = zeta e^{gamma' + xi + i eta} with
  // xi + i eta = (lambda + i t)(lambda^2 + t^2)(h2/2) / (|r1| delta).
  const Rational scale = (lambda * lambda + t * t) * h2 / 2 / (std::abs(r1) * delta);
  out.xi_coeff = lambda * scale;
  out.eta_coeff = t * scale;
  return out;
}

ComplexRational charge_in_twisted_frame(const MukaiVector& x, const Rational& xi, const Rational& eta,
                                        const Surface& S) {
  TwistedInvariants tw = twisted_invariants(x, xi, S);
  const long h2 = S.h2();
  return {Rational(-tw.a_b + eta * eta * h2 / 2 * tw.r_b), Rational(tw.d_b * eta * h2)};
}

ComplexRational full_central_charge(const MukaiVector& v, const StabilityParam& p, const Surface& S) {
  if (!p.t) throw Error(ErrorCode::InvalidInput, "the full charge needs t itself, not only t2");
  CentralCharge z = central_charge(v, p, S);
  return {z.re, Rational(z.im_over_t * *p.t)};
}

} // namespace mukai
