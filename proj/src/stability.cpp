#include "mukai/stability.hpp"

#include "mukai/errors.hpp"

#include <cmath>
#include <numbers>

namespace mukai {

StabilityParam StabilityParam::from_t(const Rational& s, const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::NonPositive, "t must be positive, got " + to_string(t));
  return {s, t, Rational(t * t)};
}

StabilityParam StabilityParam::from_t2(const Rational& s, const Rational& t2) {
  if (t2 <= 0) throw Error(ErrorCode::NonPositive, "t2 must be positive, got " + to_string(t2));
  return {s, std::nullopt, t2};
}

std::strong_ordering PhaseKey::operator<=>(const PhaseKey& o) const {
  if (revolution != o.revolution) return revolution <=> o.revolution;
  if (boundary != o.boundary) return boundary ? std::strong_ordering::greater : std::strong_ordering::less;
  if (boundary) return std::strong_ordering::equal;
  int c = cmp(slope, o.slope);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

bool PhaseKey::operator==(const PhaseKey& o) const { return (*this <=> o) == 0; }

double PhaseKey::approx(const Rational& t2) const {
  if (boundary) return revolution + 1.0;
  // slope * t = -Re/Im, and phase = revolution + 1/2 + atan(-Re/Im)/pi
  double x = slope.get_d() / std::sqrt(t2.get_d());
  return revolution + 0.5 + std::atan(x) / std::numbers::pi;
}

CentralCharge central_charge(const MukaiVector& v, const StabilityParam& p, const Surface& S) {
  TwistedInvariants tw = twisted_invariants(v, p.s, S);
  const long h2 = S.h2();
  return {Rational(-tw.a_b + h2 * p.t2 / 2 * tw.r_b), Rational(tw.d_b * h2)};
}

Rational reduced_sigma(const MukaiVector& v1, const MukaiVector& v, const StabilityParam& p,
                       const Surface& S) {
  CentralCharge z1 = central_charge(v1, p, S);
  CentralCharge z = central_charge(v, p, S);
  Rational d1 = twisted_invariants(v1, p.s, S).d_b;
  Rational d = twisted_invariants(v, p.s, S).d_b;
  return Rational(z1.re * d - d1 * z.re);
}

SigmaCoefficients sigma_coefficients(const MukaiVector& v1, const MukaiVector& v, const Surface& S) {
  return {Rational(Rational(S.h2()) / 2 * (v1.r * v.d - v.r * v1.d)),
          Rational(v1.a * v.r - v1.r * v.a),
          Rational(v.a * v1.d - v1.a * v.d)};
}

PhaseKey phase_key(const MukaiVector& v, const StabilityParam& p, const Surface& S) {
  CentralCharge z = central_charge(v, p, S);
  if (z.is_zero())
    throw Error(ErrorCode::ZeroCharge, "Z(" + to_string(v) + ") = 0 at s=" + to_string(p.s) +
                                           ", t2=" + to_string(p.t2));
  PhaseKey k;
  if (z.im_over_t == 0) {
    k.boundary = true;
    k.revolution = z.re < 0 ? 0 : 1;
    return k;
  }
  k.revolution = z.im_over_t > 0 ? 0 : 1;
  k.slope = -z.re / z.im_over_t;
  return k;
}

ZDomain z_domain_check(const MukaiVector& v, const StabilityParam& p, const Surface& S) {
  CentralCharge z = central_charge(v, p, S);
  if (z.is_zero()) return ZDomain::Zero;
  if (z.im_over_t > 0) return ZDomain::UpperHalf;
  if (z.im_over_t == 0 && z.re < 0) return ZDomain::NegativeReal;
  return ZDomain::Outside;
}

std::string_view to_string(ZDomain z) {
  switch (z) {
  case ZDomain::UpperHalf: return "UpperHalf";
  case ZDomain::NegativeReal: return "NegativeReal";
  case ZDomain::Outside: return "Outside";
  case ZDomain::Zero: return "Zero";
  }
  return "Outside";
}

} // namespace mukai
