#pragma once

#include "mukai/stability.hpp"

namespace mukai {

/// re + i im with rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational operator*(const ComplexRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  /// Throws ZeroDenominator for 0.
  ComplexRational inverse() const;
  bool operator==(const ComplexRational&) const = default;
};

/// Lattice action of the transform attached to w1 = r1 e^{cH}. Images are
/// written in coordinates twisted by gamma' on the partner surface, which
/// carries the same h2.
class FMTransform {
public:
  /// Throws ZeroRank if r1 = 0, NotIntegral or NotPrimitive for w1.
  static FMTransform make(long r1, const Rational& c, const Surface& S);

  long r1() const noexcept { return r1_; }
  const Rational& c() const noexcept { return c_; }
  const Surface& source() const noexcept { return S_; }
  const Surface& target() const noexcept { return S_; }
  MukaiVector w1() const;
  /// gcd of <w1, x> over integral x; 1 when some class pairs to 1 with w1.
  Integer pairing_divisibility() const;

private:
  FMTransform(long r1, Rational c, Surface S) : r1_(r1), c_(std::move(c)), S_(S) {}
  long r1_;
  Rational c_;
  Surface S_;
};

inline FMTransform make_transform(long r1, const Rational& c, const Surface& S) {
  return FMTransform::make(r1, c, S);
}

MukaiVector fm_apply(const FMTransform& T, const MukaiVector& v);
/// Inverse of fm_apply.
MukaiVector fm_inverse(const FMTransform& T, const MukaiVector& image);
/// (r, d, a) -> (r, -d, a).
MukaiVector dual(const MukaiVector& v);

/// H-coefficient of L: (t2 + lambda^2)/2. Throws NonPositive unless t2 > 0.
Rational l_divisor(const Rational& lambda, const Rational& t2, const Surface& S);

/// -|r1| d' L h2 + lambda r' for the image (r', d', a'), lambda = c - s.
Rational slope_defect(const MukaiVector& image, const FMTransform& T, const StabilityParam& p);

struct TransformedCharge {
  ComplexRational zeta;
  Rational xi_coeff;
  Rational eta_coeff;
};

/// Needs the exact t. Throws InvalidInput if p.t is absent, ZeroDenominator
/// when lambda = t = 0.
TransformedCharge transform_central_charge(const FMTransform& T, const StabilityParam& p);

/// Z at (gamma' + xi H, eta H) of a class given in gamma'-twisted coordinates.
ComplexRational charge_in_twisted_frame(const MukaiVector& x, const Rational& xi, const Rational& eta,
                                        const Surface& S);

/// Z_{(beta, omega)}(v) as a complex number; needs the exact t.
ComplexRational full_central_charge(const MukaiVector& v, const StabilityParam& p, const Surface& S);

} // namespace mukai
