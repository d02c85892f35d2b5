#pragma once

#include "mukai/surface_lattice.hpp"

#include <compare>
#include <optional>

namespace mukai {

/// beta = sH, omega = tH. Only t2 enters the lattice formulas; t is kept when
/// the caller knows it exactly (the transformed charge needs it).
struct StabilityParam {
  Rational s;
  std::optional<Rational> t;
  Rational t2;

  /// Throws NonPositive unless t > 0.
  static StabilityParam from_t(const Rational& s, const Rational& t);
  /// Throws NonPositive unless t2 > 0.
  static StabilityParam from_t2(const Rational& s, const Rational& t2);
};

/// Z = re + i * t * im_over_t.
struct CentralCharge {
  Rational re;
  Rational im_over_t;

  bool is_zero() const { return re == 0 && im_over_t == 0; }
  bool operator==(const CentralCharge&) const = default;
};

/// Total order on phases in (0, 2]. Inside an open half-plane the phase grows
/// with -Re/Im; `slope` stores -Re/(Im/t), which has the same order for a fixed
/// parameter point. Keys from different parameter points are not comparable.
struct PhaseKey {
  int revolution = 0;   // 0: phase in (0,1], 1: phase in (1,2]
  bool boundary = false; // phase is exactly 1 or 2
  Rational slope;       // 0 when boundary

  std::strong_ordering operator<=>(const PhaseKey& o) const;
  bool operator==(const PhaseKey& o) const;

  /// Floating value of the phase, for display only.
  double approx(const Rational& t2) const;
};

enum class ZDomain { UpperHalf, NegativeReal, Outside, Zero };

CentralCharge central_charge(const MukaiVector& v, const StabilityParam& p, const Surface& S);

/// rho(v1, v) = ReZ(v1) d_b(v) - d_b(v1) ReZ(v); Sigma(v1, v) = t h2 rho.
Rational reduced_sigma(const MukaiVector& v1, const MukaiVector& v, const StabilityParam& p,
                       const Surface& S);

/// rho(v1, v) = A (t^2 + s^2) + C s + D in untwisted coordinates.
struct SigmaCoefficients {
  Rational A;
  Rational C;
  Rational D;

  Rational evaluate(const Rational& s, const Rational& t2) const { return A * (t2 + s * s) + C * s + D; }
  bool is_zero() const { return A == 0 && C == 0 && D == 0; }
};

SigmaCoefficients sigma_coefficients(const MukaiVector& v1, const MukaiVector& v, const Surface& S);

/// Throws ZeroCharge when Z(v) = 0.
PhaseKey phase_key(const MukaiVector& v, const StabilityParam& p, const Surface& S);

ZDomain z_domain_check(const MukaiVector& v, const StabilityParam& p, const Surface& S);

std::string_view to_string(ZDomain z);

} // namespace mukai
