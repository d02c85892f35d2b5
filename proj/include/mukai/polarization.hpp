#pragma once

#include "mukai/stability.hpp"

namespace mukai {

struct AmpleClassReport {
  Rational phi_omega;
  MukaiVector xi_omega;
  /// <v, xi_omega>; zero by construction, recomputed as a check.
  Rational pairing_with_v;
};

/// phi = (r h2 t2/2 - a_b)/d_b and xi = phi xi1 + h2 xi2.
/// Throws ZeroRank (r = 0) or ZeroDegree (d_b = 0).
AmpleClassReport ample_class(const MukaiVector& v, const StabilityParam& p, const Surface& S);

/// xi1 = (0, 1, h2 v.d/v.r) and xi2 = -(e^{sH} - (chi/r) rho) with
/// chi = -<e^{sH}, v> = a_b(v). Throws ZeroRank.
std::pair<MukaiVector, MukaiVector> xi_pair(const MukaiVector& v, const Rational& s, const Surface& S);

/// x0 = max(2 a_b/(h2 d_b), 0); the domain is (x0, d_b/r) for r > 0 and (x0, oo) otherwise.
struct OmegaDomain {
  Rational x0;
  std::optional<Rational> upper;
};

/// Throws ZeroDegree unless d_b(v) > 0.
OmegaDomain omega_x_domain(const MukaiVector& v, const Rational& s, const Surface& S);

/// t2 = 2 f(x)/h2 with f(x) = x (a_b - d_b h2 x/2)/(x r - d_b); x is relative to s.
/// Throws OutOfDomain when x is outside the domain.
Rational omega_x(const MukaiVector& v, const Rational& s, const Rational& x, const Surface& S);

/// Same alignment with absolute coordinates: x is the twist of w1 = r1 e^{xH}.
/// Throws Degenerate when x r = d_0 and NonPositive when t2 <= 0.
Rational omega_sx(const MukaiVector& v, const Rational& s, const Rational& x, const Surface& S);

} // namespace mukai
