#pragma once

#include "mukai/rational.hpp"

#include <array>
#include <compare>
#include <string>
#include <utility>

namespace mukai {

enum class SurfaceKind { Abelian, K3 };

/// A Picard-rank-one abelian or K3 surface, remembered only through the kind
/// and the self-intersection h2 = (H^2) of the ample generator.
class Surface {
public:
  /// Throws InvalidInput unless h2 is a positive even integer.
  Surface(SurfaceKind kind, long h2);

  static Surface abelian(long h2) { return Surface(SurfaceKind::Abelian, h2); }
  static Surface k3(long h2) { return Surface(SurfaceKind::K3, h2); }

  SurfaceKind kind() const noexcept { return kind_; }
  long h2() const noexcept { return h2_; }
  /// 0 on an abelian surface, 1 on a K3.
  int epsilon() const noexcept { return kind_ == SurfaceKind::K3 ? 1 : 0; }

  bool operator==(const Surface&) const = default;

private:
  SurfaceKind kind_;
  long h2_;
};

/// r + d H + a rho in the algebraic Mukai lattice, with rational entries.
struct MukaiVector {
  Rational r;
  Rational d;
  Rational a;

  MukaiVector() = default;
  MukaiVector(Rational r_, Rational d_, Rational a_)
      : r(std::move(r_)), d(std::move(d_)), a(std::move(a_)) {}
  MukaiVector(long r_, long d_, long a_) : r(r_), d(d_), a(a_) {}

  bool is_zero() const { return r == 0 && d == 0 && a == 0; }
  bool is_integral() const { return is_integer(r) && is_integer(d) && is_integer(a); }
  /// gcd(|r|,|d|,|a|) == 1; false for non-integral vectors and for 0.
  bool is_primitive() const;
  /// gcd of the entries of an integral vector (0 for the zero vector).
  Integer content() const;

  MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, d + o.d, a + o.a}; }
  MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, d - o.d, a - o.a}; }
  MukaiVector operator-() const { return {-r, -d, -a}; }
  friend MukaiVector operator*(const Rational& k, const MukaiVector& v) {
    return {k * v.r, k * v.d, k * v.a};
  }

  bool operator==(const MukaiVector& o) const { return r == o.r && d == o.d && a == o.a; }
  /// Lexicographic in (r, d, a).
  std::strong_ordering operator<=>(const MukaiVector& o) const;
};

/// "r,d,a" with lowest-terms entries.
std::string to_string(const MukaiVector& v);
/// Parses "r,d,a"; each entry is an integer or p/q.
MukaiVector parse_vector(std::string_view text);

/// The beta-twisted coordinates (r_b, d_b, a_b) of a vector at beta = sH.
struct TwistedInvariants {
  Rational r_b;
  Rational d_b;
  Rational a_b;
  bool operator==(const TwistedInvariants&) const = default;
};

/// <x, y> = h2 x.d y.d - x.r y.a - x.a y.r.
Rational mukai_pairing(const MukaiVector& x, const MukaiVector& y, const Surface& S);

inline Rational square(const MukaiVector& x, const Surface& S) { return mukai_pairing(x, x, S); }

/// Mukai vector of a sheaf with the given rank, c_1 = c1_mult * H and Euler characteristic.
MukaiVector sheaf_vector(long rank, long c1_mult, long chi, const Surface& S);

/// e^{sH} = (1, s, s^2 h2 / 2).
MukaiVector exp_vector(const Rational& s, const Surface& S);

TwistedInvariants twisted_invariants(const MukaiVector& v, const Rational& s, const Surface& S);

/// Moves twisted coordinates taken at from_s to the twist at to_s using only
/// the twisted data (no access to the untwisted vector).
TwistedInvariants retwist(const TwistedInvariants& tw, const Rational& from_s,
                          const Rational& to_s, const Surface& S);

/// Reassembles r e^{sH} + d (H + (H, sH) rho) + a rho from twisted coordinates.
MukaiVector untwist(const TwistedInvariants& tw, const Rational& s, const Surface& S);

/// Minimal positive value of d - r s over integer pairs (r, d): 1/q for s = p/q.
Rational d_beta_min(const Rational& s, const Surface& S);

/// Canonical (Hermite-normal-form) Z-basis of {x integral : <x, v> = 0}.
/// Throws NonIntegral for non-integral v and Zero for v = 0.
std::pair<MukaiVector, MukaiVector> perp_basis(const MukaiVector& v, const Surface& S);

struct PrimitivityReport {
  bool integral = false;
  bool primitive = false;
  bool isotropic = false;
};

PrimitivityReport primitivity_report(const MukaiVector& v, const Surface& S);

} // namespace mukai
