#pragma once

#include "mukai/stability.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mukai {

enum class WallShape { Circle, VerticalLine, Empty, Everywhere };

std::string_view to_string(WallShape shape);

/// The locus rho(v1, v) = 0 in the half-plane t > 0.
struct Wall {
  MukaiVector v1;
  WallShape shape = WallShape::Empty;
  SigmaCoefficients coeffs;
  Rational center_s;   // Circle
  Rational radius_sq;  // Circle
  Rational line_s;     // VerticalLine

  /// (A:C:D) scaled so that the first nonzero entry is 1.
  std::array<Rational, 3> normalized() const;
  /// t2 where the wall crosses the vertical line at s, if it does (t2 > 0).
  std::optional<Rational> t2_at(const Rational& s) const;
};

/// Closed in s, half-open (t2_min, t2_max] in t2.
struct Region {
  Rational s_min;
  Rational s_max;
  Rational t2_min;
  Rational t2_max;

  /// Throws InvalidInput unless s_min <= s_max and 0 < t2_min <= t2_max.
  void validate() const;
  bool is_ray() const { return s_min == s_max; }
};

struct CategoryWall {
  MukaiVector u;
  Rational t2;
};

struct ChamberRay {
  Rational s;
  Rational t2_lo;
  Rational t2_hi;
  std::vector<Rational> cut_points;
  std::vector<std::pair<Rational, Rational>> chambers;
  /// Walls hitting the ray, in the order of their cut points.
  std::vector<Wall> walls;
  /// K3 walls for categories on the ray, only when requested.
  std::vector<CategoryWall> category_walls;
};

enum class Side { CPlus, CMinus, OnWall };

std::string_view to_string(Side side);

struct WallVectorReport {
  bool satisfied = false;
  /// True on K3, where the conditions are necessary but not sufficient.
  bool necessary_only = false;
  Rational v1_square;
  Rational v2_square;
  Rational pairing;
};

struct EnumerationOptions {
  std::uint64_t candidate_cap = 1'000'000;
};

Wall wall_locus(const MukaiVector& v1, const MukaiVector& v, const Surface& S);

/// Abelian: the iff criterion. K3: the numerical conditions of the twisted
/// degree window at beta = sH (s defaults to 0), flagged as necessary only.
/// Throws NonPositiveSquare when <v^2> <= 0.
WallVectorReport is_wall_vector(const MukaiVector& v1, const MukaiVector& v, const Surface& S,
                                const std::optional<Rational>& s = std::nullopt);

/// Every distinct wall for v meeting the region at a point where d_b(v) > 0,
/// circles first (by center, then radius), then vertical lines by position.
/// On K3 the region must be a single ray.
std::vector<Wall> enumerate_walls(const MukaiVector& v, const Surface& S, const Region& reg,
                                  const EnumerationOptions& opts = {});

/// Throws NoAdmissibleRegion when d_b(v) <= 0 at s. The t2 range is (t2_lo, t2_hi].
ChamberRay chambers_on_ray(const MukaiVector& v, const Surface& S, const Rational& s,
                           const Rational& t2_lo, const Rational& t2_hi,
                           const EnumerationOptions& opts = {}, bool cut_category_walls = false);

Side wall_side(const MukaiVector& v, const MukaiVector& w1, const StabilityParam& p, const Surface& S);

/// Walls for categories on a K3 at beta = bH with t2 in (0, t2_max].
std::vector<CategoryWall> category_walls_k3(const Rational& b, const Surface& S, const Rational& t2_max);

} // namespace mukai
