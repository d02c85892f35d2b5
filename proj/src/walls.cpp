#include "mukai/walls.hpp"

#include "mukai/errors.hpp"

#include <algorithm>
#include <map>

namespace mukai {

std::string_view to_string(WallShape shape) {
  switch (shape) {
  case WallShape::Circle: return "circle";
  case WallShape::VerticalLine: return "vertical_line";
  case WallShape::Empty: return "empty";
  case WallShape::Everywhere: return "everywhere";
  }
  return "empty";
}

std::string_view to_string(Side side) {
  switch (side) {
  case Side::CPlus: return "CPlus";
  case Side::CMinus: return "CMinus";
  case Side::OnWall: return "OnWall";
  }
  return "OnWall";
}

std::array<Rational, 3> Wall::normalized() const {
  std::array<Rational, 3> k{coeffs.A, coeffs.C, coeffs.D};
  for (const Rational& lead : k) {
    if (lead == 0) continue;
    Rational scale = lead;
    for (auto& e : k) e /= scale;
    break;
  }
  return k;
}

std::optional<Rational> Wall::t2_at(const Rational& s) const {
  if (shape != WallShape::Circle) return std::nullopt;
  Rational t2 = radius_sq - (s - center_s) * (s - center_s);
  if (t2 <= 0) return std::nullopt;
  return t2;
}

void Region::validate() const {
  if (s_min > s_max)
    throw Error(ErrorCode::InvalidInput, "region needs s_min <= s_max");
  if (t2_min <= 0 || t2_min > t2_max)
    throw Error(ErrorCode::InvalidInput, "region needs 0 < t2_min <= t2_max");
}

Wall wall_locus(const MukaiVector& v1, const MukaiVector& v, const Surface& S) {
  Wall w;
  w.v1 = v1;
  w.coeffs = sigma_coefficients(v1, v, S);
  const auto& [A, C, D] = w.coeffs;
  if (A != 0) {
    w.center_s = -C / (2 * A);
    w.radius_sq = C * C / (4 * A * A) - D / A;
    // radius_sq <= 0 leaves at most the point (center, 0), which has t = 0.
    w.shape = w.radius_sq > 0 ? WallShape::Circle : WallShape::Empty;
  } else if (C != 0) {
    w.shape = WallShape::VerticalLine;
    w.line_s = -D / C;
  } else {
    w.shape = D == 0 ? WallShape::Everywhere : WallShape::Empty;
  }
  return w;
}

namespace {

bool proportional(const MukaiVector& x, const MukaiVector& y) {
  return x.r * y.d == x.d * y.r && x.r * y.a == x.a * y.r && x.d * y.a == x.a * y.d;
}

Integer ceil_sqrt(const Rational& x) {
  Integer f = floor_sqrt(x);
  return f * f == x ? f : Integer(f + 1);
}

// A bounded interval with optionally open ends.
struct Interval {
  Rational lo, hi;
  bool lo_open = false, hi_open = false;

  bool empty() const { return lo > hi || (lo == hi && (lo_open || hi_open)); }

  Interval intersect(const Interval& o) const {
    Interval r = *this;
    if (o.lo > r.lo || (o.lo == r.lo && o.lo_open)) {
      r.lo = o.lo;
      r.lo_open = o.lo_open;
    }
    if (o.hi < r.hi || (o.hi == r.hi && o.hi_open)) {
      r.hi = o.hi;
      r.hi_open = o.hi_open;
    }
    return r;
  }
};

// [s_min, s_max] intersected with {d_b(v) > 0}.
Interval admissible_interval(const MukaiVector& v, const Region& reg) {
  Interval I{reg.s_min, reg.s_max};
  if (v.r == 0) {
    if (v.d <= 0) I.hi_open = I.lo_open = true, I.hi = I.lo;
    return I;
  }
  // d_b(v) = v.d - v.r s vanishes at s0 and is positive to its left when r > 0.
  Rational s0 = v.d / v.r;
  Interval half = v.r > 0 ? Interval{reg.s_min, s0, false, true} : Interval{s0, reg.s_max, true, false};
  return I.intersect(half);
}

// Does some s in I put (s - c)^2 into [lo, hi)?
bool square_distance_hits(const Interval& I, const Rational& c, const Rational& lo, const Rational& hi) {
  if (hi <= 0) return false;
  Interval target{lo, hi, false, true};
  // (s - c)^2 is monotone on each side of c.
  Interval left = I.intersect(Interval{I.lo, c, false, false});
  if (!left.empty()) {
    Interval img{(left.hi - c) * (left.hi - c), (left.lo - c) * (left.lo - c), left.hi_open, left.lo_open};
    if (!img.intersect(target).empty()) return true;
  }
  Interval right = I.intersect(Interval{c, I.hi, false, false});
  if (!right.empty()) {
    Interval img{(right.lo - c) * (right.lo - c), (right.hi - c) * (right.hi - c), right.lo_open, right.hi_open};
    if (!img.intersect(target).empty()) return true;
  }
  return false;
}

bool wall_meets(const Wall& w, const Interval& I, const Region& reg) {
  switch (w.shape) {
  case WallShape::Circle:
    // t2 = R^2 - (s-c)^2 in (t2_min, t2_max]  <=>  (s-c)^2 in [R^2 - t2_max, R^2 - t2_min)
    return square_distance_hits(I, w.center_s, w.radius_sq - reg.t2_max, w.radius_sq - reg.t2_min);
  case WallShape::VerticalLine:
    return !I.intersect(Interval{w.line_s, w.line_s}).empty();
  case WallShape::Everywhere:
    return !I.empty();
  case WallShape::Empty:
    return false;
  }
  return false;
}

bool better_representative(const MukaiVector& x, const MukaiVector& y, const Surface& S) {
  Rational qx = abs(square(x, S)), qy = abs(square(y, S));
  if (qx != qy) return qx < qy;
  return x < y;
}

bool wall_order(const Wall& x, const Wall& y) {
  if (x.shape != y.shape) return x.shape < y.shape;
  if (x.shape == WallShape::Circle) {
    if (x.center_s != y.center_s) return x.center_s < y.center_s;
    return x.radius_sq < y.radius_sq;
  }
  if (x.shape == WallShape::VerticalLine) return x.line_s < y.line_s;
  return x.normalized() < y.normalized();
}

using WallKey = std::array<Rational, 3>;

struct KeyLess {
  bool operator()(const WallKey& x, const WallKey& y) const {
    for (int i = 0; i < 3; ++i) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
  }
};

class WallCollector {
public:
  explicit WallCollector(const Surface& S) : S_(S) {}

  void add(const Wall& w) {
    auto [it, inserted] = walls_.emplace(w.normalized(), w);
    if (!inserted && better_representative(w.v1, it->second.v1, S_)) it->second.v1 = w.v1;
  }

  std::vector<Wall> sorted() const {
    std::vector<Wall> out;
    for (const auto& [key, w] : walls_) out.push_back(w);
    std::sort(out.begin(), out.end(), wall_order);
    return out;
  }

private:
  const Surface& S_;
  std::map<WallKey, Wall, KeyLess> walls_;
};

void charge_candidates(std::uint64_t& count, const Integer& n, std::uint64_t cap) {
  if (n <= 0) return;
  if (!n.fits_ulong_p() || count + n.get_ui() > cap)
    throw Error(ErrorCode::BoundOverflow,
                "wall search needs more than " + std::to_string(cap) + " candidates");
  count += n.get_ui();
}

// Abelian surfaces. Bounds, for a wall point (s, t2) with d = d_b(v) > 0:
//  * The positivity lemma gives 0 < d1 < d for d1 = d_b(v1), so
//    v1.d lies in (r1 s, r1 s + d(s)) for some admissible s.
//  * With K = r1 d - r d1 (independent of s) the pairing identity reads
//    <v1,v2> d1 d2 = d2^2 <v1^2>/2 + d1^2 <v2^2>/2 + K^2 t2 h2 / 2,
//    and <v1,v2> <= <v^2>/2, d1 d2 <= d^2/4 give |K|/d <= sqrt(<v^2>/(4 t2 h2)).
//    Since r1 = (K + r d1)/d and 0 < d1/d < 1, |r1| <= |r| + floor(sqrt(<v^2>/(4 t2_min h2))).
//  * <v1^2> and <v2^2> both lie in [0, <v^2>], which confines a1 once (r1, d1)
//    is fixed (through v1 if r1 != 0, otherwise through v2 whose rank is r).
//    r1 = r = 0 gives A = C = 0, so no wall meets t > 0 at all.
std::vector<Wall> enumerate_abelian(const MukaiVector& v, const Surface& S, const Region& reg,
                                    const Interval& I, const EnumerationOptions& opts) {
  const long h2 = S.h2();
  const Rational sq = square(v, S);
  const Integer r = v.r.get_num();
  const Integer rank_bound = abs(r) + floor_sqrt(Rational(sq / (4 * reg.t2_min * h2)));

  struct Strip {
    Integer r1, d1, a_lo, a_hi;
  };
  std::vector<Strip> strips;
  std::uint64_t count = 0;
  for (Integer r1 = -rank_bound; r1 <= rank_bound; ++r1) {
    if (r1 == 0 && r == 0) continue;
    Rational lo1 = r1 * I.lo, lo2 = r1 * I.hi;
    Rational hi1 = v.d + (r1 - r) * I.lo, hi2 = v.d + (r1 - r) * I.hi;
    Integer d_lo = floor(std::min(lo1, lo2)), d_hi = ceil(std::max(hi1, hi2));
    for (Integer d1 = d_lo; d1 <= d_hi; ++d1) {
      Rational x, y;
      if (r1 != 0) {
        x = Rational(h2 * d1 * d1 - sq) / (2 * r1);
        y = Rational(h2 * d1 * d1) / (2 * r1);
      } else {
        Rational d2 = v.d - d1;
        Rational a2x = (h2 * d2 * d2 - sq) / (2 * r), a2y = h2 * d2 * d2 / (2 * r);
        x = v.a - a2x;
        y = v.a - a2y;
      }
      if (x > y) std::swap(x, y);
      Strip st{r1, d1, ceil(x), floor(y)};
      charge_candidates(count, Integer(st.a_hi - st.a_lo + 1), opts.candidate_cap);
      if (st.a_lo <= st.a_hi) strips.push_back(st);
    }
  }

  WallCollector walls(S);
  for (const Strip& st : strips) {
    for (Integer a1 = st.a_lo; a1 <= st.a_hi; ++a1) {
      MukaiVector v1{Rational(st.r1), Rational(st.d1), Rational(a1)};
      if (!is_wall_vector(v1, v, S).satisfied) continue;
      Wall w = wall_locus(v1, v, S);
      if (wall_meets(w, I, reg)) walls.add(w);
    }
  }
  return walls.sorted();
}

// K3 surfaces, on the single ray beta = sH. Conditions (b), (c) involve
// d_min = 1/q for s = p/q, so there is no uniform bound over an s-interval.
//  * d1 = k/q with 1 <= k < q d.
//  * The wall meets the ray where a1 = (t2 h2 K/2 + a d1)/d, K = r1 d - r d1.
//  * (c) reads 2 r1 a1 <= h2 d1^2 + 2 k^2 =: M. Multiplying by d^2/2,
//    (t2 h2/2) K (K + r d1) + a d1 (K + r d1) <= M d^2/2.
//    Either K (K + r d1) < 0, so |K| <= |r d1|, or t2 may be lowered to t2_min,
//    leaving a quadratic inequality in K with positive leading coefficient.
std::vector<Wall> enumerate_k3_ray(const MukaiVector& v, const Surface& S, const Region& reg,
                                   const EnumerationOptions& opts) {
  const long h2 = S.h2();
  const Rational s = reg.s_min;
  const TwistedInvariants tw = twisted_invariants(v, s, S);
  const Rational& r = tw.r_b;
  const Rational& d = tw.d_b;
  const Rational& a = tw.a_b;
  Rational s_canon = s;
  s_canon.canonicalize();
  const Integer q = s_canon.get_den();
  const Rational dq = d * q;
  const Integer k_max = dq.get_num() / dq.get_den() - 1;

  WallCollector walls(S);
  std::uint64_t count = 0;
  for (Integer k = 1; k <= k_max; ++k) {
    Rational d1(k, q);
    d1.canonicalize();
    const Rational M = h2 * d1 * d1 + 2 * k * k;
    const Rational alpha = reg.t2_min * h2 / 2;
    const Rational beta = reg.t2_min * h2 * r * d1 / 2 + a * d1;
    const Rational gamma = a * r * d1 * d1 - M * d * d / 2;
    const Rational disc = beta * beta - 4 * alpha * gamma;
    Rational k_bound = abs(r * d1);
    if (disc >= 0) k_bound = std::max(k_bound, Rational((abs(beta) + ceil_sqrt(disc)) / (2 * alpha)));

    Integer r1_lo = floor(Rational((-k_bound + r * d1) / d)), r1_hi = ceil(Rational((k_bound + r * d1) / d));
    for (Integer r1 = r1_lo; r1 <= r1_hi; ++r1) {
      const Rational vd = d1 + r1 * s;
      if (!is_integer(vd)) continue;
      const Rational K = r1 * d - r * d1;
      // K = 0: rho is constant along the ray.
      if (K == 0) continue;
      auto untwisted_a = [&](const Rational& t2) {
        Rational a1 = (t2 * h2 * K / 2 + a * d1) / d;
        return Rational(a1 + vd * s * h2 - r1 * s * s * h2 / 2);
      };
      Rational x = untwisted_a(reg.t2_min), y = untwisted_a(reg.t2_max);
      if (x > y) std::swap(x, y);
      Integer a_lo = ceil(x), a_hi = floor(y);
      charge_candidates(count, Integer(a_hi - a_lo + 1), opts.candidate_cap);
      for (Integer a1 = a_lo; a1 <= a_hi; ++a1) {
        MukaiVector v1{Rational(r1), vd, Rational(a1)};
        Wall w = wall_locus(v1, v, S);
        auto t2 = w.t2_at(s);
        if (!t2 || *t2 <= reg.t2_min || *t2 > reg.t2_max) continue;
        if (!is_wall_vector(v1, v, S, s).satisfied) continue;
        walls.add(w);
      }
    }
  }
  return walls.sorted();
}

} // namespace

WallVectorReport is_wall_vector(const MukaiVector& v1, const MukaiVector& v, const Surface& S,
                                const std::optional<Rational>& s) {
  const Rational sq = square(v, S);
  if (sq <= 0)
    throw Error(ErrorCode::NonPositiveSquare, "<v^2> = " + to_string(sq) + " is not positive");
  const MukaiVector v2 = v - v1;
  WallVectorReport rep;
  rep.v1_square = square(v1, S);
  rep.v2_square = square(v2, S);
  rep.pairing = mukai_pairing(v1, v2, S);
  const bool independent = !proportional(v1, v);

  if (S.kind() == SurfaceKind::Abelian) {
    rep.satisfied = rep.v1_square >= 0 && rep.v2_square >= 0 && rep.pairing > 0 && independent;
    return rep;
  }

  rep.necessary_only = true;
  const Rational beta = s.value_or(Rational(0));
  const Rational d = twisted_invariants(v, beta, S).d_b;
  const Rational d1 = twisted_invariants(v1, beta, S).d_b;
  const Rational dmin = d_beta_min(beta, S);
  const Rational eps = S.epsilon();
  const bool a = d1 > 0 && d1 < d;
  const bool b = d != 0 && rep.v1_square < d1 / d * sq + 2 * d * d1 * eps / (dmin * dmin);
  const bool c = rep.v1_square >= -2 * d1 * d1 * eps / (dmin * dmin);
  rep.satisfied = a && b && c && independent;
  return rep;
}

std::vector<Wall> enumerate_walls(const MukaiVector& v, const Surface& S, const Region& reg,
                                  const EnumerationOptions& opts) {
  reg.validate();
  if (!v.is_integral()) throw Error(ErrorCode::NonIntegral, "wall enumeration needs an integral v");
  const Rational sq = square(v, S);
  if (sq <= 0)
    throw Error(ErrorCode::NonPositiveSquare, "<v^2> = " + to_string(sq) + " is not positive");
  Interval I = admissible_interval(v, reg);
  if (I.empty())
    throw Error(ErrorCode::NoAdmissibleRegion,
                "d_b(" + to_string(v) + ") is never positive on the region");
  if (S.kind() == SurfaceKind::K3) {
    if (!reg.is_ray())
      throw Error(ErrorCode::Unsupported,
                  "K3 wall enumeration needs s_min = s_max: the conditions depend on the denominator of s");
    return enumerate_k3_ray(v, S, reg, opts);
  }
  return enumerate_abelian(v, S, reg, I, opts);
}

ChamberRay chambers_on_ray(const MukaiVector& v, const Surface& S, const Rational& s,
                           const Rational& t2_lo, const Rational& t2_hi,
                           const EnumerationOptions& opts, bool cut_category_walls) {
  if (twisted_invariants(v, s, S).d_b <= 0)
    throw Error(ErrorCode::NoAdmissibleRegion, "d_b(" + to_string(v) + ") <= 0 at s = " + to_string(s));
  ChamberRay ray{s, t2_lo, t2_hi, {}, {}, {}, {}};
  std::vector<Wall> walls = enumerate_walls(v, S, Region{s, s, t2_lo, t2_hi}, opts);
  std::vector<std::pair<Rational, Wall>> hits;
  for (const Wall& w : walls) {
    auto t2 = w.t2_at(s);
    if (t2 && *t2 > t2_lo && *t2 <= t2_hi) hits.emplace_back(*t2, w);
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [t2, w] : hits) {
    ray.walls.push_back(w);
    ray.cut_points.push_back(t2);
  }
  if (cut_category_walls && S.kind() == SurfaceKind::K3) {
    for (const CategoryWall& cw : category_walls_k3(s, S, t2_hi)) {
      if (cw.t2 <= t2_lo) continue;
      ray.category_walls.push_back(cw);
      ray.cut_points.push_back(cw.t2);
    }
  }
  std::sort(ray.cut_points.begin(), ray.cut_points.end());
  ray.cut_points.erase(std::unique(ray.cut_points.begin(), ray.cut_points.end()), ray.cut_points.end());

  Rational lo = t2_lo;
  for (const Rational& c : ray.cut_points) {
    if (c > lo) ray.chambers.emplace_back(lo, c);
    lo = c;
  }
  if (t2_hi > lo) ray.chambers.emplace_back(lo, t2_hi);
  return ray;
}

Side wall_side(const MukaiVector& v, const MukaiVector& w1, const StabilityParam& p, const Surface& S) {
  PhaseKey kv = phase_key(v, p, S);
  PhaseKey kw = phase_key(w1, p, S);
  if (reduced_sigma(w1, v, p, S) == 0) return Side::OnWall;
  return kv > kw ? Side::CPlus : Side::CMinus;
}

std::vector<CategoryWall> category_walls_k3(const Rational& b, const Surface& S, const Rational& t2_max) {
  if (S.kind() != SurfaceKind::K3)
    throw Error(ErrorCode::NotK3, "walls for categories exist only on K3 surfaces");
  if (t2_max <= 0) throw Error(ErrorCode::InvalidInput, "t2_max must be positive");
  // u with <u^2> = -2 and d_b(u) = 0 has a_b(u) = 1/r_u and wall t2 = 2/(r_u^2 h2).
  // d_u = b r_u integral forces r_u = q m; integrality of
  // u.a = (2 + m^2 p^2 h2)/(2 q m) forces m | 2.
  const Integer p = b.get_num(), q = b.get_den();
  const long h2 = S.h2();
  std::vector<CategoryWall> out;
  for (long m : {1L, 2L}) {
    Integer num = 2 + m * m * p * p * h2;
    Integer den = 2 * q * m;
    if (num % den != 0) continue;
    Integer ru = q * m;
    Rational t2(Integer(2), Integer(ru * ru * h2));
    t2.canonicalize();
    if (t2 > t2_max) continue;
    out.push_back({MukaiVector{Rational(ru), Rational(p * m), Rational(Integer(num / den))}, t2});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.t2 < y.t2; });
  return out;
}

} // namespace mukai
