#include "mukai/classification.hpp"

#include "mukai/errors.hpp"

#include <algorithm>

namespace mukai {

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::StablePairExists: return "StablePairExists";
  case Verdict::ExceptionalIsotropicPairingOne: return "ExceptionalIsotropicPairingOne";
  case Verdict::ExceptionalTriple: return "ExceptionalTriple";
  case Verdict::ExceptionalRankTwoCase: return "ExceptionalRankTwoCase";
  case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(Existence e) {
  switch (e) {
  case Existence::Yes: return "Yes";
  case Existence::ExceptionalWitness: return "ExceptionalWitness";
  case Existence::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

using Vec3 = std::array<Rational, 3>;

Rational dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

MukaiVector as_vector(const Vec3& x) { return {x[0], x[1], x[2]}; }

bool accept_isotropic(const MukaiVector& w, const MukaiVector& v, const StabilityParam& p, const Surface& S,
                      long bound, bool cap_entries) {
  if (!w.is_integral() || !w.is_primitive()) return false;
  if (cap_entries && (abs(w.r) > bound || abs(w.d) > bound || abs(w.a) > bound)) return false;
  return square(w, S) == 0 && mukai_pairing(v, w, S) == 1 && reduced_sigma(w, v, p, S) == 0 &&
         twisted_invariants(w, p.s, S).d_b > 0;
}

void check_box(long bound) {
  const double side = 2.0 * bound + 1;
  if (bound < 0 || side * side * side > 1e6)
    throw Error(ErrorCode::BoundOverflow, "box of half-width " + std::to_string(bound) + " is too large to scan");
}

bool same_phase(const MukaiVector& x, const MukaiVector& y, const StabilityParam& p, const Surface& S) {
  return reduced_sigma(x, y, p, S) == 0 && phase_key(x, p, S) == phase_key(y, p, S);
}

void require_aligned(const std::vector<Part>& parts, const StabilityParam& p, const Surface& S) {
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!same_phase(parts[i].v, parts[j].v, p, S))
        throw Error(ErrorCode::NotAligned, to_string(parts[i].v) + " and " + to_string(parts[j].v) +
                                               " do not share a phase");
}

} // namespace

bool a2_pattern(const std::vector<Part>& parts, const Surface& S) {
  if (parts.size() != 3) return false;
  for (const Part& pt : parts)
    if (pt.n != 1 || square(pt.v, S) != 0) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (mukai_pairing(parts[i].v, parts[j].v, S) != 1) return false;
  return true;
}

// <w, v> = L1 . w and rho(w, v) = L2 . w are linear in w, so the candidates
// lie on the line w0 + k n with n = L1 x L2. Isotropy is then a quadratic in k
// whose rational roots are read off an exact square root of the discriminant.
IsotropicSearch isotropic_pairing_one_search(const MukaiVector& v, const StabilityParam& p, const Surface& S,
                                             long bound, bool cap_entries) {
  phase_key(v, p, S); // ZeroCharge guard
  const long h2 = S.h2();
  const Rational u = p.t2 + p.s * p.s;
  const Vec3 L1{-v.a, Rational(h2 * v.d), -v.r};
  const Vec3 L2{Rational(Rational(h2) / 2 * v.d * u - v.a * p.s), Rational(-Rational(h2) / 2 * v.r * u + v.a),
                Rational(v.r * p.s - v.d)};
  IsotropicSearch out;
  const Vec3 n = cross(L1, L2);
  const Rational G = dot(n, n);
  if (G == 0) return out; // parallel planes: L1.w = 1 and L2.w = 0 are inconsistent
  const Rational alpha = dot(L2, L2) / G, beta = -dot(L1, L2) / G;
  const Vec3 w0{alpha * L1[0] + beta * L2[0], alpha * L1[1] + beta * L2[1], alpha * L1[2] + beta * L2[2]};
  const MukaiVector W0 = as_vector(w0), N = as_vector(n);

  const Rational q2 = square(N, S), q1 = 2 * mukai_pairing(W0, N, S), q0 = square(W0, S);
  std::vector<Rational> roots;
  if (q2 == 0 && q1 == 0) {
    if (q0 != 0) return out;
    // The whole line is isotropic; a nondegenerate ternary form admits no such
    // line, but keep an honest fallback instead of asserting.
    out.complete = false;
    check_box(bound);
    for (long r = -bound; r <= bound; ++r)
      for (long d = -bound; d <= bound; ++d)
        for (long a = -bound; a <= bound; ++a) {
          MukaiVector w(r, d, a);
          if (accept_isotropic(w, v, p, S, bound, true)) out.found.push_back(w);
        }
    return out;
  }
  if (q2 == 0) {
    roots.push_back(-q0 / q1);
  } else {
    const Rational disc = q1 * q1 - 4 * q2 * q0;
    if (auto sq = exact_sqrt(disc)) {
      roots.push_back((-q1 + *sq) / (2 * q2));
      roots.push_back((-q1 - *sq) / (2 * q2));
    }
  }
  for (const Rational& k : roots) {
    MukaiVector w = W0 + k * N;
    if (accept_isotropic(w, v, p, S, bound, cap_entries)) out.found.push_back(w);
  }
  std::sort(out.found.begin(), out.found.end());
  out.found.erase(std::unique(out.found.begin(), out.found.end()), out.found.end());
  return out;
}

std::vector<MukaiVector> find_isotropic_pairing_one(const MukaiVector& v, const StabilityParam& p,
                                                    const Surface& S, long bound) {
  if (!v.is_integral()) throw Error(ErrorCode::NonIntegral, "v must be integral");
  if (bound < 0) throw Error(ErrorCode::InvalidInput, "bound must be non-negative");
  return isotropic_pairing_one_search(v, p, S, bound, true).found;
}

std::vector<MukaiVector> find_minus_two_aligned(const MukaiVector& reference, const StabilityParam& p,
                                                const Surface& S, long bound) {
  if (S.kind() != SurfaceKind::K3) throw Error(ErrorCode::NotK3, "(-2)-classes need a K3 surface");
  if (bound < 0) throw Error(ErrorCode::InvalidInput, "bound must be non-negative");
  phase_key(reference, p, S);
  const long h2 = S.h2();
  std::vector<MukaiVector> out;
  // <v^2> = h2 d^2 - 2 r a = -2 fixes a = (h2 d^2 + 2)/(2 r); r = 0 is impossible.
  for (long r = -bound; r <= bound; ++r) {
    if (r == 0) continue;
    for (long d = -bound; d <= bound; ++d) {
      const long num = h2 * d * d + 2;
      if (num % (2 * r) != 0) continue;
      const long a = num / (2 * r);
      if (a < -bound || a > bound) continue;
      MukaiVector v(r, d, a);
      if (twisted_invariants(v, p.s, S).d_b <= 0) continue;
      if (same_phase(v, reference, p, S)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  const bool lemma_applies = reference.is_primitive() && square(reference, S) == 0 &&
                             twisted_invariants(reference, p.s, S).d_b > 0;
  if (lemma_applies && out.size() > 1)
    throw Error(ErrorCode::UniquenessViolation,
                "found " + std::to_string(out.size()) + " aligned (-2)-classes for " + to_string(reference));
  return out;
}

DecompositionReport classify_decomposition(std::vector<Part> parts, const StabilityParam& p, const Surface& S,
                                           long bound) {
  if (parts.size() < 2)
    throw Error(ErrorCode::InvalidInput, "a decomposition needs at least two distinct parts");
  for (const Part& pt : parts) {
    if (pt.n < 1) throw Error(ErrorCode::InvalidInput, "multiplicities must be positive");
    if (!pt.v.is_integral()) throw Error(ErrorCode::NonIntegral, to_string(pt.v) + " is not integral");
    if (!pt.v.is_primitive()) throw Error(ErrorCode::NotPrimitive, to_string(pt.v) + " is not primitive");
  }
  std::sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) {
    return x.v != y.v ? x.v < y.v : x.n < y.n;
  });
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i].v == parts[i - 1].v) throw Error(ErrorCode::InvalidInput, "parts must be pairwise distinct");
  require_aligned(parts, p, S);

  DecompositionReport rep;
  rep.bound = bound;
  rep.total = MukaiVector(0, 0, 0);
  for (const Part& pt : parts) rep.total = rep.total + Rational(pt.n) * pt.v;
  rep.total_square = square(rep.total, S);

  const std::size_t s = parts.size();
  if (s >= 4) {
    rep.verdict = Verdict::StablePairExists;
  } else if (s == 3) {
    if (a2_pattern(parts, S)) {
      rep.verdict = Verdict::ExceptionalTriple;
      for (const Part& pt : parts) rep.witnesses.push_back(pt.v);
    } else {
      rep.verdict = Verdict::StablePairExists;
    }
  } else {
    const MukaiVector& v1 = parts[0].v;
    const MukaiVector& v2 = parts[1].v;
    if (parts[0].n == 1 && parts[1].n == 1 && square(v1, S) == 0 && square(v2, S) == 0 &&
        mukai_pairing(v1, v2, S) == 1) {
      rep.verdict = Verdict::ExceptionalRankTwoCase;
      rep.witnesses = {v1, v2};
    } else {
      IsotropicSearch search = isotropic_pairing_one_search(rep.total, p, S, bound, false);
      if (!search.found.empty()) {
        rep.verdict = Verdict::ExceptionalIsotropicPairingOne;
        rep.witnesses = search.found;
      } else {
        rep.verdict = search.complete ? Verdict::StablePairExists : Verdict::Inconclusive;
      }
    }
  }
  return rep;
}

ExistenceReport stable_existence(const MukaiVector& v, const StabilityParam& p, const Surface& S, long bound) {
  if (!v.is_integral()) throw Error(ErrorCode::NonIntegral, "v must be integral");
  const Rational sq = square(v, S);
  if (sq <= 0) throw Error(ErrorCode::NonPositiveSquare, "<v^2> = " + to_string(sq) + " is not positive");
  if (twisted_invariants(v, p.s, S).d_b <= 0)
    throw Error(ErrorCode::ZeroDegree, "stable existence needs d_b(v) > 0");
  IsotropicSearch search = isotropic_pairing_one_search(v, p, S, bound, false);
  ExistenceReport rep;
  rep.witnesses = search.found;
  if (!search.found.empty())
    rep.verdict = Existence::ExceptionalWitness;
  else
    rep.verdict = search.complete ? Existence::Yes : Existence::Inconclusive;
  return rep;
}

bool detect_a2(const std::vector<Part>& parts, const StabilityParam& p, const Surface& S) {
  require_aligned(parts, p, S);
  return a2_pattern(parts, S);
}

} // namespace mukai
