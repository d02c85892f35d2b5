#pragma once

#include "mukai/stability.hpp"

#include <vector>

namespace mukai {

struct Part {
  long n;
  MukaiVector v;
};

enum class Verdict {
  StablePairExists,
  ExceptionalIsotropicPairingOne,
  ExceptionalTriple,
  ExceptionalRankTwoCase,
  Inconclusive,
};

std::string_view to_string(Verdict v);

struct DecompositionReport {
  Verdict verdict = Verdict::Inconclusive;
  /// The isotropic witness, the triple, or the pair, depending on the verdict.
  std::vector<MukaiVector> witnesses;
  /// Sum of n_i v_i.
  MukaiVector total;
  Rational total_square;
  long bound = 0;
};

enum class Existence { Yes, ExceptionalWitness, Inconclusive };

std::string_view to_string(Existence e);

struct ExistenceReport {
  Existence verdict = Existence::Inconclusive;
  std::vector<MukaiVector> witnesses;
};

/// Integral primitive isotropic w with <v, w> = 1, rho(w, v) = 0 at p, d_b(w) > 0.
struct IsotropicSearch {
  std::vector<MukaiVector> found;
  /// False only when the constraint line lies in the isotropic cone and the
  /// bounded box scan had to stand in for the exact root extraction.
  bool complete = true;
};

/// Exact root extraction on the constraint line. With cap_entries the
/// result keeps only entries bounded by `bound`; `bound` also sizes the box
/// used in the degenerate fallback.
IsotropicSearch isotropic_pairing_one_search(const MukaiVector& v, const StabilityParam& p, const Surface& S,
                                             long bound, bool cap_entries);

/// Entries of the result are bounded by `bound` in absolute value.
/// Throws ZeroCharge when Z(v) = 0, BoundOverflow when a box fallback is too large.
std::vector<MukaiVector> find_isotropic_pairing_one(const MukaiVector& v, const StabilityParam& p,
                                                    const Surface& S, long bound);

/// (-2)-classes with d_b > 0 and |entries| <= bound aligned with `reference`.
/// Throws NotK3; UniquenessViolation when the reference is primitive isotropic
/// with d_b > 0 and two classes are found.
std::vector<MukaiVector> find_minus_two_aligned(const MukaiVector& reference, const StabilityParam& p,
                                                const Surface& S, long bound);

/// Throws NotAligned, InvalidInput (fewer than two parts, bad multiplicities),
/// NonIntegral, NotPrimitive.
DecompositionReport classify_decomposition(std::vector<Part> parts, const StabilityParam& p, const Surface& S,
                                           long bound);

/// Throws NonPositiveSquare for <v^2> <= 0 and ZeroDegree unless d_b(v) > 0.
ExistenceReport stable_existence(const MukaiVector& v, const StabilityParam& p, const Surface& S, long bound);

/// Three parts, all isotropic, pairwise pairing 1, multiplicities 1. No
/// alignment check. In Picard rank one this never holds: such a triple has
/// Gram signature (1,2) but the lattice has signature (2,1).
bool a2_pattern(const std::vector<Part>& parts, const Surface& S);

/// Throws NotAligned; then a2_pattern.
bool detect_a2(const std::vector<Part>& parts, const StabilityParam& p, const Surface& S);

} // namespace mukai
