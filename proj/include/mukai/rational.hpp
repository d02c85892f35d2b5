#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mukai {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign, surrounding blanks ignored).
/// The result is canonicalized to lowest terms with a positive denominator.
/// Throws mukai::Error{ErrorCode::Parse} on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms string form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

int sign(const Rational& x);
Rational abs(const Rational& x);

/// Exact square root when x is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& x);

/// floor(sqrt(x)) for x >= 0.
Integer floor_sqrt(const Rational& x);

/// Compares x against c + sign * sqrt(radicand) exactly (radicand >= 0).
/// Returns -1, 0, 1 like a three-way comparison.
int compare_with_root(const Rational& x, const Rational& c, int root_sign,
                      const Rational& radicand);

double to_double(const Rational& x);

} // namespace mukai
