#include "mukai/rational.hpp"

#include "mukai/errors.hpp"

#include <cctype>

namespace mukai {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::NonIntegral: return "NonIntegral";
  case ErrorCode::Zero: return "Zero";
  case ErrorCode::ZeroCharge: return "ZeroCharge";
  case ErrorCode::NonPositiveSquare: return "NonPositiveSquare";
  case ErrorCode::NoAdmissibleRegion: return "NoAdmissibleRegion";
  case ErrorCode::BoundOverflow: return "BoundOverflow";
  case ErrorCode::NotK3: return "NotK3";
  case ErrorCode::NotIntegral: return "NotIntegral";
  case ErrorCode::NotPrimitive: return "NotPrimitive";
  case ErrorCode::ZeroDenominator: return "ZeroDenominator";
  case ErrorCode::ZeroRank: return "ZeroRank";
  case ErrorCode::ZeroDegree: return "ZeroDegree";
  case ErrorCode::OutOfDomain: return "OutOfDomain";
  case ErrorCode::Degenerate: return "Degenerate";
  case ErrorCode::NonPositive: return "NonPositive";
  case ErrorCode::NotAligned: return "NotAligned";
  case ErrorCode::UniquenessViolation: return "UniquenessViolation";
  case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_literal(s))
    throw Error(ErrorCode::Parse, "malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out = Rational(parse_integer(s));
  } else {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && den_text[0] == '-')
      throw Error(ErrorCode::Parse, "denominator must be positive in '" + std::string(text) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0)
      throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

int sign(const Rational& x) { return sgn(x); }

Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

Integer floor_sqrt(const Rational& x) {
  Integer f = floor(x);
  if (f < 0) return 0;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

int compare_with_root(const Rational& x, const Rational& c, int root_sign,
                      const Rational& radicand) {
  // x - c  vs  root_sign * sqrt(radicand)
  Rational diff = x - c;
  if (radicand == 0 || root_sign == 0) return sgn(diff);
  if (root_sign > 0) {
    if (diff <= 0) return -1;
    return sgn(Rational(diff * diff - radicand));
  }
  if (diff >= 0) return 1;
  return sgn(Rational(radicand - diff * diff));
}

double to_double(const Rational& x) { return x.get_d(); }

} // namespace mukai
