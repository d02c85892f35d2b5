#include "mukai/surface_lattice.hpp"

#include "mukai/errors.hpp"

#include <vector>

namespace mukai {

Surface::Surface(SurfaceKind kind, long h2) : kind_(kind), h2_(h2) {
  if (h2 <= 0 || h2 % 2 != 0)
    throw Error(ErrorCode::InvalidInput, "h2 must be a positive even integer, got " + std::to_string(h2));
}

Integer MukaiVector::content() const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), d.get_num_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_num_mpz_t());
  return g;
}

bool MukaiVector::is_primitive() const { return is_integral() && content() == 1; }

std::strong_ordering MukaiVector::operator<=>(const MukaiVector& o) const {
  if (int c = cmp(r, o.r); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(d, o.d); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = cmp(a, o.a); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const MukaiVector& v) {
  return to_string(v.r) + "," + to_string(v.d) + "," + to_string(v.a);
}

MukaiVector parse_vector(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw Error(ErrorCode::Parse, "vector literal needs exactly three entries: '" + std::string(text) + "'");
  return {parts[0], parts[1], parts[2]};
}

Rational mukai_pairing(const MukaiVector& x, const MukaiVector& y, const Surface& S) {
  return Rational(S.h2() * x.d * y.d - x.r * y.a - x.a * y.r);
}

MukaiVector sheaf_vector(long rank, long c1_mult, long chi, const Surface& S) {
  return {Rational(rank), Rational(c1_mult), Rational(chi - S.epsilon() * rank)};
}

MukaiVector exp_vector(const Rational& s, const Surface& S) {
  return {Rational(1), s, Rational(s * s * S.h2() / 2)};
}

TwistedInvariants twisted_invariants(const MukaiVector& v, const Rational& s, const Surface& S) {
  const long h2 = S.h2();
  return {v.r, Rational(v.d - v.r * s), Rational(v.a - v.d * s * h2 + v.r * s * s * h2 / 2)};
}

TwistedInvariants retwist(const TwistedInvariants& tw, const Rational& from_s,
                          const Rational& to_s, const Surface& S) {
  // d_beta = d_gamma + r (gamma - beta),
  // a_beta = a_gamma + d_gamma (gamma - beta) h2 + r/2 (beta - gamma)^2 h2.
  const Rational shift = from_s - to_s;
  const long h2 = S.h2();
  return {tw.r_b, Rational(tw.d_b + tw.r_b * shift),
          Rational(tw.a_b + tw.d_b * shift * h2 + tw.r_b * shift * shift * h2 / 2)};
}

MukaiVector untwist(const TwistedInvariants& tw, const Rational& s, const Surface& S) {
  const long h2 = S.h2();
  MukaiVector e = exp_vector(s, S);
  return {tw.r_b, Rational(tw.r_b * e.d + tw.d_b),
          Rational(tw.r_b * e.a + tw.d_b * s * h2 + tw.a_b)};
}

Rational d_beta_min(const Rational& s, const Surface&) {
  Rational t = s;
  t.canonicalize();
  return Rational(Integer(1), t.get_den());
}

namespace {

using Row = std::array<Integer, 3>;

// Row-style Hermite normal form of a full-rank two-row integer matrix.
void hermite_normalize(std::array<Row, 2>& m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < 3 && pivot_row < 2; ++col) {
    // Euclid on the rows at and below pivot_row until one nonzero remains.
    while (true) {
      std::size_t best = 2;
      for (std::size_t i = pivot_row; i < 2; ++i)
        if (m[i][col] != 0 && (best == 2 || abs(m[i][col]) < abs(m[best][col]))) best = i;
      if (best == 2) break;
      std::swap(m[pivot_row], m[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < 2; ++i) {
        if (m[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[pivot_row][col].get_mpz_t());
        for (std::size_t k = 0; k < 3; ++k) m[i][k] -= q * m[pivot_row][k];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[pivot_row][col] == 0) continue;
    if (m[pivot_row][col] < 0)
      for (auto& e : m[pivot_row]) e = -e;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[pivot_row][col].get_mpz_t());
      for (std::size_t k = 0; k < 3; ++k) m[i][k] -= q * m[pivot_row][k];
    }
    ++pivot_row;
  }
}

} // namespace

std::pair<MukaiVector, MukaiVector> perp_basis(const MukaiVector& v, const Surface& S) {
  if (!v.is_integral()) throw Error(ErrorCode::NonIntegral, "perp_basis needs an integral vector");
  if (v.is_zero()) throw Error(ErrorCode::Zero, "perp_basis of the zero vector");

  // <x, v> = c . x with c = (-a, h2 d, -r). Column operations reduce c to
  // (g, 0, 0); the last two columns of the accumulated unimodular matrix then
  // span the kernel.
  Row c{Integer(-v.a.get_num()), Integer(S.h2() * v.d.get_num()), Integer(-v.r.get_num())};
  std::array<Row, 3> cols{Row{1, 0, 0}, Row{0, 1, 0}, Row{0, 0, 1}};

  auto column_op = [&](std::size_t target, std::size_t source, const Integer& q) {
    c[target] -= q * c[source];
    for (std::size_t k = 0; k < 3; ++k) cols[target][k] -= q * cols[source][k];
  };

  while (true) {
    std::size_t best = 3;
    for (std::size_t j = 0; j < 3; ++j)
      if (c[j] != 0 && (best == 3 || abs(c[j]) < abs(c[best]))) best = j;
    if (best != 0) {
      std::swap(c[0], c[best]);
      std::swap(cols[0], cols[best]);
    }
    bool reduced = true;
    for (std::size_t j = 1; j < 3; ++j) {
      if (c[j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), c[j].get_mpz_t(), c[0].get_mpz_t());
      column_op(j, 0, q);
      if (c[j] != 0) reduced = false;
    }
    if (reduced) break;
  }

  std::array<Row, 2> basis{cols[1], cols[2]};
  hermite_normalize(basis);
  auto to_vec = [](const Row& row) {
    return MukaiVector{Rational(row[0]), Rational(row[1]), Rational(row[2])};
  };
  return {to_vec(basis[0]), to_vec(basis[1])};
}

PrimitivityReport primitivity_report(const MukaiVector& v, const Surface& S) {
  PrimitivityReport rep;
  rep.integral = v.is_integral();
  rep.primitive = v.is_primitive();
  rep.isotropic = mukai_pairing(v, v, S) == 0;
  return rep;
}

} // namespace mukai
