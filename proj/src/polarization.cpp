#include "mukai/polarization.hpp"

#include "mukai/errors.hpp"

namespace mukai {

std::pair<MukaiVector, MukaiVector> xi_pair(const MukaiVector& v, const Rational& s, const Surface& S) {
  if (v.r == 0) throw Error(ErrorCode::ZeroRank, "xi1 and xi2 need v.r != 0");
  const long h2 = S.h2();
  // K_X = 0 on both kinds. chi(e^beta, v) is read off the pairing as a_b(v);
  // this is the normalization under which xi_omega = phi xi1 + h2 xi2.
  const Rational chi = twisted_invariants(v, s, S).a_b;
  MukaiVector xi1{Rational(0), Rational(1), Rational(h2 * v.d / v.r)};
  MukaiVector xi2 = -(exp_vector(s, S) - Rational(chi / v.r) * MukaiVector(0, 0, 1));
  return {xi1, xi2};
}

AmpleClassReport ample_class(const MukaiVector& v, const StabilityParam& p, const Surface& S) {
  if (v.r == 0) throw Error(ErrorCode::ZeroRank, "xi_omega needs v.r != 0");
  TwistedInvariants tw = twisted_invariants(v, p.s, S);
  if (tw.d_b == 0)
    throw Error(ErrorCode::ZeroDegree, "d_b(" + to_string(v) + ") = 0 at s = " + to_string(p.s));
  if (p.t2 <= 0) throw Error(ErrorCode::NonPositive, "t2 must be positive");
  const long h2 = S.h2();
  AmpleClassReport rep;
  rep.phi_omega = (tw.r_b * h2 * p.t2 / 2 - tw.a_b) / tw.d_b;
  auto [xi1, xi2] = xi_pair(v, p.s, S);
  rep.xi_omega = rep.phi_omega * xi1 + Rational(h2) * xi2;
  rep.pairing_with_v = mukai_pairing(v, rep.xi_omega, S);
  return rep;
}

OmegaDomain omega_x_domain(const MukaiVector& v, const Rational& s, const Surface& S) {
  TwistedInvariants tw = twisted_invariants(v, s, S);
  if (tw.d_b <= 0)
    throw Error(ErrorCode::ZeroDegree, "omega_x needs d_b(v) > 0 at s = " + to_string(s));
  OmegaDomain dom;
  dom.x0 = std::max(Rational(2 * tw.a_b / (S.h2() * tw.d_b)), Rational(0));
  if (tw.r_b > 0) dom.upper = tw.d_b / tw.r_b;
  return dom;
}

Rational omega_x(const MukaiVector& v, const Rational& s, const Rational& x, const Surface& S) {
  OmegaDomain dom = omega_x_domain(v, s, S);
  if (x <= dom.x0 || (dom.upper && x >= *dom.upper))
    throw Error(ErrorCode::OutOfDomain, "x = " + to_string(x) + " is outside the domain of f");
  TwistedInvariants tw = twisted_invariants(v, s, S);
  const long h2 = S.h2();
  const Rational f = x * (tw.a_b - tw.d_b * h2 * x / 2) / (x * tw.r_b - tw.d_b);
  return 2 * f / h2;
}

Rational omega_sx(const MukaiVector& v, const Rational& s, const Rational& x, const Surface& S) {
  const long h2 = S.h2();
  const Rational denom = x * v.r - v.d;
  if (denom == 0) throw Error(ErrorCode::Degenerate, "x r = d_0");
  const Rational half_w2 = (x - s) * (v.a - v.d * x * h2 / 2 + s * (v.r * x - v.d) * h2 / 2) / denom;
  const Rational t2 = 2 * half_w2 / h2;
  if (t2 <= 0) throw Error(ErrorCode::NonPositive, "the formula gives t2 = " + to_string(t2));
  return t2;
}

} // namespace mukai
