// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include "oracles.hpp"

#include "mukai/classification.hpp"
#include "mukai/cli.hpp"
#include "mukai/errors.hpp"
#include "mukai/fourier_mukai.hpp"
#include "mukai/polarization.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace mukai;
using oracle::Q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  long failures = 0;

  void expect(bool ok) {
    if (!ok) {
      pass = false;
      ++failures;
    }
  }
};

std::vector<FMTransform> random_transforms(oracle::Rng& rng, std::size_t count) {
  std::vector<FMTransform> out;
  while (out.size() < count) {
    long h2 = rng.even_h2();
    long r1 = rng.integer(-6, 6);
    if (r1 == 0) continue;
    try {
      out.push_back(FMTransform::make(r1, rng.rational(8, 4), rng.integer(0, 1) ? Surface::k3(h2) : Surface::abelian(h2)));
    } catch (const Error&) {
    }
  }
  return out;
}

Q q(long p, long d = 1) {
  Q x(p, d);
  x.canonicalize();
  return x;
}

// 1. symmetry, bilinearity, a_b = -<v, e^b>, re-twisting
Outcome pairing_and_twist() {
  Outcome o;
  oracle::Rng rng(1001);
  for (int i = 0; i < 1000; ++i) {
    long h2 = rng.even_h2();
    auto S = rng.integer(0, 1) ? Surface::k3(h2) : Surface::abelian(h2);
    auto x = oracle::to(rng.vec(20, 6)), y = oracle::to(rng.vec(20, 6)), z = oracle::to(rng.vec(20, 6));
    Rational k = rng.rational(9, 5);
    o.expect(mukai_pairing(x, y, S) == mukai_pairing(y, x, S));
    o.expect(mukai_pairing(k * x + y, z, S) == k * mukai_pairing(x, z, S) + mukai_pairing(y, z, S));
    o.expect(mukai_pairing(x, y, S) == oracle::pair(oracle::from(x), oracle::from(y), h2));
    Rational s = rng.rational(10, 6), s2 = rng.rational(10, 6);
    auto tw = twisted_invariants(x, s, S);
    o.expect(tw.a_b == -mukai_pairing(x, exp_vector(s, S), S));
    o.expect(tw.r_b == x.r);
    o.expect(tw.d_b == x.d - x.r * s);
    auto moved = retwist(tw, s, s2, S), direct = twisted_invariants(x, s2, S);
    o.expect(moved.r_b == direct.r_b && moved.d_b == direct.d_b && moved.a_b == direct.a_b);
    o.expect(untwist(tw, s, S) == x);
  }
  o.detail = "1000 random cases, " + std::to_string(o.failures) + " violations";
  return o;
}

// 2. closed form of the reduced determinant
Outcome closed_form() {
  Outcome o;
  oracle::Rng rng(1002);
  for (int i = 0; i < 1000; ++i) {
    long h2 = rng.even_h2();
    auto S = rng.integer(0, 1) ? Surface::k3(h2) : Surface::abelian(h2);
    auto v1 = rng.vec(15, 5), v = rng.vec(15, 5);
    Q s = rng.rational(8, 5), t2 = rng.positive(8, 5);
    Q det = oracle::rho(v1, v, s, t2, h2);
    auto c = sigma_coefficients(oracle::to(v1), oracle::to(v), S);
    o.expect(c.A * (t2 + s * s) + c.C * s + c.D == det);
    o.expect(reduced_sigma(oracle::to(v1), oracle::to(v), StabilityParam::from_t2(s, t2), S) == det);
  }
  o.detail = "1000 random cases, " + std::to_string(o.failures) + " mismatches";
  return o;
}

// 3. golden wall and enumeration against the box oracle
Outcome golden_wall() {
  Outcome o;
  auto A = Surface::abelian(2);
  MukaiVector v{1, 0, -2};
  auto w = wall_locus(exp_vector(-1, A), v, A);
  o.expect(w.shape == WallShape::Circle && w.center_s == q(-3, 2) && w.radius_sq == q(1, 4));
  Region reg{-3, 0, q(1, 100), 4};
  auto lib = enumerate_walls(v, A, reg);
  auto ref = oracle::brute_force_walls(oracle::from(v), 2, reg.s_min, reg.s_max, reg.t2_min, reg.t2_max, 50);
  std::vector<oracle::WallEntry> got;
  for (const auto& x : lib) got.push_back({x.normalized(), oracle::from(x.v1)});
  std::sort(got.begin(), got.end(), oracle::entry_less);
  o.expect(got.size() == ref.size());
  for (std::size_t i = 0; i < std::min(got.size(), ref.size()); ++i) {
    o.expect(got[i].key == ref[i].key);
    o.expect(oracle::to(got[i].rep) == oracle::to(ref[i].rep));
  }
  bool listed = false;
  for (const auto& x : lib)
    if (x.shape == WallShape::Circle && x.center_s == q(-3, 2) && x.radius_sq == q(1, 4)) listed = true;
  o.expect(listed);
  o.detail = "circle -3/2, 1/4; " + std::to_string(lib.size()) + " walls vs " + std::to_string(ref.size()) +
             " from the box-50 scan";
  return o;
}

// 4. criterion vs point existence on the locus, both directions
Outcome wall_criterion() {
  Outcome o;
  auto A = Surface::abelian(2);
  long crit_only = 0, point_only = 0, agree = 0;
  std::string first;
  for (const MukaiVector& v : {MukaiVector(1, 0, -1), MukaiVector(1, 0, -2), MukaiVector(1, 0, -3)})
    for (long r = -12; r <= 12; ++r)
      for (long d = -12; d <= 12; ++d)
        for (long a = -12; a <= 12; ++a) {
          MukaiVector v1{r, d, a};
          bool crit = is_wall_vector(v1, v, A).satisfied;
          bool point = oracle::wall_point_exists(oracle::from(v1), oracle::from(v), 2);
          if (crit == point) {
            ++agree;
            continue;
          }
          (crit ? crit_only : point_only)++;
          if (first.empty()) first = "v1=" + to_string(v1) + " v=" + to_string(v);
        }
  o.expect(crit_only == 0 && point_only == 0);
  o.detail = std::to_string(agree) + " agree, " + std::to_string(crit_only) +
             " pass the criterion without an admissible locus point, " + std::to_string(point_only) +
             " the other way";
  if (!first.empty()) o.detail += "; first: " + first;
  return o;
}

// 5. d1 d2 <v1, v2> > 0 or d1 = d2 = 0 at wall points
Outcome positivity() {
  Outcome o;
  oracle::Rng rng(1005);
  int tested = 0;
  for (int i = 0; i < 40000 && tested < 500; ++i) {
    long h2 = rng.even_h2();
    auto v1 = rng.ivec(6), v2 = rng.ivec(6);
    if (oracle::pair(v1, v1, h2) < 0 || oracle::pair(v2, v2, h2) < 0) continue;
    if ((v1.r == 0 && v1.d == 0 && v1.a == 0) || (v2.r == 0 && v2.d == 0 && v2.a == 0)) continue;
    auto qd = oracle::locus(v1, v2, h2);
    Q s = rng.rational(12, 6), t2;
    if (qd.A != 0) {
      t2 = -(qd.C * s + qd.D) / qd.A - s * s;
    } else if (qd.C != 0) {
      s = -qd.D / qd.C;
      t2 = rng.positive(12, 6);
    } else {
      continue;
    }
    if (t2 <= 0) continue;
    auto z1 = oracle::charge(v1, s, t2, h2), z2 = oracle::charge(v2, s, t2, h2);
    if ((z1.re == 0 && z1.im_t == 0) || (z2.re == 0 && z2.im_t == 0)) continue;
    Q d1 = oracle::degree(v1, s), d2 = oracle::degree(v2, s);
    o.expect(d1 * d2 * oracle::pair(v1, v2, h2) > 0 || (d1 == 0 && d2 == 0));
    ++tested;
  }
  o.expect(tested == 500);
  o.detail = std::to_string(tested) + " aligned pairs, " + std::to_string(o.failures) + " violations";
  return o;
}

// 6. isometry and basis images
Outcome fm_isometry() {
  Outcome o;
  oracle::Rng rng(1006);
  auto transforms = random_transforms(rng, 40);
  for (int i = 0; i < 1000; ++i) {
    const auto& T = transforms[i % transforms.size()];
    auto x = oracle::to(rng.vec(15, 6)), y = oracle::to(rng.vec(15, 6));
    o.expect(mukai_pairing(fm_apply(T, x), fm_apply(T, y), T.target()) == mukai_pairing(x, y, T.source()));
  }
  for (std::size_t i = 0; i < 20; ++i) {
    const auto& T = transforms[i];
    Rational r1 = T.r1();
    o.expect(fm_apply(T, exp_vector(T.c(), T.source())) == MukaiVector(0, 0, -1 / r1));
    o.expect(fm_apply(T, {0, 0, 1}) == MukaiVector(-r1, 0, 0));
  }
  o.detail = "1000 isometry checks, 20 transforms, " + std::to_string(o.failures) + " failures";
  return o;
}

// 7. transformed central charge
Outcome fm_diagram() {
  Outcome o;
  oracle::Rng rng(1007);
  auto transforms = random_transforms(rng, 40);
  for (int i = 0; i < 200; ++i) {
    const auto& T = transforms[i % transforms.size()];
    long h2 = T.source().h2();
    auto v = rng.vec(12, 5);
    Q s = rng.rational(6, 4), t = rng.positive(6, 4);
    auto p = StabilityParam::from_t(s, t);
    auto tc = transform_central_charge(T, p);
    auto z = oracle::charge(v, s, t * t, h2);
    ComplexRational zv{z.re, t * z.im_t};
    o.expect(charge_in_twisted_frame(fm_apply(T, oracle::to(v)), tc.xi_coeff, tc.eta_coeff, T.target()) ==
             tc.zeta.inverse() * zv);
    Rational lambda = T.c() - s;
    o.expect(abs(Rational(T.r1())) * l_divisor(lambda, t * t, T.target()) * tc.xi_coeff * h2 == lambda);
  }
  auto T = FMTransform::make(1, 1, Surface::abelian(2));
  auto golden = transform_central_charge(T, StabilityParam::from_t(0, 1));
  bool gold = golden.zeta == ComplexRational{0, 2} && golden.xi_coeff == q(1, 2) && golden.eta_coeff == q(1, 2);
  o.expect(gold);
  o.detail = "200 random cases, " + std::to_string(o.failures) + " failures; golden zeta=2i xi=eta=H/2 " +
             (gold ? "ok" : "wrong");
  return o;
}

// 8. xi_omega
Outcome xi_omega() {
  Outcome o;
  auto A = Surface::abelian(2);
  for (long n = 1; n <= 30; ++n) {
    Rational t2 = q(n, 7);
    auto rep = ample_class({1, 0, -2}, StabilityParam::from_t2(-1, t2), A);
    o.expect(rep.phi_omega == t2 + 1);
    o.expect(rep.xi_omega == MukaiVector(-2, t2 + 3, -4));
    o.expect(mukai_pairing({1, 0, -2}, rep.xi_omega, A) == 0);
  }
  oracle::Rng rng(1008);
  int tested = 0;
  for (int i = 0; i < 4000 && tested < 200; ++i) {
    long h2 = rng.even_h2();
    auto S = rng.integer(0, 1) ? Surface::k3(h2) : Surface::abelian(h2);
    auto v = rng.ivec(6);
    if (v.r == 0) continue;
    Q s = rng.rational(6, 5), t2 = rng.positive(8, 5);
    if (oracle::degree(v, s) == 0) continue;
    auto x = rng.vec(8, 4), y = rng.vec(8, 4);
    Q ry = oracle::rho(y, v, s, t2, h2);
    if (ry == 0) continue;
    Q k = oracle::rho(x, v, s, t2, h2) / ry;
    oracle::V v2{x.r - k * y.r, x.d - k * y.d, x.a - k * y.a};
    auto rep = ample_class(oracle::to(v), StabilityParam::from_t2(s, t2), S);
    o.expect(mukai_pairing(oracle::to(v2), rep.xi_omega, S) == 0);
    ++tested;
  }
  o.expect(tested == 200);
  o.detail = "golden ray at 30 values of t2, " + std::to_string(tested) + " aligned v2, " +
             std::to_string(o.failures) + " failures";
  return o;
}

// 9. omega_x and omega_sx
Outcome omega_constructors() {
  Outcome o;
  auto A = Surface::abelian(2);
  o.expect(omega_x({1, 0, -2}, -1, q(1, 2), A) == q(3, 2));
  o.expect(oracle::rho({4, -2, 1}, {1, 0, -2}, -1, q(3, 2), 2) == 0);
  std::string t2s;
  for (const Rational& s : {q(-1), q(-3, 2), q(-2)}) {
    Rational t2 = omega_sx({1, 0, -2}, s, q(-1, 2), A);
    o.expect(t2 > 0);
    o.expect(oracle::rho({4, -2, 1}, {1, 0, -2}, s, t2, 2) == 0);
    o.expect(omega_x({1, 0, -2}, s, q(-1, 2) - s, A) == t2);
    t2s += (t2s.empty() ? "" : ", ") + to_string(t2);
  }
  o.detail = "omega_x = 3/2; omega_sx(-1/2) at s = -1, -3/2, -2 gives t2 = " + t2s + ", all aligned";
  return o;
}

// 10. K3 category walls
Outcome k3_category() {
  Outcome o;
  auto walls = category_walls_k3(0, Surface::k3(2), 4);
  o.expect(walls.size() == 1);
  if (walls.size() == 1) o.expect(walls[0].u == MukaiVector(1, 0, 1) && walls[0].t2 == 1);
  o.detail = std::to_string(walls.size()) + " wall(s)";
  for (const auto& w : walls) o.detail += "; u=" + to_string(w.u) + " t2=" + to_string(w.t2);
  return o;
}

// 11. A2 pattern and the isotropic search
Outcome classification() {
  Outcome o;
  long triples = 0, fired = 0;
  for (long h2 : {2L, 4L}) {
    auto A = Surface::abelian(h2);
    std::vector<oracle::V> iso;
    for (long r = -3; r <= 3; ++r)
      for (long d = -3; d <= 3; ++d)
        for (long a = -3; a <= 3; ++a)
          if ((r || d || a) && h2 * d * d == 2 * r * a) iso.push_back({r, d, a});
    for (std::size_t i = 0; i < iso.size(); ++i)
      for (std::size_t j = i + 1; j < iso.size(); ++j)
        for (std::size_t k = j + 1; k < iso.size(); ++k) {
          std::vector<Part> parts{{1, oracle::to(iso[i])}, {1, oracle::to(iso[j])}, {1, oracle::to(iso[k])}};
          bool expect = oracle::pair(iso[i], iso[j], h2) == 1 && oracle::pair(iso[i], iso[k], h2) == 1 &&
                        oracle::pair(iso[j], iso[k], h2) == 1;
          ++triples;
          o.expect(a2_pattern(parts, A) == expect);
          if (expect) {
            ++fired;
            o.expect(square(parts[0].v + parts[1].v + parts[2].v, A) == 6);
          }
        }
  }
  oracle::Rng rng(1011);
  int nonempty = 0;
  for (int i = 0; i < 50; ++i) {
    auto inst = oracle::search_instance(rng, i % 2 == 0);
    auto p = StabilityParam::from_t2(inst.s, inst.t2);
    auto got = find_isotropic_pairing_one(oracle::to(inst.v), p, Surface::abelian(inst.h2), 20);
    std::vector<MukaiVector> want;
    for (const auto& w : oracle::box_isotropic_pairing_one(inst.v, inst.s, inst.t2, inst.h2, 20))
      want.push_back(oracle::to(w));
    std::sort(want.begin(), want.end());
    o.expect(got == want);
    if (!want.empty()) ++nonempty;
  }
  o.detail = "pattern exact on " + std::to_string(triples) + " isotropic triples (fired on " +
             std::to_string(fired) + ": signature (2,1) admits none); search matches the box scan on 50 instances (" +
             std::to_string(nonempty) + " nonempty)";
  return o;
}

// 12. CLI determinism
Outcome cli_determinism() {
  Outcome o;
  std::vector<std::string> args = {"walls", "--surface", R"({"kind":"abelian","h2":2})", "--v", "1,0,-2",
                                   "--s-min", "-3", "--s-max", "0", "--t2-min", "1/100", "--t2-max", "4"};
  auto run = [](const std::vector<std::string>& a) {
    std::ostringstream out, err;
    int code = cli::run(a, out, err);
    return std::make_pair(code, out.str());
  };
  auto json1 = run(args), json2 = run(args);
  auto svg_args = args;
  svg_args.insert(svg_args.end(), {"--format", "svg"});
  auto svg1 = run(svg_args), svg2 = run(svg_args);
  o.expect(json1.first == 0 && svg1.first == 0);
  o.expect(json1.second == json2.second);
  o.expect(svg1.second == svg2.second);
  bool round_trip = nlohmann::ordered_json::parse(json1.second).dump() + "\n" == json1.second;
  o.expect(round_trip);
  o.detail = "JSON " + std::to_string(json1.second.size()) + " bytes, SVG " + std::to_string(svg1.second.size()) +
             " bytes, repeat identical: " + (json1.second == json2.second && svg1.second == svg2.second ? "yes" : "no") +
             ", JSON round trip: " + (round_trip ? "yes" : "no");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pairing and twist identities", pairing_and_twist},
      {"closed form of rho", closed_form},
      {"golden wall and enumeration", golden_wall},
      {"wall criterion iff point existence", wall_criterion},
      {"positivity of degrees", positivity},
      {"Fourier-Mukai isometry", fm_isometry},
      {"transformed central charge", fm_diagram},
      {"xi_omega", xi_omega},
      {"omega constructors", omega_constructors},
      {"K3 category walls", k3_category},
      {"classification", classification},
      {"CLI determinism", cli_determinism},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("threw: ") + e.what();
    }
    if (!o.pass) ++failed;
    double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
              << " [" << std::fixed << std::setprecision(1) << took << " s]" << std::endl;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
