#include "mukai/cli.hpp"

#include "mukai/errors.hpp"
#include "mukai/polarization.hpp"
#include "render.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace mukai::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Surface parse_surface(const std::string& text) {
  std::string body = text;
  if (body.find('{') == std::string::npos) {
    std::ifstream in(text);
    if (!in) throw UsageError("cannot read surface file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("surface is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("h2") || !j["kind"].is_string() ||
      !j["h2"].is_number_integer())
    throw UsageError(R"(surface must look like {"kind":"abelian"|"k3","h2":<even positive int>})");
  const std::string kind = j["kind"].get<std::string>();
  if (kind != "abelian" && kind != "k3") throw UsageError("surface kind must be abelian or k3");
  return Surface(kind == "k3" ? SurfaceKind::K3 : SurfaceKind::Abelian, j["h2"].get<long>());
}

std::vector<Part> parse_parts(const std::string& text) {
  std::vector<Part> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Part p{1, {}};
    auto colon = item.find(':');
    std::string vec = item;
    if (colon != std::string::npos) {
      Rational n = parse_rational(item.substr(0, colon));
      if (!is_integer(n) || !n.get_num().fits_slong_p()) throw UsageError("multiplicity must be an integer");
      p.n = n.get_num().get_si();
      vec = item.substr(colon + 1);
    }
    p.v = parse_vector(vec);
    parts.push_back(p);
  }
  return parts;
}

// Appends flags from a JSON config object unless already given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    if (present) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(value.dump());
    }
  }
  return args;
}

void print_plain(const Json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_plain(value, out, prefix + key + ".");
    } else if (value.is_string()) {
      out << prefix << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << prefix << key << ": " << value.dump() << '\n';
    }
  }
}

Json error_json(std::string_view code, const std::string& detail) {
  Json j;
  j["error"] = std::string(code);
  j["detail"] = detail;
  return j;
}

Integer ceil_abs_sqrt(const Rational& x) {
  Integer f = floor_sqrt(x);
  return f * f == x ? f : Integer(f + 1);
}

class Runner {
public:
  Runner() : app_("Exact numerics of Bridgeland stability on Picard-rank-one surfaces", "mukai") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--surface", surface_text_, R"(Surface JSON {"kind":"abelian"|"k3","h2":2} or a path to one)");
    app_.add_option("--format", format_, "json | svg | plain")->check(CLI::IsMember({"json", "svg", "plain"}));
    app_.add_flag("--approx", approx_, "Add decimal annotations");
    app_.add_option("--config", config_, "JSON file of default flag values");

    auto* pair = sub("pair", "Mukai pairing; with only --x, lattice data of x");
    req(pair, "x", "Vector r,d,a");
    opt(pair, "y", "Vector r,d,a");

    auto* twist = sub("twist", "beta-twisted invariants at beta = sH");
    req(twist, "v", "Vector r,d,a");
    req(twist, "s", "Twist s");

    auto* charge = sub("charge", "Central charge Z at (s, t)");
    req(charge, "v", "Vector r,d,a");
    req(charge, "s", "s");
    point(charge);

    for (const char* name : {"walls", "plot"}) {
      auto* walls = sub(name, std::string(name) == "walls" ? "Enumerate walls for v over a region"
                                                         : "SVG diagram of the walls for v over a region");
      req(walls, "v", "Vector r,d,a");
      req(walls, "s-min", "Region s minimum");
      req(walls, "s-max", "Region s maximum");
      req(walls, "t2-min", "Region t^2 lower end (excluded)");
      req(walls, "t2-max", "Region t^2 upper end (included)");
      opt(walls, "cap", "Candidate cap for the bounded search");
      opt(walls, "ray", "Mark the vertical ray at this s (plot)");
    }

    auto* chambers = sub("chambers", "Cut points and chambers on the ray beta = sH");
    req(chambers, "v", "Vector r,d,a");
    req(chambers, "s", "s");
    req(chambers, "t2-min", "t^2 lower end (excluded)");
    req(chambers, "t2-max", "t^2 upper end (included)");
    opt(chambers, "cap", "Candidate cap for the bounded search");
    chambers->add_flag("--cut-category-walls", cut_category_walls_, "Also cut at K3 walls for categories");

    auto* side = sub("side", "Side C+ / C- / on-wall of w1 for v");
    req(side, "v", "Vector r,d,a");
    req(side, "w1", "Vector r,d,a");
    req(side, "s", "s");
    point(side);

    auto* fm = sub("fm", "Lattice action of the transform for w1 = r1 e^{cH}");
    req(fm, "r1", "Nonzero integer r1");
    req(fm, "c", "gamma = cH");
    opt(fm, "v", "Vector to transform");
    fm->add_flag("--inverse", inverse_, "Treat --v as an image and pull it back");

    auto* fmc = sub("fm-charge", "Transformed central charge zeta, xi, eta");
    req(fmc, "r1", "Nonzero integer r1");
    req(fmc, "c", "gamma = cH");
    req(fmc, "s", "s");
    req(fmc, "t", "t (exact)");

    auto* ample = sub("ample", "phi_omega, xi_omega and the pair xi1, xi2");
    req(ample, "v", "Vector r,d,a");
    req(ample, "s", "s");
    point(ample);

    auto* omega = sub("omega-x", "t^2 aligning r1 e^{(s+x)H} (or r1 e^{xH} with --absolute) with v");
    req(omega, "v", "Vector r,d,a");
    req(omega, "s", "s");
    req(omega, "x", "x");
    omega->add_flag("--absolute", absolute_, "x is an absolute twist (base point 0)");

    auto* classify = sub("classify", "Decomposition verdicts, stable existence and aligned special classes");
    opt(classify, "parts", "Decomposition 'n:r,d,a;n:r,d,a'");
    opt(classify, "v", "Vector for the stable-existence check");
    opt(classify, "minus-two-ref", "Reference vector for the aligned (-2)-class search (K3)");
    req(classify, "s", "s");
    point(classify);
    opt(classify, "bound", "Entry bound for bounded searches (default 20)");

    auto* k3 = sub("k3-category-walls", "Walls for categories on a K3 at beta = bH");
    req(k3, "b", "b");
    req(k3, "t2-max", "Largest t^2");
  }

  int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
    try {
      std::vector<std::string> args = apply_config(raw);
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app_.parse(reversed);
      CLI::App* cmd = app_.get_subcommands().front();
      cmd_ = cmd;
      dispatch(cmd->get_name(), out);
      return Success;
    } catch (const CLI::CallForHelp&) {
      out << app_.help();
      return Success;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return Success;
    } catch (const CLI::ParseError& e) {
      err << error_json("Usage", e.what()).dump() << '\n';
      return Usage;
    } catch (const UsageError& e) {
      err << error_json("Usage", e.what()).dump() << '\n';
      return Usage;
    } catch (const Error& e) {
      err << error_json(error_code_name(e.code()), e.what()).dump() << '\n';
      if (e.code() == ErrorCode::Parse) return Usage;
      if (e.code() == ErrorCode::BoundOverflow) return BoundExhausted;
      return Domain;
    }
  }

private:
  CLI::App* sub(const std::string& name, const std::string& help) { return app_.add_subcommand(name, help); }

  void opt(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values_[name], help);
  }
  void req(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, values_[name], help)->required();
  }
  void point(CLI::App* app) {
    auto* t = app->add_option("--t", values_["t"], "t > 0 (exact)");
    auto* t2 = app->add_option("--t2", values_["t2"], "t^2 > 0");
    t->excludes(t2);
  }

  bool has(const std::string& name) const { return cmd_->count("--" + name) > 0; }
  const std::string& raw(const std::string& name) { return values_[name]; }
  Rational rat(const std::string& name) { return parse_rational(raw(name)); }
  MukaiVector vec(const std::string& name) { return parse_vector(raw(name)); }

  long integer(const std::string& name) {
    Rational x = rat(name);
    if (!is_integer(x) || !x.get_num().fits_slong_p()) throw UsageError("--" + name + " must be an integer");
    return x.get_num().get_si();
  }

  Surface surface(SurfaceKind fallback = SurfaceKind::Abelian) {
    if (surface_text_.empty()) return Surface(fallback, 2);
    return parse_surface(surface_text_);
  }

  StabilityParam param() {
    if (has("t")) return StabilityParam::from_t(rat("s"), rat("t"));
    if (has("t2")) return StabilityParam::from_t2(rat("s"), rat("t2"));
    throw UsageError("give --t or --t2");
  }

  EnumerationOptions enum_options() {
    EnumerationOptions o;
    if (has("cap")) {
      long cap = integer("cap");
      if (cap <= 0) throw UsageError("--cap must be positive");
      o.candidate_cap = static_cast<std::uint64_t>(cap);
    }
    return o;
  }

  void emit(const Json& j, std::ostream& out) {
    if (format_ == "plain") print_plain(j, out);
    else out << j.dump() << '\n';
  }

  void dispatch(const std::string& name, std::ostream& out) {
    if (name != "walls" && name != "chambers" && name != "plot" && format_ == "svg")
      throw UsageError("svg output exists only for walls, chambers and plot");
    if (name == "pair") return cmd_pair(out);
    if (name == "twist") return cmd_twist(out);
    if (name == "charge") return cmd_charge(out);
    if (name == "walls" || name == "plot") return cmd_walls(out, name == "plot");
    if (name == "chambers") return cmd_chambers(out);
    if (name == "side") return cmd_side(out);
    if (name == "fm") return cmd_fm(out);
    if (name == "fm-charge") return cmd_fm_charge(out);
    if (name == "ample") return cmd_ample(out);
    if (name == "omega-x") return cmd_omega(out);
    if (name == "classify") return cmd_classify(out);
    if (name == "k3-category-walls") return cmd_k3(out);
    throw UsageError("unknown command " + name);
  }

  void cmd_pair(std::ostream& out) {
    const Surface S = surface();
    const MukaiVector x = vec("x");
    Json j;
    if (has("y")) {
      j["pairing"] = rational_json(mukai_pairing(x, vec("y"), S));
    } else {
      PrimitivityReport rep = primitivity_report(x, S);
      j["square"] = rational_json(square(x, S));
      j["integral"] = rep.integral;
      j["primitive"] = rep.primitive;
      j["isotropic"] = rep.isotropic;
      if (rep.integral && !x.is_zero()) {
        auto [b1, b2] = perp_basis(x, S);
        j["perp_basis"] = Json::array({vector_json(b1), vector_json(b2)});
      }
    }
    emit(j, out);
  }

  void cmd_twist(std::ostream& out) {
    const Surface S = surface();
    const Rational s = rat("s");
    TwistedInvariants tw = twisted_invariants(vec("v"), s, S);
    Json j;
    j["r_b"] = rational_json(tw.r_b);
    j["d_b"] = rational_json(tw.d_b);
    j["a_b"] = rational_json(tw.a_b);
    j["d_beta_min"] = rational_json(d_beta_min(s, S));
    emit(j, out);
  }

  void cmd_charge(std::ostream& out) {
    const Surface S = surface();
    const StabilityParam p = param();
    const MukaiVector v = vec("v");
    CentralCharge z = central_charge(v, p, S);
    Json j;
    j["re"] = rational_json(z.re);
    if (p.t) j["im"] = rational_json(Rational(z.im_over_t * *p.t));
    else j["im_over_t"] = rational_json(z.im_over_t);
    if (approx_) {
      Json a;
      a["re"] = to_double(z.re);
      a["im"] = to_double(z.im_over_t) * std::sqrt(to_double(p.t2));
      a["phase"] = z.is_zero() ? Json(nullptr) : Json(phase_key(v, p, S).approx(p.t2));
      j["approx"] = a;
    }
    emit(j, out);
  }

  void cmd_walls(std::ostream& out, bool plot) {
    const Surface S = surface();
    const MukaiVector v = vec("v");
    const Region reg{rat("s-min"), rat("s-max"), rat("t2-min"), rat("t2-max")};
    std::vector<Wall> walls = enumerate_walls(v, S, reg, enum_options());
    if (plot || format_ == "svg") {
      std::vector<Rational> rays;
      if (has("ray")) rays.push_back(rat("ray"));
      out << walls_svg(v, S, PlotFrame{reg.s_min, reg.s_max, reg.t2_max}, walls, rays);
      return;
    }
    Json j;
    j["surface"] = surface_json(S);
    j["v"] = vector_json(v);
    j["region"] = {{"s_min", rational_json(reg.s_min)},
                   {"s_max", rational_json(reg.s_max)},
                   {"t2_min", rational_json(reg.t2_min)},
                   {"t2_max", rational_json(reg.t2_max)}};
    if (S.kind() == SurfaceKind::K3) j["numeric_conditions_only"] = true;
    Json list = Json::array();
    for (const Wall& w : walls) list.push_back(wall_json(w, approx_));
    j["walls"] = list;
    emit(j, out);
  }

  void cmd_chambers(std::ostream& out) {
    const Surface S = surface();
    const MukaiVector v = vec("v");
    const Rational s = rat("s"), lo = rat("t2-min"), hi = rat("t2-max");
    Region(Region{s, s, lo, hi}).validate();
    ChamberRay ray = chambers_on_ray(v, S, s, lo, hi, enum_options(), cut_category_walls_);
    if (format_ == "svg") {
      Rational s_lo = s - 1, s_hi = s + 1;
      for (const Wall& w : ray.walls) {
        if (w.shape != WallShape::Circle) continue;
        Integer r = ceil_abs_sqrt(w.radius_sq);
        s_lo = std::min(s_lo, Rational(floor(Rational(w.center_s - r))));
        s_hi = std::max(s_hi, Rational(ceil(Rational(w.center_s + r))));
      }
      out << walls_svg(v, S, PlotFrame{s_lo, s_hi, hi}, ray.walls, {s});
      return;
    }
    Json j;
    j["surface"] = surface_json(S);
    j["v"] = vector_json(v);
    j["s"] = rational_json(s);
    j["t2_range"] = Json::array({rational_json(lo), rational_json(hi)});
    Json cuts = Json::array();
    for (const Rational& c : ray.cut_points) cuts.push_back(rational_json(c));
    j["cut_points"] = cuts;
    Json chambers = Json::array();
    for (const auto& [a, b] : ray.chambers) chambers.push_back(Json::array({rational_json(a), rational_json(b)}));
    j["chambers"] = chambers;
    Json walls = Json::array();
    for (const Wall& w : ray.walls) {
      Json e;
      e["t2"] = rational_json(*w.t2_at(s));
      e["wall"] = wall_json(w, approx_);
      walls.push_back(e);
    }
    j["walls"] = walls;
    if (cut_category_walls_) {
      Json cws = Json::array();
      for (const CategoryWall& cw : ray.category_walls) cws.push_back(category_wall_json(cw, approx_));
      j["category_walls"] = cws;
    }
    emit(j, out);
  }

  void cmd_side(std::ostream& out) {
    const Surface S = surface();
    const StabilityParam p = param();
    const MukaiVector v = vec("v"), w1 = vec("w1");
    Json j;
    j["side"] = std::string(to_string(wall_side(v, w1, p, S)));
    j["rho"] = rational_json(reduced_sigma(w1, v, p, S));
    emit(j, out);
  }

  void cmd_fm(std::ostream& out) {
    const Surface S = surface();
    const FMTransform T = make_transform(integer("r1"), rat("c"), S);
    Json j;
    j["w1"] = vector_json(T.w1());
    j["pairing_divisibility"] = to_string(T.pairing_divisibility());
    if (has("v")) {
      const MukaiVector v = vec("v");
      if (inverse_) {
        j["image"] = vector_json(v);
        j["preimage"] = vector_json(fm_inverse(T, v));
      } else {
        const MukaiVector img = fm_apply(T, v);
        j["v"] = vector_json(v);
        j["image"] = vector_json(img);
        j["dual_image"] = vector_json(dual(img));
        j["square"] = rational_json(square(v, S));
        j["image_square"] = rational_json(square(img, T.target()));
      }
    }
    emit(j, out);
  }

  void cmd_fm_charge(std::ostream& out) {
    const Surface S = surface();
    const FMTransform T = make_transform(integer("r1"), rat("c"), S);
    const StabilityParam p = StabilityParam::from_t(rat("s"), rat("t"));
    TransformedCharge tc = transform_central_charge(T, p);
    const Rational lambda = T.c() - p.s;
    Json j;
    j["zeta"] = {{"re", rational_json(tc.zeta.re)}, {"im", rational_json(tc.zeta.im)}};
    j["xi"] = rational_json(tc.xi_coeff);
    j["eta"] = rational_json(tc.eta_coeff);
    j["lambda"] = rational_json(lambda);
    j["l_divisor"] = rational_json(l_divisor(lambda, p.t2, S));
    emit(j, out);
  }

  void cmd_ample(std::ostream& out) {
    const Surface S = surface();
    const StabilityParam p = param();
    const MukaiVector v = vec("v");
    AmpleClassReport rep = ample_class(v, p, S);
    auto [xi1, xi2] = xi_pair(v, p.s, S);
    Json j;
    j["phi_omega"] = rational_json(rep.phi_omega);
    j["xi_omega"] = vector_json(rep.xi_omega);
    j["pairing_with_v"] = rational_json(rep.pairing_with_v);
    j["xi1"] = vector_json(xi1);
    j["xi2"] = vector_json(xi2);
    emit(j, out);
  }

  void cmd_omega(std::ostream& out) {
    const Surface S = surface();
    const MukaiVector v = vec("v");
    const Rational s = rat("s"), x = rat("x");
    const Rational t2 = absolute_ ? omega_sx(v, s, x, S) : omega_x(v, s, x, S);
    Json j;
    j["t2"] = rational_json(t2);
    if (approx_) j["approx"] = {{"t", std::sqrt(to_double(t2))}};
    emit(j, out);
  }

  void cmd_classify(std::ostream& out) {
    const Surface S = surface();
    const StabilityParam p = param();
    const long bound = has("bound") ? integer("bound") : 20;
    const int modes = has("parts") + has("v") + has("minus-two-ref");
    if (modes != 1) throw UsageError("give exactly one of --parts, --v, --minus-two-ref");
    Json j;
    if (has("parts")) {
      std::vector<Part> parts = parse_parts(raw("parts"));
      DecompositionReport rep = classify_decomposition(parts, p, S, bound);
      j["verdict"] = std::string(to_string(rep.verdict));
      Json w = Json::array();
      for (const auto& x : rep.witnesses) w.push_back(vector_json(x));
      j["witnesses"] = w;
      j["total"] = vector_json(rep.total);
      j["total_square"] = rational_json(rep.total_square);
      j["a2"] = detect_a2(parts, p, S);
    } else if (has("v")) {
      const MukaiVector v = vec("v");
      ExistenceReport rep = stable_existence(v, p, S, bound);
      j["stable_existence"] = std::string(to_string(rep.verdict));
      Json w = Json::array();
      for (const auto& x : rep.witnesses) w.push_back(vector_json(x));
      j["witnesses"] = w;
      Json boxed = Json::array();
      for (const auto& x : find_isotropic_pairing_one(v, p, S, bound)) boxed.push_back(vector_json(x));
      j["isotropic_pairing_one"] = boxed;
      j["bound"] = bound;
    } else {
      Json found = Json::array();
      for (const auto& x : find_minus_two_aligned(vec("minus-two-ref"), p, S, bound)) found.push_back(vector_json(x));
      j["minus_two_classes"] = found;
      j["bound"] = bound;
    }
    emit(j, out);
  }

  void cmd_k3(std::ostream& out) {
    const Surface S = surface(SurfaceKind::K3);
    Json list = Json::array();
    for (const CategoryWall& cw : category_walls_k3(rat("b"), S, rat("t2-max")))
      list.push_back(category_wall_json(cw, approx_));
    Json j;
    j["surface"] = surface_json(S);
    j["b"] = rational_json(rat("b"));
    j["walls"] = list;
    emit(j, out);
  }

  CLI::App app_;
  CLI::App* cmd_ = nullptr;
  std::map<std::string, std::string> values_;
  std::string surface_text_;
  std::string format_ = "json";
  std::string config_;
  bool approx_ = false;
  bool cut_category_walls_ = false;
  bool inverse_ = false;
  bool absolute_ = false;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner;
  return runner.run(args, out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace mukai::cli
