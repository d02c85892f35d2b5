#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mukai::cli {

Json rational_json(const Rational& x) { return to_string(x); }

Json vector_json(const MukaiVector& v) { return to_string(v); }

Json surface_json(const Surface& S) {
  Json j;
  j["kind"] = S.kind() == SurfaceKind::K3 ? "k3" : "abelian";
  j["h2"] = S.h2();
  return j;
}

Json wall_json(const Wall& w, bool approx) {
  Json j;
  j["A"] = rational_json(w.coeffs.A);
  j["C"] = rational_json(w.coeffs.C);
  j["D"] = rational_json(w.coeffs.D);
  Json g;
  g["type"] = std::string(to_string(w.shape));
  if (w.shape == WallShape::Circle) {
    g["center_s"] = rational_json(w.center_s);
    g["radius_sq"] = rational_json(w.radius_sq);
  } else if (w.shape == WallShape::VerticalLine) {
    g["s"] = rational_json(w.line_s);
  }
  j["geometry"] = g;
  j["representative"] = vector_json(w.v1);
  if (approx && w.shape == WallShape::Circle) {
    j["approx"] = {{"center_s", to_double(w.center_s)}, {"radius", std::sqrt(to_double(w.radius_sq))}};
  }
  return j;
}

Json category_wall_json(const CategoryWall& cw, bool approx) {
  Json j;
  j["u"] = vector_json(cw.u);
  j["t2"] = rational_json(cw.t2);
  if (approx) j["approx"] = {{"t2", to_double(cw.t2)}};
  return j;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

} // namespace

std::string walls_svg(const MukaiVector& v, const Surface& S, const PlotFrame& frame, const std::vector<Wall>& walls,
                      const std::vector<Rational>& ray_s) {
  const double width = 1000.0;
  Rational s_lo = frame.s_min, s_hi = frame.s_max;
  if (s_lo == s_hi) s_lo -= 1, s_hi += 1;
  const double scale = width / to_double(Rational(s_hi - s_lo));
  const double height = std::max(1.0, std::ceil(std::sqrt(to_double(frame.t2_max)) * scale));
  auto x_of = [&](const Rational& s) { return to_double(Rational(s - s_lo)) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" data-s-min=\"" << to_string(s_lo)
      << "\" data-s-max=\"" << to_string(s_hi) << "\" data-t2-max=\"" << to_string(frame.t2_max) << "\">\n";
  svg << "<title>walls for v = " << to_string(v) << " (" << (S.kind() == SurfaceKind::K3 ? "k3" : "abelian")
      << ", h2 = " << S.h2() << ")</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (v.r != 0) {
    Rational s0 = v.d / v.r;
    if (s0 >= s_lo && s0 <= s_hi)
      svg << "<line class=\"degree-zero\" x1=\"" << num(x_of(s0)) << "\" y1=\"0\" x2=\"" << num(x_of(s0))
          << "\" y2=\"" << num(height) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\" data-s=\"" << to_string(s0)
          << "\"/>\n";
  }
  for (const Rational& s : ray_s)
    svg << "<line class=\"ray\" x1=\"" << num(x_of(s)) << "\" y1=\"0\" x2=\"" << num(x_of(s)) << "\" y2=\""
        << num(height) << "\" stroke=\"green\" stroke-dasharray=\"2 3\" data-s=\"" << to_string(s) << "\"/>\n";
  for (const Wall& w : walls) {
    const std::string label = escape(to_string(w.v1));
    if (w.shape == WallShape::Circle) {
      const double cx = x_of(w.center_s);
      const double r = std::sqrt(to_double(w.radius_sq)) * scale;
      svg << "<circle class=\"wall\" cx=\"" << num(cx) << "\" cy=\"" << num(height) << "\" r=\"" << num(r)
          << "\" fill=\"none\" stroke=\"#1f5fa8\" data-center-s=\"" << to_string(w.center_s)
          << "\" data-radius-sq=\"" << to_string(w.radius_sq) << "\" data-representative=\"" << label << "\"/>\n";
      svg << "<text x=\"" << num(cx) << "\" y=\"" << num(std::max(12.0, height - r - 4))
          << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
    } else if (w.shape == WallShape::VerticalLine) {
      const double x = x_of(w.line_s);
      svg << "<line class=\"wall\" x1=\"" << num(x) << "\" y1=\"0\" x2=\"" << num(x) << "\" y2=\"" << num(height)
          << "\" stroke=\"#1f5fa8\" data-s=\"" << to_string(w.line_s) << "\" data-representative=\"" << label
          << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace mukai::cli
