#pragma once

#include "mukai/classification.hpp"
#include "mukai/fourier_mukai.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

namespace mukai::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& x);
Json vector_json(const MukaiVector& v);
Json surface_json(const Surface& S);
Json wall_json(const Wall& w, bool approx);
Json category_wall_json(const CategoryWall& cw, bool approx);

struct PlotFrame {
  Rational s_min;
  Rational s_max;
  Rational t2_max;
};

/// s runs horizontally and t = sqrt(t2) vertically, on one common scale.
std::string walls_svg(const MukaiVector& v, const Surface& S, const PlotFrame& frame, const std::vector<Wall>& walls,
                      const std::vector<Rational>& ray_s);

} // namespace mukai::cli
