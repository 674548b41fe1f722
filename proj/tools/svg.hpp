#pragma once

#include <cstdint>
#include <string>

#include "cmod/pencil.hpp"

namespace cmod::tool {

struct PlotOptions {
  int lines = 8;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int sweep = 400;
};

/// SVG 1.1 picture in the chart Z = 1 of the moved coordinates, where the pencil
/// through p = [1:0:0] is the family of horizontal lines y = y0.
std::string plot_svg(const PencilSetup& s, const PlotOptions& o);

}  // namespace cmod::tool
