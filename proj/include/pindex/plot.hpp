#pragma once

#include "pindex/field.hpp"

#include <optional>
#include <string>

namespace pindex {

struct PlotOptions {
  int grid = 40;                 // direction ticks per side
  double extent = 2.0;           // half-width of the square window
  std::optional<Vec2> center;    // defaults to the field's singular point
  std::optional<double> circle;  // radius of the tangency overlay
  int size_px = 600;
  bool streamlines = true;
};

/// SVG 1.1 phase portrait: direction ticks, streamlines, the singular point
/// and optionally a circle with its tangencies marked. Output depends only
/// on the inputs.
std::string plot_svg(const PlaneField& field, const PlotOptions& opts = {});

}  // namespace pindex
