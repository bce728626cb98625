#pragma once

#include <optional>
#include <string>

#include "billiard/trajectory.hpp"

namespace billiard {

struct RenderOptions {
  int width_px = 600;
  bool show_grid = true;
  bool show_cells = false;
  std::optional<double> neighborhood_r;  // in unit-square units
  double stroke_width = 1.5;             // in pixels
  int margin_px = 20;

  /// Throws InvalidOptions.
  void validate() const;
};

/// SVG 1.1 document of the orbit in the unit square, (0,0) at the bottom left.
/// Output is byte-identical for identical inputs.
std::string render_orbit(const Orbit& orbit, const RenderOptions& opts = {});

/// Fixed 6 decimals with trailing zeros trimmed: 12.500000 -> "12.5", -0.0000001 -> "0".
std::string format_coordinate(double value);

}  // namespace billiard
