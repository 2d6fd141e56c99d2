#pragma once

// SVG figures: curves, foci, coordinate lines (dotted), guide lines through
// the foci (dashed) and optionally the marching-squares contour on top.

#include <string>
#include <vector>

#include "taxicab/instances.hpp"

namespace taxicab {

struct RenderOptions {
  int samplesPerArc = 64;
  bool overlayOracle = false;
  int oracleGrid = 256;
  double widthPx = 800.0;
};

/// Deterministic: the same instances and options give the same bytes.
/// Throws std::invalid_argument on an empty batch or bad options.
std::string render_svg(const std::vector<Instance>& instances, const RenderOptions& options = {});

}  // namespace taxicab
