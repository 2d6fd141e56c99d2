#pragma once

// Brute-force view of a Cassini set: sample f(x) - r^2 on a lattice and
// extract its zero level set with marching squares. Shares nothing with the
// analytic construction beyond the distance function.

#include <algorithm>
#include <array>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "taxicab/cassini.hpp"

namespace taxicab {

struct ScalarGrid {
  Point origin;  // node (0, 0)
  double spacing1 = 0.0;
  double spacing2 = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;  // row-major, values[j * nx + i]
  // Evaluates the sampled field anywhere; used to resolve saddle cells.
  std::function<double(Point)> field;

  Point node(int i, int j) const { return {origin.x1 + i * spacing1, origin.x2 + j * spacing2}; }
  double spacing() const { return std::max(spacing1, spacing2); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
};

struct BoxTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// d(p, q) + r + 1, which exceeds the taxicab reach sqrt(d^2 + 4 r^2) / 2 of
/// the curve from the midpoint.
double default_half_width(const CassiniSpec& spec);

/// n x n nodes of f - r^2 on the square of the given half width centered at
/// the midpoint. Throws BoxTooSmall if any edge node is <= 0.
ScalarGrid grid_field(const CassiniSpec& spec, double halfWidth, int n);
inline ScalarGrid grid_field(const CassiniSpec& spec, int n) {
  return grid_field(spec, default_half_width(spec), n);
}

/// Lattice with both foci on nodes and spacing at most `targetSpacing` per
/// axis, widened as needed to stay within maxNodes a side. Foci are inside
/// every loop, so no loop can slip between nodes however small it is.
ScalarGrid focus_aligned_field(const CassiniSpec& spec, double targetSpacing, int maxNodes = 4097);

struct Polyline {
  std::vector<Point> points;  // closed polylines repeat the first point at the end
  bool closed = false;
};

struct Contour {
  std::vector<Polyline> polylines;
};

/// Zero level set by marching squares with linear edge interpolation.
/// Negative nodes are inside; exact zeros count as positive.
Contour extract_contour(const ScalarGrid& grid);

int component_count(const Contour& contour);

/// min over t in [0, 1] of d(x, a + t (b - a)), exact.
double point_segment_distance(Point x, Point a, Point b);

/// Symmetric Hausdorff distance under the taxicab metric between two open
/// polylines, point-to-segment from every vertex and segment quarter point.
double hausdorff(std::span<const Point> a, std::span<const Point> b);

/// Same, between unions of polylines.
double hausdorff(std::span<const Polyline> a, std::span<const Polyline> b);

/// Closed analytic curves as densely sampled closed polylines (caller's frame).
std::vector<Polyline> analytic_polylines(const std::vector<ClosedCurve>& curves, int pointsPerCurve);

}  // namespace taxicab
