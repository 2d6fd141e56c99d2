#include "taxicab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace taxicab {

double default_half_width(const CassiniSpec& spec) {
  return taxicab_distance(spec.p, spec.q) + spec.r + 1.0;
}

namespace {

ScalarGrid sample_field(const CassiniSpec& spec, Point origin, double s1, double s2, int nx, int ny) {
  const double level = spec.r * spec.r;
  ScalarGrid grid;
  grid.origin = origin;
  grid.spacing1 = s1;
  grid.spacing2 = s2;
  grid.nx = nx;
  grid.ny = ny;
  grid.field = [spec, level](Point x) { return product_value(spec, x) - level; };
  grid.values.resize(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      grid.values[static_cast<std::size_t>(j) * nx + i] = grid.field(grid.node(i, j));
    }
  }

  for (int i = 0; i < nx; ++i) {
    if (grid.at(i, 0) <= 0.0 || grid.at(i, ny - 1) <= 0.0) {
      throw BoxTooSmall("grid box does not enclose the level set");
    }
  }
  for (int j = 0; j < ny; ++j) {
    if (grid.at(0, j) <= 0.0 || grid.at(nx - 1, j) <= 0.0) {
      throw BoxTooSmall("grid box does not enclose the level set");
    }
  }
  return grid;
}

}  // namespace

ScalarGrid grid_field(const CassiniSpec& spec, double halfWidth, int n) {
  if (n < 16) throw std::invalid_argument("grid needs at least 16 nodes per side");
  if (!(halfWidth > 0.0)) throw std::invalid_argument("half width must be positive");
  const Point mid{0.5 * (spec.p.x1 + spec.q.x1), 0.5 * (spec.p.x2 + spec.q.x2)};
  const double s = 2.0 * halfWidth / (n - 1);
  return sample_field(spec, {mid.x1 - halfWidth, mid.x2 - halfWidth}, s, s, n, n);
}

ScalarGrid focus_aligned_field(const CassiniSpec& spec, double targetSpacing, int maxNodes) {
  if (!(targetSpacing > 0.0)) throw std::invalid_argument("spacing must be positive");
  if (maxNodes < 16) throw std::invalid_argument("grid needs at least 16 nodes per side");

  // Every point of the filled set lies within d/2 + r of the midpoint.
  const double reach = 0.5 * taxicab_distance(spec.p, spec.q) + spec.r;
  const Point mid{0.5 * (spec.p.x1 + spec.q.x1), 0.5 * (spec.p.x2 + spec.q.x2)};

  // Room for the box plus two margin cells on each side.
  const double floorSpacing = 2.0 * reach / (maxNodes - 6);
  const double target = std::max(targetSpacing, floorSpacing);

  auto axis = [&](double a, double b, double centre, double& spacing, double& start, int& count) {
    const double gap = std::abs(a - b);
    if (gap >= floorSpacing) {
      spacing = gap / std::ceil(gap / target);
      if (spacing < floorSpacing) spacing = gap / std::floor(gap / floorSpacing);
    } else {
      spacing = target;  // only p lands on a node
    }
    const double lo = centre - reach - spacing;
    const double steps = std::ceil((a - lo) / spacing);
    start = a - steps * spacing;
    count = static_cast<int>(std::ceil((centre + reach + spacing - start) / spacing)) + 1;
  };

  double s1, s2, o1, o2;
  int nx, ny;
  axis(spec.p.x1, spec.q.x1, mid.x1, s1, o1, nx);
  axis(spec.p.x2, spec.q.x2, mid.x2, s2, o2, ny);
  return sample_field(spec, {o1, o2}, s1, s2, std::max(nx, 16), std::max(ny, 16));
}

namespace {

// Edge ids: horizontal edge (i, j)-(i+1, j) is j * (nx - 1) + i; vertical
// edge (i, j)-(i, j+1) follows after all horizontal ones.
struct EdgeIndex {
  int nx, ny;
  int horizontal(int i, int j) const { return j * (nx - 1) + i; }
  int vertical(int i, int j) const { return (nx - 1) * ny + j * nx + i; }
  int count() const { return (nx - 1) * ny + nx * (ny - 1); }
};

}  // namespace

Contour extract_contour(const ScalarGrid& grid) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  const EdgeIndex edges{nx, ny};

  double scale = 0.0;
  for (double v : grid.values) scale = std::max(scale, std::abs(v));
  const double nudge = 1e-12 * std::max(scale, 1.0);
  auto value = [&](int i, int j) {
    const double v = grid.at(i, j);
    return v == 0.0 ? nudge : v;
  };

  std::vector<Point> crossing(edges.count());
  auto interpolate = [&](int id, int i0, int j0, int i1, int j1) {
    const double a = value(i0, j0);
    const double b = value(i1, j1);
    const double t = a / (a - b);
    const Point pa = grid.node(i0, j0);
    const Point pb = grid.node(i1, j1);
    crossing[id] = pa + t * (pb - pa);
    return id;
  };

  std::vector<std::pair<int, int>> segments;
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const bool in0 = value(i, j) < 0.0;
      const bool in1 = value(i + 1, j) < 0.0;
      const bool in2 = value(i + 1, j + 1) < 0.0;
      const bool in3 = value(i, j + 1) < 0.0;
      int bottom = -1, right = -1, top = -1, left = -1;
      if (in0 != in1) bottom = interpolate(edges.horizontal(i, j), i, j, i + 1, j);
      if (in1 != in2) right = interpolate(edges.vertical(i + 1, j), i + 1, j, i + 1, j + 1);
      if (in3 != in2) top = interpolate(edges.horizontal(i, j + 1), i, j + 1, i + 1, j + 1);
      if (in0 != in3) left = interpolate(edges.vertical(i, j), i, j, i, j + 1);

      std::vector<int> hits;
      for (int e : {bottom, right, top, left}) {
        if (e >= 0) hits.push_back(e);
      }
      if (hits.size() == 2) {
        segments.emplace_back(hits[0], hits[1]);
      } else if (hits.size() == 4) {
        const Point centre = grid.node(i, j) + Point{0.5 * grid.spacing1, 0.5 * grid.spacing2};
        const double vc = grid.field ? grid.field(centre)
                                     : 0.25 * (value(i, j) + value(i + 1, j) + value(i + 1, j + 1) +
                                               value(i, j + 1));
        if ((vc < 0.0) == in0) {
          // Corners 0 and 2 join through the centre; cut off corners 1 and 3.
          segments.emplace_back(bottom, right);
          segments.emplace_back(top, left);
        } else {
          segments.emplace_back(left, bottom);
          segments.emplace_back(right, top);
        }
      }
    }
  }

  // Each crossing touches at most two segments.
  std::vector<std::array<int, 2>> incident(edges.count(), {-1, -1});
  for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
    for (int e : {segments[s].first, segments[s].second}) {
      auto& slot = incident[e];
      (slot[0] < 0 ? slot[0] : slot[1]) = s;
    }
  }

  std::vector<bool> used(segments.size(), false);
  auto next_segment = [&](int edge, int from) {
    const auto& slot = incident[edge];
    const int other = slot[0] == from ? slot[1] : slot[0];
    return (other >= 0 && !used[other]) ? other : -1;
  };
  auto far_end = [&](int s, int edge) {
    return segments[s].first == edge ? segments[s].second : segments[s].first;
  };

  // Follows unused segments from `edge`, having arrived through segment `from`.
  auto walk = [&](int edge, int from, std::vector<int>& chain) {
    int s = next_segment(edge, from);
    while (s >= 0) {
      used[s] = true;
      edge = far_end(s, edge);
      chain.push_back(edge);
      from = s;
      s = next_segment(edge, from);
    }
  };

  Contour contour;
  for (int s0 = 0; s0 < static_cast<int>(segments.size()); ++s0) {
    if (used[s0]) continue;
    used[s0] = true;
    const auto [head, tail] = segments[s0];
    std::vector<int> forward = {head, tail};
    walk(tail, s0, forward);

    Polyline line;
    if (forward.back() == head) {
      line.closed = true;
    } else {
      std::vector<int> backward;
      walk(head, s0, backward);
      forward.insert(forward.begin(), backward.rbegin(), backward.rend());
    }
    for (int e : forward) line.points.push_back(crossing[e]);
    contour.polylines.push_back(std::move(line));
  }
  return contour;
}

int component_count(const Contour& contour) {
  return static_cast<int>(std::count_if(contour.polylines.begin(), contour.polylines.end(),
                                        [](const Polyline& l) { return l.closed; }));
}

double point_segment_distance(Point x, Point a, Point b) {
  // Piecewise linear and convex in t; the minimum sits at an end or a kink.
  const Point d = b - a;
  double best = std::min(taxicab_distance(x, a), taxicab_distance(x, b));
  for (int j = 0; j < 2; ++j) {
    if (d[j] == 0.0) continue;
    const double t = (x[j] - a[j]) / d[j];
    if (t > 0.0 && t < 1.0) best = std::min(best, taxicab_distance(x, a + t * d));
  }
  return best;
}

namespace {

std::vector<std::pair<Point, Point>> segments_of(std::span<const Polyline> lines) {
  std::vector<std::pair<Point, Point>> out;
  for (const Polyline& line : lines) {
    const auto& pts = line.points;
    if (pts.size() == 1) out.emplace_back(pts[0], pts[0]);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.emplace_back(pts[i], pts[i + 1]);
    if (line.closed && pts.size() > 1 && !(pts.front() == pts.back())) {
      out.emplace_back(pts.back(), pts.front());
    }
  }
  return out;
}

double directed(const std::vector<std::pair<Point, Point>>& from,
                const std::vector<std::pair<Point, Point>>& to) {
  constexpr int kSubdivisions = 4;
  double worst = 0.0;
  for (const auto& [a, b] : from) {
    for (int k = 0; k <= kSubdivisions; ++k) {
      const Point x = a + (double(k) / kSubdivisions) * (b - a);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [c, d] : to) {
        // Cheap reject: the segment's bounding box is already too far away.
        const double gap = std::max({0.0, std::min(c.x1, d.x1) - x.x1, x.x1 - std::max(c.x1, d.x1)}) +
                           std::max({0.0, std::min(c.x2, d.x2) - x.x2, x.x2 - std::max(c.x2, d.x2)});
        if (gap >= best) continue;
        best = std::min(best, point_segment_distance(x, c, d));
      }
      worst = std::max(worst, best);
    }
  }
  return worst;
}

}  // namespace

double hausdorff(std::span<const Polyline> a, std::span<const Polyline> b) {
  const auto sa = segments_of(a);
  const auto sb = segments_of(b);
  if (sa.empty() || sb.empty()) throw std::invalid_argument("hausdorff needs nonempty polylines");
  return std::max(directed(sa, sb), directed(sb, sa));
}

double hausdorff(std::span<const Point> a, std::span<const Point> b) {
  const Polyline la{{a.begin(), a.end()}, false};
  const Polyline lb{{b.begin(), b.end()}, false};
  return hausdorff(std::span<const Polyline>(&la, 1), std::span<const Polyline>(&lb, 1));
}

std::vector<Polyline> analytic_polylines(const std::vector<ClosedCurve>& curves, int pointsPerCurve) {
  std::vector<Polyline> out;
  for (const ClosedCurve& curve : curves) {
    Polyline line{sample_curve(curve, pointsPerCurve), true};
    line.points.push_back(line.points.front());
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace taxicab
