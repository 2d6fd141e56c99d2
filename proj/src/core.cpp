#include "taxicab/core.hpp"

#include <algorithm>

namespace taxicab {

Point make_point(double x1, double x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw std::invalid_argument("point coordinates must be finite");
  }
  return {x1, x2};
}

std::string_view to_string(RegionId id) {
  switch (id) {
    case RegionId::QuadrantP: return "QuadrantP";
    case RegionId::QuadrantQ: return "QuadrantQ";
    case RegionId::QuadrantC1: return "QuadrantC1";
    case RegionId::QuadrantC2: return "QuadrantC2";
    case RegionId::StripPC1: return "StripPC1";
    case RegionId::StripPC2: return "StripPC2";
    case RegionId::StripQC1: return "StripQC1";
    case RegionId::StripQC2: return "StripQC2";
    case RegionId::CentralRectangle: return "CentralRectangle";
  }
  return "?";
}

RegionId region_at(Band column, Band row) {
  // c1 = (p1, q2) and c2 = (q1, p2) fix which corner is which.
  static constexpr RegionId table[3][3] = {
      // row:      PSide                 Middle                      QSide
      /* PSide */ {RegionId::QuadrantP, RegionId::StripPC1, RegionId::QuadrantC1},
      /* Middle */ {RegionId::StripPC2, RegionId::CentralRectangle, RegionId::StripQC1},
      /* QSide */ {RegionId::QuadrantC2, RegionId::StripQC2, RegionId::QuadrantQ},
  };
  return table[static_cast<int>(column)][static_cast<int>(row)];
}

FociFrame foci_frame(Point p, Point q) {
  FociFrame f;
  f.p = p;
  f.q = q;
  f.c1 = {p.x1, q.x2};
  f.c2 = {q.x1, p.x2};
  // gl+(p) ∩ gl-(q) and gl-(p) ∩ gl+(q)
  f.gPlus = {0.5 * ((p.x1 + q.x1) + (q.x2 - p.x2)), 0.5 * ((q.x1 - p.x1) + (p.x2 + q.x2))};
  f.gMinus = {0.5 * ((p.x1 + q.x1) + (p.x2 - q.x2)), 0.5 * ((p.x1 - q.x1) + (p.x2 + q.x2))};
  f.mid = {0.5 * (p.x1 + q.x1), 0.5 * (p.x2 + q.x2)};
  return f;
}

namespace {

// When p_j == q_j the p side is taken to be x_j >= p_j.
std::array<bool, 3> bands_containing(double pj, double qj, double xj) {
  const double s = pj >= qj ? 1.0 : -1.0;
  const double fromP = s * (xj - pj);
  const double fromQ = s * (xj - qj);
  return {fromP >= 0.0, fromQ >= 0.0 && fromP <= 0.0, fromQ <= 0.0};
}

}  // namespace

std::vector<RegionId> classify_region(const FociFrame& frame, Point x) {
  const auto cols = bands_containing(frame.p.x1, frame.q.x1, x.x1);
  const auto rows = bands_containing(frame.p.x2, frame.q.x2, x.x2);
  std::vector<RegionId> out;
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      if (cols[c] && rows[r]) out.push_back(region_at(Band(c), Band(r)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(PointGroup g) {
  switch (g) {
    case PointGroup::Identity: return "Identity";
    case PointGroup::Rot90: return "Rot90";
    case PointGroup::Rot180: return "Rot180";
    case PointGroup::Rot270: return "Rot270";
    case PointGroup::ReflectX1Axis: return "ReflectX1Axis";
    case PointGroup::ReflectX2Axis: return "ReflectX2Axis";
    case PointGroup::ReflectDiagonal: return "ReflectDiagonal";
    case PointGroup::ReflectAntiDiagonal: return "ReflectAntiDiagonal";
  }
  return "?";
}

std::array<int, 4> matrix_of(PointGroup g) {
  switch (g) {
    case PointGroup::Identity: return {1, 0, 0, 1};
    case PointGroup::Rot90: return {0, -1, 1, 0};
    case PointGroup::Rot180: return {-1, 0, 0, -1};
    case PointGroup::Rot270: return {0, 1, -1, 0};
    case PointGroup::ReflectX1Axis: return {1, 0, 0, -1};
    case PointGroup::ReflectX2Axis: return {-1, 0, 0, 1};
    case PointGroup::ReflectDiagonal: return {0, 1, 1, 0};
    case PointGroup::ReflectAntiDiagonal: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

Point apply(PointGroup g, Point x) {
  const auto m = matrix_of(g);
  // Entries are 0 or ±1 with one nonzero per row, so this is exact.
  return {m[0] * x.x1 + m[1] * x.x2, m[2] * x.x1 + m[3] * x.x2};
}

PointGroup compose(PointGroup outer, PointGroup inner) {
  const auto a = matrix_of(outer);
  const auto b = matrix_of(inner);
  const std::array<int, 4> prod = {
      a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
      a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3],
  };
  for (PointGroup g : kPointGroup) {
    if (matrix_of(g) == prod) return g;
  }
  throw std::logic_error("point group not closed under composition");
}

PointGroup inverse(PointGroup g) {
  switch (g) {
    case PointGroup::Rot90: return PointGroup::Rot270;
    case PointGroup::Rot270: return PointGroup::Rot90;
    default: return g;  // involutions
  }
}

bool orientation_reversing(PointGroup g) {
  const auto m = matrix_of(g);
  return m[0] * m[3] - m[1] * m[2] < 0;
}

bool swaps_axes(PointGroup g) { return matrix_of(g)[0] == 0; }

Isometry compose(const Isometry& outer, const Isometry& inner) {
  return {compose(outer.group, inner.group), apply(outer.group, inner.translation) + outer.translation};
}

Isometry inverse(const Isometry& iso) {
  const PointGroup inv = inverse(iso.group);
  return {inv, -apply(inv, iso.translation)};
}

Standardized standardize(Point p, Point q) {
  const Point mid{0.5 * (p.x1 + q.x1), 0.5 * (p.x2 + q.x2)};
  const Point half{0.5 * (p.x1 - q.x1), 0.5 * (p.x2 - q.x2)};
  for (PointGroup g : kPointGroup) {
    const Point a = apply(g, half);
    if (a.x1 >= a.x2 && a.x2 >= 0.0) {
      return {Isometry{g, -apply(g, mid)}, a, -a};
    }
  }
  throw std::logic_error("no standardizing isometry found");
}

}  // namespace taxicab
