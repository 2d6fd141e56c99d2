#pragma once

// Taxicab Cassini sets K(p, q; r) = { x : d(x, p) * d(x, q) = r^2 }.
//
// The curve is built exactly, region by region, in the standard frame
// (midpoint at the origin, q = -p, p in the closed first octant) and carried
// back to the caller's frame by the inverse standardizing isometry. In that
// frame the pieces are:
//
//   quadrants       guide segments   s1 x1 + s2 x2 = sqrt((s1 p1 + s2 p2)^2 + r^2)
//   central rect.   guide segments   x1 + x2 = ±sqrt((p1 + p2)^2 - r^2)
//   half-strips     hyperbola arcs   (x1 - s p2)^2 - (x2 - s p1)^2 = b r^2
//
// where (s1, s2) is sigma_p on the region interior, s = s1 s2 picks the
// center (g+ or g-) and b = sigma_p1 sigma_q1 picks the branch.

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "taxicab/core.hpp"

namespace taxicab {

struct CassiniSpec {
  Point p;
  Point q;
  double r = 0.0;
};

/// Validates finiteness and r >= 0; throws std::invalid_argument otherwise.
CassiniSpec make_spec(Point p, Point q, double r);

/// Thrown when pieces fail to close up; indicates a construction bug.
struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a construction is asked for an instance it cannot represent as curves.
struct DegenerateInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kOnCurveTolerance = 1e-9;

/// f(x) = d(x, p) * d(x, q)
inline double product_value(const CassiniSpec& spec, Point x) {
  return taxicab_distance(x, spec.p) * taxicab_distance(x, spec.q);
}

struct CriticalRadius {
  double rStar = 0.0;
};

inline CriticalRadius critical_radius(Point p, Point q) { return {0.5 * taxicab_distance(p, q)}; }

enum class PointClass { Inside, On, Outside };

std::string_view to_string(PointClass c);

/// On within tol * max(1, r^2) of the level; Inside/Outside beyond that band.
PointClass classify_point(const CassiniSpec& spec, Point x, double tol = kOnCurveTolerance);

enum class Topology { PointPair, TaxicabCircle, TwoCurves, PinchedEdge, PinchedVertex, OneCurve };

std::string_view to_string(Topology t);

Topology topology(const CassiniSpec& spec);

/// Closed curves build_curves emits for the topology (0 for PointPair).
int curve_count(Topology t);

enum class PieceKind { GuideSegment, HyperbolaArc };

std::string_view to_string(PieceKind k);

struct CurvePiece {
  PieceKind kind = PieceKind::GuideSegment;
  RegionId region = RegionId::QuadrantP;
  Point start;
  Point end;

  // GuideSegment: slope of the carrying guide line, +1 or -1.
  int slope = 0;

  // HyperbolaArc: the curve (x1 - c1)^2 - (x2 - c2)^2 = branch * r^2. Arcs with
  // branch -1 run along x1, arcs with branch +1 run along x2; the other
  // coordinate is solved on the side of the center the endpoints lie on.
  Point center;
  int branch = 0;
  double r = 0.0;

  /// s in [0, 1]; exact endpoints at s = 0 and s = 1.
  Point point_at(double s) const;
  CurvePiece reversed() const;
  /// Residual of the carrying line or hyperbola at x (zero on the piece).
  double implicit_residual(Point x) const;
};

/// Standard-frame pieces. The spec must satisfy is_standard_pair.
std::optional<CurvePiece> quadrant_piece(const CassiniSpec& standardSpec, RegionId quadrant);
std::vector<CurvePiece> rectangle_pieces(const CassiniSpec& standardSpec);
/// Zero, one or two arcs: a strip beside the central rectangle is crossed by
/// both loops when r < r* and the rectangle is long enough.
std::vector<CurvePiece> halfstrip_pieces(const CassiniSpec& standardSpec, RegionId strip);

struct ClosedCurve {
  CassiniSpec spec;                 // caller's frame
  Isometry toWorld;                 // standard frame -> caller's frame
  std::vector<CurvePiece> pieces;   // standard frame; counterclockwise once mapped

  Point world(Point standardPoint) const { return toWorld(standardPoint); }
};

/// Standardizes, builds every region piece, stitches them into closed
/// curves and orients each counterclockwise. Pinched instances yield two
/// curves sharing the pinch segment or vertex.
std::vector<ClosedCurve> build_curves(const CassiniSpec& spec);

/// n >= 8 points in cyclic order, in the caller's frame.
std::vector<Point> sample_curve(const ClosedCurve& curve, int n);

/// Caller-frame polyline: segment endpoints plus samplesPerArc points per
/// hyperbola arc. The closing point is not repeated.
std::vector<Point> trace(const ClosedCurve& curve, int samplesPerArc = 64);

/// Winding-number containment of x by the traced curve.
bool encloses(const ClosedCurve& curve, Point x);

}  // namespace taxicab
