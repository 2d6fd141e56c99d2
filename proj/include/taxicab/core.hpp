#pragma once

// Taxicab plane primitives: distance, sign pairs, the nine-region
// decomposition induced by two foci, and the dihedral isometry group.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace taxicab {

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Point() = default;
  constexpr Point(double a, double b) : x1(a), x2(b) {}

  constexpr double operator[](int j) const { return j == 0 ? x1 : x2; }

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Point operator-(Point a) { return {-a.x1, -a.x2}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x1, s * a.x2}; }
};

/// Throws std::invalid_argument unless both coordinates are finite.
Point make_point(double x1, double x2);

inline bool is_finite(Point a) { return std::isfinite(a.x1) && std::isfinite(a.x2); }

/// |a1 - b1| + |a2 - b2|
inline double taxicab_distance(Point a, Point b) {
  return std::abs(a.x1 - b.x1) + std::abs(a.x2 - b.x2);
}

struct SignPair {
  int s1 = 0;
  int s2 = 0;
  friend constexpr bool operator==(const SignPair&, const SignPair&) = default;
};

inline constexpr int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

/// Per-coordinate sign of x relative to p; zero on the coordinate line.
inline SignPair sigma(Point p, Point x) { return {sign_of(x.x1 - p.x1), sign_of(x.x2 - p.x2)}; }

enum class RegionId : std::uint8_t {
  QuadrantP,
  QuadrantQ,
  QuadrantC1,
  QuadrantC2,
  StripPC1,
  StripPC2,
  StripQC1,
  StripQC2,
  CentralRectangle,
};

inline constexpr std::array<RegionId, 9> kAllRegions = {
    RegionId::QuadrantP, RegionId::QuadrantQ, RegionId::QuadrantC1,
    RegionId::QuadrantC2, RegionId::StripPC1, RegionId::StripPC2,
    RegionId::StripQC1,  RegionId::StripQC2, RegionId::CentralRectangle,
};

std::string_view to_string(RegionId id);

inline constexpr bool is_quadrant(RegionId id) {
  return id == RegionId::QuadrantP || id == RegionId::QuadrantQ || id == RegionId::QuadrantC1 ||
         id == RegionId::QuadrantC2;
}

inline constexpr bool is_strip(RegionId id) {
  return id == RegionId::StripPC1 || id == RegionId::StripPC2 || id == RegionId::StripQC1 ||
         id == RegionId::StripQC2;
}

/// Where a coordinate sits relative to the band spanned by p_j and q_j.
enum class Band : std::uint8_t { PSide, Middle, QSide };

/// Region occupying the given column (first coordinate) and row (second coordinate) bands.
RegionId region_at(Band column, Band row);

struct FociFrame {
  Point p, q;
  Point c1, c2;
  Point gPlus, gMinus;
  Point mid;
};

FociFrame foci_frame(Point p, Point q);

/// Every closed region containing x, in kAllRegions order. Never empty.
std::vector<RegionId> classify_region(const FociFrame& frame, Point x);

/// Elements of D4 acting on the plane about the origin.
enum class PointGroup : std::uint8_t {
  Identity,
  Rot90,
  Rot180,
  Rot270,
  ReflectX1Axis,    // across x2 = 0
  ReflectX2Axis,    // across x1 = 0
  ReflectDiagonal,  // across x2 = x1
  ReflectAntiDiagonal,  // across x2 = -x1
};

inline constexpr std::array<PointGroup, 8> kPointGroup = {
    PointGroup::Identity,        PointGroup::Rot90,         PointGroup::Rot180,
    PointGroup::Rot270,          PointGroup::ReflectX1Axis, PointGroup::ReflectX2Axis,
    PointGroup::ReflectDiagonal, PointGroup::ReflectAntiDiagonal,
};

std::string_view to_string(PointGroup g);

/// Integer matrix {{a, b}, {c, d}} of a group element; x -> (a x1 + b x2, c x1 + d x2).
std::array<int, 4> matrix_of(PointGroup g);

Point apply(PointGroup g, Point x);
PointGroup compose(PointGroup outer, PointGroup inner);
PointGroup inverse(PointGroup g);
bool orientation_reversing(PointGroup g);
/// True when the element exchanges the roles of the two coordinate axes.
bool swaps_axes(PointGroup g);

/// x -> G(x) + translation.
struct Isometry {
  PointGroup group = PointGroup::Identity;
  Point translation{};

  static Isometry translate(Point t) { return {PointGroup::Identity, t}; }

  Point operator()(Point x) const { return apply(group, x) + translation; }

  friend bool operator==(const Isometry&, const Isometry&) = default;
};

inline Point apply_isometry(const Isometry& iso, Point x) { return iso(x); }

/// (outer ∘ inner)(x) = outer(inner(x))
Isometry compose(const Isometry& outer, const Isometry& inner);
Isometry inverse(const Isometry& iso);

struct Standardized {
  Isometry iso;  // maps the original frame into the standard one
  Point p;       // image of p: p.x1 >= p.x2 >= 0
  Point q;       // exactly -p
};

/// Moves the midpoint of p and q to the origin and p into the closed first
/// octant. The first group element in kPointGroup order that works is used.
Standardized standardize(Point p, Point q);

inline bool is_standard_pair(Point p, Point q) {
  return q == -p && p.x1 >= p.x2 && p.x2 >= 0.0;
}

/// Membership in H(a, b): d(x, a) <= d(x, b).
inline bool h_contains(Point a, Point b, Point x) {
  return taxicab_distance(x, a) <= taxicab_distance(x, b);
}

/// d(x, p) == d(x, q), evaluated exactly.
inline bool e_contains(Point p, Point q, Point x) {
  return taxicab_distance(x, p) == taxicab_distance(x, q);
}

}  // namespace taxicab
