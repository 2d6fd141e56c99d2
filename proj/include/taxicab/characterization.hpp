#pragma once

// Filled Cassini sets L(p, q; r) = { x : d(x, p) * d(x, q) < r^2 } and pointwise
// checks of their descriptions through the four guide Cassini sets built on
// the guide complements g+ and g-.

#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "taxicab/cassini.hpp"

namespace taxicab {

inline bool filled_contains(const CassiniSpec& spec, Point x) {
  return product_value(spec, x) < spec.r * spec.r;
}

struct GuideFamily {
  CassiniSpec lpPlus;   // (p, g+, r)
  CassiniSpec lpMinus;  // (p, g-, r)
  CassiniSpec lqPlus;   // (q, g+, r)
  CassiniSpec lqMinus;  // (q, g-, r)
};

GuideFamily guide_family(Point p, Point q, double r);

/// [L(p,g+) ∩ L(p,g-)] ∪ [L(q,g+) ∩ L(q,g-)]
bool union_of_intersections_contains(const GuideFamily& fam, Point x);

/// [L(p,g+) ∪ L(q,g+)] ∩ [L(p,g-) ∪ L(q,g-)]
bool intersection_of_unions_contains(const GuideFamily& fam, Point x);

/// first:  [L(p,g+) ∪ L(q,g-)] ∩ [L(p,g-) ∪ L(q,g+)]
/// second: [L(p,g+) ∩ L(q,g-)] ∪ [L(p,g-) ∩ L(q,g+)]
std::pair<bool, bool> cross_family_contains(Point p, Point q, double r, Point x);

enum class IdentityMode { Thm2, Thm3, Cor1Sub, Cor2Eq };

std::string_view to_string(IdentityMode mode);

struct IdentityReport {
  std::int64_t trials = 0;
  std::int64_t mismatches = 0;
  std::int64_t skippedBoundaryBand = 0;
  // Smallest relative distance |f - r^2| / max(1, r^2) to any involved
  // boundary among the compared (non-skipped) points; infinite if none.
  double worstResidual = std::numeric_limits<double>::infinity();

  std::int64_t agreements() const { return trials - mismatches - skippedBoundaryBand; }
  IdentityReport& operator+=(const IdentityReport& other);
};

/// Compares both sides of the selected identity at every sample. Samples
/// within band * max(1, r^2) of the level of any involved set are skipped.
IdentityReport verify_identity(Point p, Point q, double r, IdentityMode mode,
                               std::span<const Point> samples, double band = 1e-9);

/// n x n lattice covering [center - halfWidth, center + halfWidth]^2.
std::vector<Point> grid_samples(Point center, double halfWidth, int n);

/// count uniform samples from the same square, reproducible from seed.
std::vector<Point> random_samples(std::uint64_t seed, Point center, double halfWidth, int count);

/// Square around the midpoint that contains every filled set of the family
/// and L(g+, g-; r) with room to spare.
std::pair<Point, double> identity_box(Point p, Point q, double r);

/// Counts curve points lacking a boundary witness: a probe strictly inside L
/// and one strictly outside, on a 16-direction star at taxicab radii
/// probeRadius * {1, 1/2, 1/4}. On the flat segment E(p,q) ∩ R at r = r*
/// the point itself (f = r^2, so not in L) serves as the outside witness.
std::int64_t boundary_failures(const CassiniSpec& spec, std::span<const Point> curvePoints,
                               double probeRadius);

inline bool boundary_check(const CassiniSpec& spec, std::span<const Point> curvePoints,
                           double probeRadius) {
  return boundary_failures(spec, curvePoints, probeRadius) == 0;
}

}  // namespace taxicab
