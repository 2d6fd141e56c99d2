#include "taxicab/characterization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace taxicab {

GuideFamily guide_family(Point p, Point q, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("r must be >= 0");
  const FociFrame f = foci_frame(p, q);
  return {{p, f.gPlus, r}, {p, f.gMinus, r}, {q, f.gPlus, r}, {q, f.gMinus, r}};
}

bool union_of_intersections_contains(const GuideFamily& fam, Point x) {
  return (filled_contains(fam.lpPlus, x) && filled_contains(fam.lpMinus, x)) ||
         (filled_contains(fam.lqPlus, x) && filled_contains(fam.lqMinus, x));
}

bool intersection_of_unions_contains(const GuideFamily& fam, Point x) {
  return (filled_contains(fam.lpPlus, x) || filled_contains(fam.lqPlus, x)) &&
         (filled_contains(fam.lpMinus, x) || filled_contains(fam.lqMinus, x));
}

std::pair<bool, bool> cross_family_contains(Point p, Point q, double r, Point x) {
  const GuideFamily fam = guide_family(p, q, r);
  const bool pPlus = filled_contains(fam.lpPlus, x);
  const bool pMinus = filled_contains(fam.lpMinus, x);
  const bool qPlus = filled_contains(fam.lqPlus, x);
  const bool qMinus = filled_contains(fam.lqMinus, x);
  return {(pPlus || qMinus) && (pMinus || qPlus), (pPlus && qMinus) || (pMinus && qPlus)};
}

std::string_view to_string(IdentityMode mode) {
  switch (mode) {
    case IdentityMode::Thm2: return "Thm2";
    case IdentityMode::Thm3: return "Thm3";
    case IdentityMode::Cor1Sub: return "Cor1Sub";
    case IdentityMode::Cor2Eq: return "Cor2Eq";
  }
  return "?";
}

IdentityReport& IdentityReport::operator+=(const IdentityReport& other) {
  worstResidual = std::min(worstResidual, other.worstResidual);
  trials += other.trials;
  mismatches += other.mismatches;
  skippedBoundaryBand += other.skippedBoundaryBand;
  return *this;
}

IdentityReport verify_identity(Point p, Point q, double r, IdentityMode mode,
                               std::span<const Point> samples, double band) {
  const GuideFamily fam = guide_family(p, q, r);
  const FociFrame frame = foci_frame(p, q);
  const CassiniSpec main{p, q, r};
  const CassiniSpec complements{frame.gPlus, frame.gMinus, r};
  const double level = r * r;
  const double scale = std::max(1.0, level);

  std::vector<const CassiniSpec*> involved = {&main, &fam.lpPlus, &fam.lpMinus, &fam.lqPlus,
                                              &fam.lqMinus};
  if (mode == IdentityMode::Cor2Eq) involved.push_back(&complements);

  IdentityReport report;
  for (const Point& x : samples) {
    ++report.trials;
    double margin = std::numeric_limits<double>::infinity();
    for (const CassiniSpec* s : involved) {
      margin = std::min(margin, std::abs(product_value(*s, x) - level) / scale);
    }
    if (margin <= band) {
      ++report.skippedBoundaryBand;
      continue;
    }
    report.worstResidual = std::min(report.worstResidual, margin);

    const bool inL = filled_contains(main, x);
    bool ok = true;
    switch (mode) {
      case IdentityMode::Thm2:
        ok = inL == union_of_intersections_contains(fam, x);
        break;
      case IdentityMode::Thm3:
        ok = inL == intersection_of_unions_contains(fam, x);
        break;
      case IdentityMode::Cor1Sub: {
        const auto [wide, narrow] = cross_family_contains(p, q, r, x);
        ok = (!inL || wide) && (!narrow || inL);
        break;
      }
      case IdentityMode::Cor2Eq: {
        const auto [wide, narrow] = cross_family_contains(p, q, r, x);
        const bool inComplements = filled_contains(complements, x);
        ok = wide == (inL || inComplements) && narrow == (inL && inComplements);
        break;
      }
    }
    if (!ok) ++report.mismatches;
  }
  return report;
}

std::vector<Point> grid_samples(Point center, double halfWidth, int n) {
  if (n < 2) throw std::invalid_argument("grid needs n >= 2");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  const double step = 2.0 * halfWidth / (n - 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out.push_back({center.x1 - halfWidth + i * step, center.x2 - halfWidth + j * step});
    }
  }
  return out;
}

std::vector<Point> random_samples(std::uint64_t seed, Point center, double halfWidth, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-halfWidth, halfWidth);
  std::vector<Point> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double a = offset(rng);
    const double b = offset(rng);
    out.push_back({center.x1 + a, center.x2 + b});
  }
  return out;
}

std::pair<Point, double> identity_box(Point p, Point q, double r) {
  const FociFrame f = foci_frame(p, q);
  double reach = 0.0;
  for (Point focus : {f.p, f.q, f.gPlus, f.gMinus}) {
    reach = std::max({reach, std::abs(focus.x1 - f.mid.x1), std::abs(focus.x2 - f.mid.x2)});
  }
  // Every filled set with a focus pair from {p, q, g+, g-} lies within
  // taxicab distance r of one of its foci.
  return {f.mid, 1.25 * (reach + r) + 1.0};
}

namespace {

bool on_critical_segment(const CassiniSpec& spec, Point x) {
  const double scale = std::max({1.0, std::abs(x.x1), std::abs(x.x2), spec.r});
  const double tol = kOnCurveTolerance * scale;
  const double dp = taxicab_distance(x, spec.p);
  const double dq = taxicab_distance(x, spec.q);
  const double span = taxicab_distance(spec.p, spec.q);
  // E(p, q) ∩ R: equidistant and on the taxicab segment between the foci.
  return std::abs(dp - dq) <= tol && dp + dq <= span + tol;
}

}  // namespace

std::int64_t boundary_failures(const CassiniSpec& spec, std::span<const Point> curvePoints,
                               double probeRadius) {
  constexpr int kDirections = 16;
  constexpr double kRadii[] = {1.0, 0.5, 0.25};
  std::array<Point, kDirections> star;
  for (int k = 0; k < kDirections; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / kDirections;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double norm = std::abs(c) + std::abs(s);
    star[k] = {c / norm, s / norm};
  }

  const double level = spec.r * spec.r;
  std::int64_t failures = 0;
  for (const Point& x : curvePoints) {
    bool inside = false;
    bool outside = on_critical_segment(spec, x) && classify_point(spec, x) == PointClass::On;
    for (double frac : kRadii) {
      for (const Point& dir : star) {
        const double f = product_value(spec, x + (probeRadius * frac) * dir);
        inside = inside || f < level;
        outside = outside || f > level;
      }
    }
    if (!(inside && outside)) ++failures;
  }
  return failures;
}

}  // namespace taxicab
