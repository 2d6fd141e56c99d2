#include "taxicab/cassini.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace taxicab {

CassiniSpec make_spec(Point p, Point q, double r) {
  if (!is_finite(p) || !is_finite(q)) throw std::invalid_argument("foci must be finite");
  if (!std::isfinite(r) || r < 0.0) throw std::invalid_argument("r must be finite and >= 0");
  return {p, q, r};
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::Inside: return "Inside";
    case PointClass::On: return "On";
    case PointClass::Outside: return "Outside";
  }
  return "?";
}

PointClass classify_point(const CassiniSpec& spec, Point x, double tol) {
  const double level = spec.r * spec.r;
  const double band = tol * std::max(1.0, level);
  const double f = product_value(spec, x);
  if (std::abs(f - level) <= band) return PointClass::On;
  return f < level - band ? PointClass::Inside : PointClass::Outside;
}

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::PointPair: return "PointPair";
    case Topology::TaxicabCircle: return "TaxicabCircle";
    case Topology::TwoCurves: return "TwoCurves";
    case Topology::PinchedEdge: return "PinchedEdge";
    case Topology::PinchedVertex: return "PinchedVertex";
    case Topology::OneCurve: return "OneCurve";
  }
  return "?";
}

Topology topology(const CassiniSpec& spec) {
  if (spec.r == 0.0) return Topology::PointPair;
  if (spec.p == spec.q) return Topology::TaxicabCircle;
  const double rStar = critical_radius(spec.p, spec.q).rStar;
  if (spec.r < rStar) return Topology::TwoCurves;
  if (spec.r > rStar) return Topology::OneCurve;
  const bool sharedCoordinateLine = spec.p.x1 == spec.q.x1 || spec.p.x2 == spec.q.x2;
  return sharedCoordinateLine ? Topology::PinchedVertex : Topology::PinchedEdge;
}

int curve_count(Topology t) {
  switch (t) {
    case Topology::PointPair: return 0;
    case Topology::TaxicabCircle:
    case Topology::OneCurve: return 1;
    case Topology::TwoCurves:
    case Topology::PinchedEdge:
    case Topology::PinchedVertex: return 2;
  }
  return 0;
}

std::string_view to_string(PieceKind k) {
  return k == PieceKind::GuideSegment ? "GuideSegment" : "HyperbolaArc";
}

namespace {

int running_axis(const CurvePiece& arc) { return arc.branch < 0 ? 0 : 1; }

Point with_coords(int runningAxis, double running, double solved) {
  return runningAxis == 0 ? Point{running, solved} : Point{solved, running};
}

}  // namespace

Point CurvePiece::point_at(double s) const {
  if (s <= 0.0) return start;
  if (s >= 1.0) return end;
  if (kind == PieceKind::GuideSegment) return start + s * (end - start);

  const int axis = running_axis(*this);
  const int other = 1 - axis;
  const double t = start[axis] + s * (end[axis] - start[axis]);
  const double side = start[other] >= center[other] ? 1.0 : -1.0;
  const double solved = center[other] + side * std::hypot(t - center[axis], r);
  return with_coords(axis, t, solved);
}

CurvePiece CurvePiece::reversed() const {
  CurvePiece out = *this;
  std::swap(out.start, out.end);
  return out;
}

double CurvePiece::implicit_residual(Point x) const {
  if (kind == PieceKind::HyperbolaArc) {
    const double a = x.x1 - center.x1;
    const double b = x.x2 - center.x2;
    return a * a - b * b - branch * r * r;
  }
  const Point dir = end - start;
  const Point rel = x - start;
  return rel.x1 * dir.x2 - rel.x2 * dir.x1;
}

namespace {

void require_standard(const CassiniSpec& spec) {
  if (!is_standard_pair(spec.p, spec.q)) {
    throw std::invalid_argument("spec is not in the standard frame");
  }
  if (!(spec.r >= 0.0) || !std::isfinite(spec.r)) throw std::invalid_argument("r must be >= 0");
}

SignPair interior_sigma(RegionId quadrant) {
  switch (quadrant) {
    case RegionId::QuadrantP: return {1, 1};
    case RegionId::QuadrantQ: return {-1, -1};
    case RegionId::QuadrantC1: return {1, -1};
    case RegionId::QuadrantC2: return {-1, 1};
    default: throw std::invalid_argument("not a quadrant region");
  }
}

}  // namespace

std::optional<CurvePiece> quadrant_piece(const CassiniSpec& spec, RegionId quadrant) {
  require_standard(spec);
  const SignPair s = interior_sigma(quadrant);
  const double p1 = spec.p.x1;
  const double p2 = spec.p.x2;
  const bool corner = quadrant == RegionId::QuadrantC1 || quadrant == RegionId::QuadrantC2;
  // |p1 - q1| * |p2 - q2| = 4 p1 p2 in the standard frame.
  if (corner && spec.r < std::sqrt(4.0 * p1 * p2)) return std::nullopt;

  const double level = std::hypot(s.s1 * p1 + s.s2 * p2, spec.r);
  // Clamping keeps the threshold case on the corner despite rounding.
  const double along1 = std::max(level - p2, p1);
  const double along2 = std::max(level - p1, p2);

  CurvePiece piece;
  piece.kind = PieceKind::GuideSegment;
  piece.region = quadrant;
  piece.slope = -s.s1 * s.s2;
  piece.start = {s.s1 * along1, s.s2 * p2};
  piece.end = {s.s1 * p1, s.s2 * along2};
  return piece;
}

std::vector<CurvePiece> rectangle_pieces(const CassiniSpec& spec) {
  require_standard(spec);
  const double p1 = spec.p.x1;
  const double p2 = spec.p.x2;
  const double half = p1 + p2;
  if (spec.r > half) return {};

  const double offset = std::sqrt((half - spec.r) * (half + spec.r));
  std::vector<double> levels = {offset};
  if (offset > 0.0) levels.push_back(-offset);

  std::vector<CurvePiece> out;
  for (double level : levels) {
    const double lo = std::max(-p1, level - p2);
    const double hi = std::min(p1, level + p2);
    CurvePiece piece;
    piece.kind = PieceKind::GuideSegment;
    piece.region = RegionId::CentralRectangle;
    piece.slope = -1;
    piece.start = {lo, level - lo};
    piece.end = {hi, level - hi};
    out.push_back(piece);
  }
  return out;
}

std::vector<CurvePiece> halfstrip_pieces(const CassiniSpec& spec, RegionId strip) {
  require_standard(spec);
  if (!is_strip(strip)) throw std::invalid_argument("not a half-strip region");
  if (!(spec.r > 0.0)) throw std::invalid_argument("half-strip arcs need r > 0");

  const double p1 = spec.p.x1;
  const double p2 = spec.p.x2;
  const bool horizontal = strip == RegionId::StripPC2 || strip == RegionId::StripQC1;
  const bool besideP = strip == RegionId::StripPC1 || strip == RegionId::StripPC2;
  const Point center = besideP ? Point{-p2, -p1} : Point{p2, p1};  // g+ or g-
  const int axis = horizontal ? 0 : 1;
  const int other = 1 - axis;
  // The solved coordinate lies beyond the strip's outer coordinate line.
  const double side = (strip == RegionId::StripPC1 || strip == RegionId::StripPC2) ? 1.0 : -1.0;
  const double extent = horizontal ? p1 : p2;

  // Inside the strip the arc satisfies |t - c| >= sqrt((p1+p2)^2 - r^2) along
  // the running coordinate t; for r <= r* that splits the strip in two.
  std::vector<std::pair<double, double>> intervals;
  const double half = p1 + p2;
  const double cr = center[axis];
  if (spec.r > half) {
    intervals.emplace_back(-extent, extent);
  } else {
    const double gap = std::sqrt((half - spec.r) * (half + spec.r));
    if (-extent <= cr - gap) intervals.emplace_back(-extent, std::min(extent, cr - gap));
    if (cr + gap <= extent) intervals.emplace_back(std::max(-extent, cr + gap), extent);
  }

  std::vector<CurvePiece> out;
  for (auto [lo, hi] : intervals) {
    CurvePiece arc;
    arc.kind = PieceKind::HyperbolaArc;
    arc.region = strip;
    arc.center = center;
    arc.branch = horizontal ? -1 : 1;
    arc.r = spec.r;
    arc.start = with_coords(axis, lo, center[other] + side * std::hypot(lo - cr, spec.r));
    arc.end = with_coords(axis, hi, center[other] + side * std::hypot(hi - cr, spec.r));
    out.push_back(arc);
  }
  return out;
}

namespace {

double signed_area(const std::vector<CurvePiece>& cycle) {
  double area = 0.0;
  Point prev = cycle.front().start;
  for (const CurvePiece& piece : cycle) {
    const int steps = piece.kind == PieceKind::GuideSegment ? 1 : 16;
    for (int j = 1; j <= steps; ++j) {
      const Point cur = piece.point_at(double(j) / steps);
      area += prev.x1 * cur.x2 - cur.x1 * prev.x2;
      prev = cur;
    }
  }
  return 0.5 * area;
}

std::vector<CurvePiece> reverse_cycle(const std::vector<CurvePiece>& cycle) {
  std::vector<CurvePiece> out;
  out.reserve(cycle.size());
  for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) out.push_back(it->reversed());
  return out;
}

// Stitches pieces whose endpoints coincide within tol into a single cycle.
std::vector<CurvePiece> stitch_cycle(std::vector<CurvePiece> pieces, double tol) {
  if (pieces.empty()) throw AssemblyError("no pieces to assemble");

  std::vector<Point> clusters;
  auto cluster_of = [&](Point x) {
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (taxicab_distance(clusters[i], x) <= tol) return i;
    }
    clusters.push_back(x);
    return clusters.size() - 1;
  };
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const CurvePiece& piece : pieces) ends.emplace_back(cluster_of(piece.start), cluster_of(piece.end));

  std::vector<int> degree(clusters.size(), 0);
  for (auto [a, b] : ends) {
    ++degree[a];
    ++degree[b];
  }
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) {
    throw AssemblyError("curve pieces do not meet in pairs");
  }

  std::vector<bool> used(pieces.size(), false);
  std::vector<CurvePiece> cycle = {pieces[0]};
  used[0] = true;
  const std::size_t first = ends[0].first;
  std::size_t at = ends[0].second;
  while (at != first) {
    bool advanced = false;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (used[i]) continue;
      if (ends[i].first == at) {
        cycle.push_back(pieces[i]);
        at = ends[i].second;
      } else if (ends[i].second == at) {
        cycle.push_back(pieces[i].reversed());
        at = ends[i].first;
      } else {
        continue;
      }
      used[i] = advanced = true;
      break;
    }
    if (!advanced) throw AssemblyError("curve does not close");
  }
  if (cycle.size() != pieces.size()) throw AssemblyError("pieces form more than one cycle");
  return cycle;
}

std::vector<CurvePiece> diamond(double r) {
  auto segment = [](RegionId region, Point a, Point b, int slope) {
    CurvePiece piece;
    piece.kind = PieceKind::GuideSegment;
    piece.region = region;
    piece.start = a;
    piece.end = b;
    piece.slope = slope;
    return piece;
  };
  return {
      segment(RegionId::QuadrantP, {r, 0.0}, {0.0, r}, -1),
      segment(RegionId::QuadrantC2, {0.0, r}, {-r, 0.0}, 1),
      segment(RegionId::QuadrantQ, {-r, 0.0}, {0.0, -r}, -1),
      segment(RegionId::QuadrantC1, {0.0, -r}, {r, 0.0}, 1),
  };
}

}  // namespace

std::vector<ClosedCurve> build_curves(const CassiniSpec& spec) {
  const CassiniSpec checked = make_spec(spec.p, spec.q, spec.r);
  const Topology topo = topology(checked);
  if (topo == Topology::PointPair) throw DegenerateInput("r = 0 has no closed curves");

  const Standardized frame = standardize(checked.p, checked.q);
  const Isometry toWorld = inverse(frame.iso);
  const CassiniSpec standard{frame.p, frame.q, checked.r};
  const bool flip = orientation_reversing(toWorld.group);

  auto finish = [&](std::vector<CurvePiece> cycle) {
    if (signed_area(cycle) < 0.0) cycle = reverse_cycle(cycle);
    if (flip) cycle = reverse_cycle(cycle);
    return ClosedCurve{checked, toWorld, std::move(cycle)};
  };

  if (topo == Topology::TaxicabCircle) return {finish(diamond(checked.r))};

  const double tol = kOnCurveTolerance * std::max({1.0, standard.p.x1, checked.r});
  std::vector<CurvePiece> pieces;
  auto keep = [&](const CurvePiece& piece) {
    if (taxicab_distance(piece.start, piece.end) > tol) pieces.push_back(piece);
  };
  for (RegionId id : kAllRegions) {
    if (is_quadrant(id)) {
      if (auto piece = quadrant_piece(standard, id)) keep(*piece);
    } else if (is_strip(id)) {
      for (const CurvePiece& arc : halfstrip_pieces(standard, id)) keep(arc);
    } else {
      for (const CurvePiece& seg : rectangle_pieces(standard)) keep(seg);
    }
  }

  std::vector<ClosedCurve> curves;
  if (topo == Topology::OneCurve) {
    curves.push_back(finish(stitch_cycle(pieces, tol)));
    return curves;
  }

  // Below and at r* each loop stays on its focus' side of E(p, q); only the
  // pinch segment through the midpoint lies on E and belongs to both loops.
  std::vector<CurvePiece> nearP, nearQ;
  for (const CurvePiece& piece : pieces) {
    const bool pinch = piece.region == RegionId::CentralRectangle &&
                       piece.start.x1 + piece.start.x2 == 0.0;
    const Point mid = piece.point_at(0.5);
    const double toP = taxicab_distance(mid, standard.p);
    const double toQ = taxicab_distance(mid, standard.q);
    if (pinch) {
      nearP.push_back(piece);
      nearQ.push_back(piece);
    } else if (toP < toQ) {
      nearP.push_back(piece);
    } else if (toQ < toP) {
      nearQ.push_back(piece);
    } else {
      throw AssemblyError("piece straddles the equidistant set");
    }
  }
  curves.push_back(finish(stitch_cycle(nearP, tol)));
  curves.push_back(finish(stitch_cycle(nearQ, tol)));
  return curves;
}

namespace {

double chord_length(const CurvePiece& piece) {
  const int steps = piece.kind == PieceKind::GuideSegment ? 1 : 16;
  double len = 0.0;
  Point prev = piece.start;
  for (int j = 1; j <= steps; ++j) {
    const Point cur = piece.point_at(double(j) / steps);
    len += std::hypot(cur.x1 - prev.x1, cur.x2 - prev.x2);
    prev = cur;
  }
  return len;
}

}  // namespace

std::vector<Point> sample_curve(const ClosedCurve& curve, int n) {
  if (n < 8) throw std::invalid_argument("sample_curve needs n >= 8");
  const std::size_t m = curve.pieces.size();
  if (m > static_cast<std::size_t>(n)) throw std::invalid_argument("fewer samples than pieces");

  std::vector<double> lengths;
  for (const CurvePiece& piece : curve.pieces) lengths.push_back(chord_length(piece));
  const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);

  // One sample per piece start, the rest by largest remainder on length.
  std::vector<int> counts(m, 1);
  const int spare = n - static_cast<int>(m);
  std::vector<std::pair<double, std::size_t>> remainders;
  int assigned = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double share = total > 0.0 ? spare * lengths[i] / total : double(spare) / m;
    const int whole = static_cast<int>(std::floor(share));
    counts[i] += whole;
    assigned += whole;
    remainders.emplace_back(share - whole, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int k = 0; k < spare - assigned; ++k) ++counts[remainders[k % m].second];

  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 0; j < counts[i]; ++j) out.push_back(curve.world(curve.pieces[i].point_at(double(j) / counts[i])));
  }
  return out;
}

std::vector<Point> trace(const ClosedCurve& curve, int samplesPerArc) {
  samplesPerArc = std::max(samplesPerArc, 2);
  std::vector<Point> out;
  for (const CurvePiece& piece : curve.pieces) {
    if (piece.kind == PieceKind::GuideSegment) {
      out.push_back(curve.world(piece.start));
      continue;
    }
    for (int j = 0; j + 1 < samplesPerArc; ++j) {
      out.push_back(curve.world(piece.point_at(double(j) / (samplesPerArc - 1))));
    }
  }
  return out;
}

bool encloses(const ClosedCurve& curve, Point x) {
  const std::vector<Point> poly = trace(curve, 64);
  int winding = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % poly.size()];
    const double cross = (b.x1 - a.x1) * (x.x2 - a.x2) - (x.x1 - a.x1) * (b.x2 - a.x2);
    if (a.x2 <= x.x2) {
      if (b.x2 > x.x2 && cross > 0.0) ++winding;
    } else if (b.x2 <= x.x2 && cross < 0.0) {
      --winding;
    }
  }
  return winding != 0;
}

}  // namespace taxicab
