#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "taxicab/cassini.hpp"
#include "taxicab/oracle.hpp"

using namespace taxicab;
using testing::relative_residual;

namespace {

CassiniSpec standard_spec(testing::Gen& gen) {
  double a = gen.real(0.0, 20.0), b = gen.real(0.0, 20.0);
  if (a < b) std::swap(a, b);
  return {{a, b}, {-a, -b}, gen.real(0.01, 40.0)};
}

double signed_area(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly[(i + 1) % poly.size()];
    twice += a.x1 * b.x2 - b.x1 * a.x2;
  }
  return 0.5 * twice;
}

bool contains(const std::vector<RegionId>& v, RegionId id) { return std::find(v.begin(), v.end(), id) != v.end(); }

}  // namespace

TEST_CASE("product value examples") {
  const CassiniSpec fig7{{4, 1}, {-4, -1}, 6};
  CHECK(product_value(fig7, {0, 0}) == 25.0);
  CHECK(product_value(fig7, {4, 1}) == 0.0);

  // A point of the first-quadrant guide line x1 + x2 = sqrt(377) inside Q_p.
  const CassiniSpec fig5{{8, 3}, {-8, -3}, 16};
  const double c = std::sqrt(377.0);
  CHECK(product_value(fig5, {10.0, c - 10.0}) == doctest::Approx(256.0).epsilon(1e-12));
}

TEST_CASE("critical radius examples") {
  CHECK(critical_radius({4, 1}, {-4, -1}).rStar == 5.0);
  CHECK(critical_radius({8, 3}, {-8, -3}).rStar == 11.0);
  CHECK(critical_radius({2, 2}, {2, 2}).rStar == 0.0);
}

TEST_CASE("classify_point examples") {
  const CassiniSpec fig7{{4, 1}, {-4, -1}, 6};
  CHECK(classify_point(fig7, {0, 0}) == PointClass::Inside);
  CHECK(classify_point(fig7, fig7.p) == PointClass::Inside);
  CHECK(classify_point(fig7, {100, 100}) == PointClass::Outside);
  CHECK(classify_point({{4, 1}, {-4, -1}, 3}, {3.5, 0.5}) == PointClass::On);
  CHECK(classify_point({{4, 1}, {-4, -1}, 3}, {2, 2}) == PointClass::Outside);
}

TEST_CASE("topology examples and table") {
  CHECK(topology({{4, 1}, {-4, -1}, 6}) == Topology::OneCurve);
  CHECK(topology({{4, 1}, {-4, -1}, 3}) == Topology::TwoCurves);
  CHECK(topology({{5, 0}, {-5, 0}, 5}) == Topology::PinchedVertex);
  CHECK(topology({{4, 1}, {-4, -1}, 5}) == Topology::PinchedEdge);
  CHECK(topology({{4, 1}, {-4, -1}, 0}) == Topology::PointPair);
  CHECK(topology({{1, 1}, {1, 1}, 0}) == Topology::PointPair);
  CHECK(topology({{1, 1}, {1, 1}, 2}) == Topology::TaxicabCircle);

  CHECK(curve_count(Topology::PointPair) == 0);
  CHECK(curve_count(Topology::TaxicabCircle) == 1);
  CHECK(curve_count(Topology::TwoCurves) == 2);
  CHECK(curve_count(Topology::PinchedEdge) == 2);
  CHECK(curve_count(Topology::PinchedVertex) == 2);
  CHECK(curve_count(Topology::OneCurve) == 1);
}

TEST_CASE("make_spec validation") {
  CHECK_THROWS_AS(make_spec({0, 0}, {1, 1}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_spec({0, NAN}, {1, 1}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_spec({0, 0}, {1, 1}, INFINITY), std::invalid_argument);
}

TEST_CASE("quadrant pieces for p = (8, 3)") {
  const double c = std::sqrt(377.0);
  const auto qp = quadrant_piece({{8, 3}, {-8, -3}, 16}, RegionId::QuadrantP);
  REQUIRE(qp);
  CHECK(qp->kind == PieceKind::GuideSegment);
  CHECK(qp->slope == -1);
  CHECK(qp->start.x1 == doctest::Approx(c - 3));
  CHECK(qp->start.x2 == 3.0);
  CHECK(qp->end.x1 == 8.0);
  CHECK(qp->end.x2 == doctest::Approx(c - 8));
  const CassiniSpec fig5{{8, 3}, {-8, -3}, 16};
  for (double s : {0.0, 0.5, 1.0}) CHECK(relative_residual(fig5, qp->point_at(s)) <= 1e-9);

  const auto c1 = quadrant_piece(fig5, RegionId::QuadrantC1);
  REQUIRE(c1);
  CHECK(relative_residual(fig5, c1->point_at(0.5)) <= 1e-9);
  CHECK_FALSE(quadrant_piece({{8, 3}, {-8, -3}, 9}, RegionId::QuadrantC1));
  CHECK_FALSE(quadrant_piece({{8, 3}, {-8, -3}, 9}, RegionId::QuadrantC2));

  // At the threshold r^2 = |p1 - q1| |p2 - q2| the piece is the corner itself.
  const auto corner = quadrant_piece({{4, 1}, {-4, -1}, 4}, RegionId::QuadrantC1);
  REQUIRE(corner);
  CHECK(corner->start == Point{4, -1});
  CHECK(corner->end == Point{4, -1});
}

TEST_CASE("region pieces reject bad input") {
  CHECK_THROWS_AS(quadrant_piece({{1, 2}, {-1, -2}, 1}, RegionId::QuadrantP), std::invalid_argument);
  CHECK_THROWS_AS(quadrant_piece({{2, 1}, {-2, -1}, 1}, RegionId::StripPC1), std::invalid_argument);
  CHECK_THROWS_AS(rectangle_pieces({{2, 1}, {0, 0}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(halfstrip_pieces({{2, 1}, {-2, -1}, 1}, RegionId::QuadrantP), std::invalid_argument);
  CHECK_THROWS_AS(halfstrip_pieces({{2, 1}, {-2, -1}, 0}, RegionId::StripPC1), std::invalid_argument);
}

TEST_CASE("Q_p and Q_q always contribute; c-quadrants exactly from the threshold on") {
  testing::Gen gen(21);
  for (int k = 0; k < 2000; ++k) {
    const CassiniSpec s = standard_spec(gen);
    CHECK(quadrant_piece(s, RegionId::QuadrantP));
    CHECK(quadrant_piece(s, RegionId::QuadrantQ));
    const bool expected = s.r * s.r >= 4.0 * s.p.x1 * s.p.x2;
    CHECK(quadrant_piece(s, RegionId::QuadrantC1).has_value() == expected);
    CHECK(quadrant_piece(s, RegionId::QuadrantC2).has_value() == expected);
  }
}

TEST_CASE("rectangle pieces for p = (4, 1)") {
  const auto two = rectangle_pieces({{4, 1}, {-4, -1}, 3});
  REQUIRE(two.size() == 2);
  std::vector<double> levels;
  for (const CurvePiece& s : two) {
    CHECK(s.slope == -1);
    CHECK(s.start.x1 + s.start.x2 == doctest::Approx(s.end.x1 + s.end.x2));
    levels.push_back(s.start.x1 + s.start.x2);
  }
  std::sort(levels.begin(), levels.end());
  CHECK(levels[0] == doctest::Approx(-4));
  CHECK(levels[1] == doctest::Approx(4));
  CHECK(product_value({{4, 1}, {-4, -1}, 3}, {3.5, 0.5}) == 9.0);

  const auto one = rectangle_pieces({{4, 1}, {-4, -1}, 5});
  REQUIRE(one.size() == 1);
  CHECK(one[0].start.x1 + one[0].start.x2 == 0.0);

  CHECK(rectangle_pieces({{4, 1}, {-4, -1}, 6}).empty());
}

TEST_CASE("half-strip arcs for p = (8, 3), r = 16") {
  const CassiniSpec fig5{{8, 3}, {-8, -3}, 16};
  const auto pc1 = halfstrip_pieces(fig5, RegionId::StripPC1);
  REQUIRE(pc1.size() == 1);
  CHECK(pc1[0].kind == PieceKind::HyperbolaArc);
  CHECK(pc1[0].center == Point{-3, -8});
  CHECK(pc1[0].branch == 1);
  // Where the arc meets x2 = 0.
  const double x1 = std::sqrt(320.0) - 3.0;
  CHECK(pc1[0].implicit_residual({x1, 0.0}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(product_value(fig5, {x1, 0.0}) == doctest::Approx(256.0).epsilon(1e-12));

  const auto qc1 = halfstrip_pieces(fig5, RegionId::StripQC1);
  REQUIRE(qc1.size() == 1);
  CHECK(qc1[0].center == Point{3, 8});
  for (RegionId strip : {RegionId::StripPC1, RegionId::StripPC2, RegionId::StripQC1, RegionId::StripQC2}) {
    for (const CurvePiece& arc : halfstrip_pieces(fig5, strip)) {
      for (int j = 0; j <= 32; ++j) {
        const Point x = arc.point_at(j / 32.0);
        CHECK(relative_residual(fig5, x) <= 1e-9);
        CHECK(std::abs(arc.implicit_residual(x)) <= 1e-9 * 256);
      }
    }
  }
}

TEST_CASE("build_curves examples") {
  CHECK(build_curves({{8, 3}, {-8, -3}, 16}).size() == 1);

  const auto two = build_curves({{4, 1}, {-4, -1}, 3});
  REQUIRE(two.size() == 2);
  const bool firstHasP = encloses(two[0], {4, 1});
  CHECK(firstHasP != encloses(two[0], {-4, -1}));
  CHECK(encloses(two[1], {4, 1}) != firstHasP);
  CHECK(encloses(two[1], {-4, -1}) == firstHasP);

  const auto circle = build_curves({{0, 0}, {0, 0}, 2});
  REQUIRE(circle.size() == 1);
  const auto pts = sample_curve(circle[0], 8);
  for (Point v : {Point{2, 0}, Point{0, 2}, Point{-2, 0}, Point{0, -2}}) {
    CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
  }

  CHECK_THROWS_AS(build_curves({{1, 1}, {2, 2}, 0}), DegenerateInput);
}

TEST_CASE("sample_curve count contract and residuals") {
  const CassiniSpec fig5{{8, 3}, {-8, -3}, 16};
  const auto curve = build_curves(fig5).front();
  CHECK(sample_curve(curve, 8).size() == 8);
  const auto pts = sample_curve(curve, 64);
  CHECK(pts.size() == 64);
  for (Point x : pts) CHECK(classify_point(fig5, x, 1e-9) == PointClass::On);
  CHECK_THROWS_AS(sample_curve(curve, 7), std::invalid_argument);
}

TEST_CASE("residual invariant on random specs") {
  testing::Gen gen(22);
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    const CassiniSpec s = gen.spec();
    for (const ClosedCurve& c : build_curves(s)) {
      for (Point x : sample_curve(c, 64)) worst = std::max(worst, relative_residual(s, x));
      for (Point x : trace(c, 16)) worst = std::max(worst, relative_residual(s, x));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("piece geometry: endpoints on coordinate lines, interiors in the region, cycles close") {
  testing::Gen gen(23);
  for (int k = 0; k < 500; ++k) {
    CassiniSpec s = standard_spec(gen);
    if (k % 5 == 0) s.p.x2 = s.q.x2 = 0.0;  // foci on one coordinate line
    const FociFrame frame = foci_frame(s.p, s.q);
    const double tol = 1e-9 * std::max({1.0, s.p.x1, s.r});
    for (const ClosedCurve& curve : build_curves(s)) {
      const auto& pieces = curve.pieces;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const CurvePiece& piece = pieces[i];
        for (Point e : {piece.start, piece.end}) {
          const bool onLine = std::abs(std::abs(e.x1) - s.p.x1) <= tol || std::abs(std::abs(e.x2) - s.p.x2) <= tol;
          CHECK(onLine);
        }
        CHECK(taxicab_distance(piece.end, pieces[(i + 1) % pieces.size()].start) <= tol);
        if (taxicab_distance(piece.start, piece.end) > 1e-6) {
          for (double t : {0.25, 0.5, 0.75}) CHECK(contains(classify_region(frame, piece.point_at(t)), piece.region));
        }
      }
    }
  }
}

TEST_CASE("curves are counterclockwise in the caller's frame and match topology") {
  testing::Gen gen(24);
  for (int k = 0; k < 500; ++k) {
    const CassiniSpec s = gen.spec();
    const auto curves = build_curves(s);
    CHECK(static_cast<int>(curves.size()) == curve_count(topology(s)));
    for (const ClosedCurve& c : curves) CHECK(signed_area(trace(c, 16)) > 0.0);
    if (topology(s) == Topology::TwoCurves) {
      const bool firstHasP = encloses(curves[0], s.p);
      CHECK(firstHasP != encloses(curves[0], s.q));
      CHECK(encloses(curves[1], s.q) == firstHasP);
      CHECK(encloses(curves[1], s.p) != firstHasP);
    } else {
      CHECK(encloses(curves[0], s.p));
    }
  }
}

TEST_CASE("pinched instances: two curves sharing the pinch") {
  SUBCASE("edge") {
    const CassiniSpec s{{4, 1}, {-4, -1}, 5};
    const auto curves = build_curves(s);
    REQUIRE(curves.size() == 2);
    for (const ClosedCurve& c : curves) {
      CHECK(std::any_of(c.pieces.begin(), c.pieces.end(), [](const CurvePiece& piece) {
        return piece.region == RegionId::CentralRectangle;
      }));
    }
  }
  SUBCASE("vertex") {
    const CassiniSpec s{{5, 0}, {-5, 0}, 5};
    const auto curves = build_curves(s);
    REQUIRE(curves.size() == 2);
    auto touches_origin = [](const ClosedCurve& c) {
      return std::any_of(c.pieces.begin(), c.pieces.end(),
                         [&](const CurvePiece& piece) { return taxicab_distance(c.world(piece.start), {0, 0}) <= 1e-12; });
    };
    CHECK(touches_origin(curves[0]));
    CHECK(touches_origin(curves[1]));
  }
  SUBCASE("general position, rotated and shifted") {
    const CassiniSpec s{{1, 7}, {-3, -2}, 6.5};
    CHECK(topology(s) == Topology::PinchedEdge);
    for (const ClosedCurve& c : build_curves(s)) {
      for (Point x : sample_curve(c, 64)) CHECK(relative_residual(s, x) <= 1e-9);
    }
  }
}

TEST_CASE("swap symmetry: K(p, q; r) = K(q, p; r)") {
  testing::Gen gen(25);
  for (int k = 0; k < 100; ++k) {
    const CassiniSpec s = gen.spec();
    std::vector<Polyline> a, b;
    for (const ClosedCurve& c : build_curves(s)) a.push_back({trace(c, 32), true});
    for (const ClosedCurve& c : build_curves({s.q, s.p, s.r})) b.push_back({trace(c, 32), true});
    CHECK(hausdorff(a, b) <= 1e-9 * std::max(1.0, s.r));
  }
}

TEST_CASE("AM-GM ceiling on the central rectangle") {
  testing::Gen gen(26);
  for (int k = 0; k < 5000; ++k) {
    const Point p = gen.point(), q = gen.point();
    const Point x{p.x1 + gen.real(0, 1) * (q.x1 - p.x1), p.x2 + gen.real(0, 1) * (q.x2 - p.x2)};
    const double rStar = critical_radius(p, q).rStar;
    CHECK(product_value({p, q, 1}, x) <= rStar * rStar * (1 + 1e-12));
  }
}

TEST_CASE("isometry equivariance and dilation law of classify_point") {
  testing::Gen gen(27);
  for (int k = 0; k < 300; ++k) {
    const CassiniSpec s{gen.dyadic_point(-8, 8), gen.dyadic_point(-8, 8), gen.dyadic(0, 16)};
    const Isometry iso{kPointGroup[k % 8], gen.dyadic_point(-8, 8)};
    const CassiniSpec moved{iso(s.p), iso(s.q), s.r};
    for (int j = 0; j < 50; ++j) {
      const Point x = gen.dyadic_point(-30, 30);
      CHECK(classify_point(s, x) == classify_point(moved, iso(x)));
      for (double lambda : {0.5, 2.0}) {
        const CassiniSpec scaled{lambda * s.p, lambda * s.q, lambda * s.r};
        CHECK(classify_point(s, x) == classify_point(scaled, lambda * x));
      }
    }
  }
}

TEST_CASE("trace: closing point not repeated, arcs densely sampled") {
  const auto curve = build_curves({{8, 3}, {-8, -3}, 16}).front();
  const auto poly = trace(curve, 64);
  CHECK_FALSE(poly.front() == poly.back());
  int arcs = 0, segments = 0;
  for (const CurvePiece& piece : curve.pieces) (piece.kind == PieceKind::HyperbolaArc ? arcs : segments)++;
  CHECK(poly.size() == static_cast<std::size_t>(segments + 63 * arcs));
}
