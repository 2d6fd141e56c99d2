#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "taxicab/campaign.hpp"
#include "taxicab/oracle.hpp"

using namespace taxicab;

namespace {

std::vector<Point> diamond(Point c, double r) {
  return {{c.x1 + r, c.x2}, {c.x1, c.x2 + r}, {c.x1 - r, c.x2}, {c.x1, c.x2 - r}, {c.x1 + r, c.x2}};
}

// Brute-force Hausdorff distance over dense samples of both polylines.
double dense_hausdorff(const std::vector<Point>& a, const std::vector<Point>& b, int perSegment) {
  auto densify = [perSegment](const std::vector<Point>& v) {
    std::vector<Point> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      for (int k = 0; k < perSegment; ++k) out.push_back(v[i] + (double(k) / perSegment) * (v[i + 1] - v[i]));
    }
    out.push_back(v.back());
    return out;
  };
  const auto da = densify(a), db = densify(b);
  auto directed = [](const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (Point x : from) {
      double best = INFINITY;
      for (Point y : to) best = std::min(best, taxicab_distance(x, y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(da, db), directed(db, da));
}

}  // namespace

TEST_CASE("grid field examples") {
  const ScalarGrid g = grid_field({{0, 0}, {0, 0}, 2}, 5, 21);
  CHECK(g.nx == 21);
  CHECK(g.node(10, 10) == Point{0, 0});
  CHECK(g.at(10, 10) == -4.0);
  CHECK(g.node(20, 20) == Point{5, 5});
  CHECK(g.at(20, 20) == 96.0);  // f = 100 at (5, 5), minus r^2

  CHECK_NOTHROW(grid_field({{4, 1}, {-4, -1}, 6}, 64));
  const ScalarGrid small = grid_field({{4, 1}, {-4, -1}, 6}, 16);
  CHECK(small.values.size() == 256);
  CHECK_THROWS_AS(grid_field({{4, 1}, {-4, -1}, 6}, 15), std::invalid_argument);
  CHECK_THROWS_AS(grid_field({{4, 1}, {-4, -1}, 6}, 3.0, 64), BoxTooSmall);
}

TEST_CASE("default box encloses the curve") {
  testing::Gen gen(41);
  for (int k = 0; k < 300; ++k) {
    const CassiniSpec s = gen.spec();
    CHECK_NOTHROW(grid_field(s, 32));
  }
}

TEST_CASE("node signs agree with classify_point") {
  testing::Gen gen(42);
  for (int k = 0; k < 50; ++k) {
    const CassiniSpec s = gen.spec();
    const ScalarGrid g = grid_field(s, 40);
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const PointClass c = classify_point(s, g.node(i, j));
        if (c == PointClass::Inside) CHECK(g.at(i, j) < 0.0);
        if (c == PointClass::Outside) CHECK(g.at(i, j) > 0.0);
      }
    }
  }
}

TEST_CASE("contour component counts") {
  CHECK(component_count(extract_contour(grid_field({{0, 0}, {0, 0}, 2}, 101))) == 1);
  CHECK(component_count(extract_contour(grid_field({{4, 1}, {-4, -1}, 3}, 201))) == 2);
  CHECK(component_count(extract_contour(grid_field({{4, 1}, {-4, -1}, 6}, 201))) == 1);
  CHECK(component_count(extract_contour(grid_field({{8, 3}, {-8, -3}, 16}, 201))) == 1);
  CHECK(component_count(Contour{}) == 0);

  // Two separate taxicab circles as one field.
  ScalarGrid g;
  g.origin = {-10, -5};
  g.spacing1 = g.spacing2 = 0.1;
  g.nx = 201;
  g.ny = 101;
  g.field = [](Point x) {
    return std::min(taxicab_distance(x, {-5, 0}), taxicab_distance(x, {5, 0})) - 2.0;
  };
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) g.values.push_back(g.field(g.node(i, j)));
  }
  CHECK(component_count(extract_contour(g)) == 2);
}

TEST_CASE("contour polylines are closed, step-bounded and close to the level set") {
  const CassiniSpec s{{4, 1}, {-4, -1}, 6};
  const ScalarGrid g = grid_field(s, 257);
  const Contour c = extract_contour(g);
  for (const Polyline& pl : c.polylines) {
    CHECK(pl.closed);
    CHECK(pl.points.front() == pl.points.back());
    for (std::size_t i = 0; i + 1 < pl.points.size(); ++i) {
      CHECK(taxicab_distance(pl.points[i], pl.points[i + 1]) <= 2.0 * g.spacing() + 1e-12);
    }
    for (Point x : pl.points) CHECK(std::abs(product_value(s, x) - 36.0) <= 2.0 * 36.0 * g.spacing());
  }
}

TEST_CASE("hausdorff examples") {
  const auto d = diamond({0, 0}, 1);
  CHECK(hausdorff(d, d) == 0.0);
  const auto shifted = diamond({0.1, 0}, 1);
  CHECK(hausdorff(d, shifted) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(dense_hausdorff(d, shifted, 400) == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(hausdorff(shifted, d) == hausdorff(d, shifted));
  const std::vector<Point> empty;
  CHECK_THROWS_AS(hausdorff(d, empty), std::invalid_argument);
}

TEST_CASE("hausdorff agrees with dense brute force on random polylines") {
  testing::Gen gen(43);
  for (int k = 0; k < 50; ++k) {
    std::vector<Point> a, b;
    for (int i = 0; i < 6; ++i) a.push_back(gen.point(-5, 5));
    for (int i = 0; i < 6; ++i) b.push_back(gen.point(-5, 5));
    const double fast = hausdorff(a, b);
    const double slow = dense_hausdorff(a, b, 200);
    // The brute force only sees samples, so it can overestimate by a sample gap.
    CHECK(slow >= fast - 0.2);
    CHECK(slow <= fast + 0.2);
  }
}

TEST_CASE("point-segment distance") {
  CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == 1.0);
  CHECK(point_segment_distance({3, 0}, {-1, 0}, {1, 0}) == 2.0);
  CHECK(point_segment_distance({0, 1}, {-1, -1}, {1, 1}) == doctest::Approx(1.0));
  CHECK(point_segment_distance({2, 2}, {2, 2}, {2, 2}) == 0.0);
}

TEST_CASE("analytic curve and contour converge") {
  const CassiniSpec s{{4, 1}, {-4, -1}, 6};
  const auto analytic = analytic_polylines(build_curves(s), 4096);
  double previous = INFINITY;
  for (int n : {65, 129, 257}) {
    const ScalarGrid g = grid_field(s, n);
    const double h = hausdorff(analytic, extract_contour(g).polylines);
    CHECK(h <= 2.0 * g.spacing());
    CHECK(h < previous);
    previous = h;
  }
}

TEST_CASE("focus-aligned lattice") {
  const CassiniSpec s{{3.3, 1.7}, {-2.1, -0.4}, 0.05};
  const ScalarGrid g = focus_aligned_field(s, 0.1);
  CHECK(g.spacing1 <= 0.1);
  CHECK(g.spacing2 <= 0.1);
  auto on_node = [&](Point f) {
    const double i = (f.x1 - g.origin.x1) / g.spacing1;
    const double j = (f.x2 - g.origin.x2) / g.spacing2;
    return std::abs(i - std::round(i)) < 1e-9 && std::abs(j - std::round(j)) < 1e-9;
  };
  CHECK(on_node(s.p));
  CHECK(on_node(s.q));
  // Loops far thinner than the spacing are still found.
  CHECK(component_count(extract_contour(g)) == 2);
}

TEST_CASE("oracle component count across topology classes") {
  const CassiniSpec cases[] = {
      {{4, 1}, {-4, -1}, 3}, {{4, 1}, {-4, -1}, 6}, {{1, 1}, {1, 1}, 2},
      {{5, 0}, {-5, 0}, 4.9}, {{5, 0}, {-5, 0}, 5.1}, {{8, 3}, {-8, -3}, 0.2},
  };
  for (const CassiniSpec& s : cases) {
    CAPTURE(to_string(topology(s)));
    CHECK(oracle_component_count(s, 64) == curve_count(topology(s)));
  }
}
