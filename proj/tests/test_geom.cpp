#include <doctest.h>

#include "noncvx/generate.hpp"
#include "noncvx/geom.hpp"
#include "noncvx/rng.hpp"

using namespace noncvx;

namespace {
Tolerance unit_tol() { return Tolerance{1e-9, 1.0}; }
}  // namespace

TEST_CASE("orientation basics") {
  Tolerance t = unit_tol();
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}, t) == Orient::Left);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}, t) == Orient::Collinear);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}, t) == Orient::Right);
}

TEST_CASE("orientation antisymmetry on random non-collinear triples") {
  Rng rng(42);
  Tolerance t = unit_tol();
  for (int i = 0; i < 2000; ++i) {
    Point2 a{rng.unit(), rng.unit()}, b{rng.unit(), rng.unit()}, c{rng.unit(), rng.unit()};
    Orient o1 = orientation(a, b, c, t);
    if (o1 == Orient::Collinear) continue;
    Orient o2 = orientation(a, c, b, t);
    CHECK(o1 != o2);
    CHECK(o2 != Orient::Collinear);
  }
}

TEST_CASE("convex hull drops interior and collinear points") {
  auto h = convex_hull({{0, 0}, {1, 0}, {0, 1}, {0.25, 0.25}});
  REQUIRE(h.size() == 3);
  CHECK(h.vertices[0].x == 0.0);
  CHECK(h.vertices[0].y == 0.0);

  auto tri = convex_hull({{-2, 0}, {2, 0}, {0, 1}});
  CHECK(tri.size() == 3);

  auto seg = convex_hull({{0, 0}, {1, 0}, {3, 0}});
  REQUIRE(seg.size() == 2);
  CHECK(seg.vertices[0].x == 0.0);
  CHECK(seg.vertices[1].x == 3.0);
  CHECK(seg.rank() == 1);

  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
}

TEST_CASE("convex hull is idempotent and contains its inputs") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    PointSet ps = generate(seed, 40, Shape::UniformSquare);
    ConvexPolygon h = ps.hull();
    ConvexPolygon h2 = convex_hull(h.vertices, ps.tol());
    REQUIRE(h2.size() == h.size());
    for (size_t i = 0; i < h.size(); ++i) {
      CHECK(h2.vertices[i].x == h.vertices[i].x);
      CHECK(h2.vertices[i].y == h.vertices[i].y);
    }
    for (const auto& p : ps.points())
      CHECK(point_in_polygon(p, h, ps.tol()) != Containment::Outside);
  }
}

TEST_CASE("point in polygon classification") {
  ConvexPolygon tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  Tolerance t = unit_tol();
  CHECK(point_in_polygon({0.2, 0.2}, tri, t) == Containment::Inside);
  CHECK(point_in_polygon({0.5, 0.5}, tri, t) == Containment::Boundary);
  CHECK(point_in_polygon({1, 1}, tri, t) == Containment::Outside);
}

TEST_CASE("nearest point on segment") {
  Segment s{{-1, 0}, {1, 0}};
  auto [p1, d1] = nearest_point_on_segment({0, 1}, s);
  CHECK(p1.x == doctest::Approx(0));
  CHECK(d1 == doctest::Approx(1));
  auto [p2, d2] = nearest_point_on_segment({2, 1}, s);
  CHECK(p2.x == doctest::Approx(1));
  CHECK(d2 == doctest::Approx(std::sqrt(2.0)));
  auto [p3, d3] = nearest_point_on_segment({0.25, 0}, s);
  CHECK(p3.x == doctest::Approx(0.25));
  CHECK(d3 == doctest::Approx(0));
}

TEST_CASE("circumcircle golden values") {
  Circle c1 = circumcircle({0, 0}, {1, 0}, {0, 1});
  CHECK(c1.center.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c1.center.y == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c1.radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  // Equidistance equations solved by hand: center (0,-1.5), radius 2.5.
  Circle c2 = circumcircle({-2, 0}, {2, 0}, {0, 1});
  CHECK(c2.center.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c2.center.y == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(c2.radius == doctest::Approx(2.5).epsilon(1e-12));

  // Equilateral with unit side: R = 1/sqrt(3).
  Circle c3 = circumcircle({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2});
  CHECK(c3.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

  CHECK_THROWS_AS(circumcircle({0, 0}, {1, 0}, {2, 0}), std::invalid_argument);
}

TEST_CASE("circumcircle equidistance on random triples") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Point2 a{rng.unit(), rng.unit()}, b{rng.unit(), rng.unit()}, c{rng.unit(), rng.unit()};
    if (std::abs(cross(b - a, c - a)) < 1e-4) continue;
    Circle cc = circumcircle(a, b, c);
    for (Point2 p : {a, b, c})
      CHECK(dist(p, cc.center) == doctest::Approx(cc.radius).epsilon(1e-9));
  }
}

TEST_CASE("min enclosing circle examples") {
  Circle c1 = min_enclosing_circle({{0, 0}});
  CHECK(c1.radius == 0.0);

  // Obtuse triangle: the diameter circle of the longest side already covers
  // the apex, so radius 2.
  Circle c2 = min_enclosing_circle({{-2, 0}, {2, 0}, {0, 1}});
  CHECK(c2.center.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c2.center.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c2.radius == doctest::Approx(2.0).epsilon(1e-12));

  Circle c3 = min_enclosing_circle({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(c3.radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  CHECK_THROWS_AS(min_enclosing_circle({}), std::invalid_argument);
}

TEST_CASE("min enclosing circle contains all points and is minimal") {
  Rng rng(99);
  for (uint64_t seed = 0; seed < 25; ++seed) {
    PointSet ps = generate(seed, 30, seed % 2 ? Shape::Annulus : Shape::UniformSquare);
    Circle c = min_enclosing_circle(ps.points());
    double eps = ps.tol().eps();
    std::vector<Point2> interior;
    for (const auto& p : ps.points()) {
      CHECK(dist(p, c.center) <= c.radius + eps);
      if (dist(p, c.center) < c.radius - eps) interior.push_back(p);
    }
    // Dropping the boundary-determining points can only shrink the circle.
    if (!interior.empty() && interior.size() < ps.size()) {
      Circle c2 = min_enclosing_circle(interior);
      CHECK(c2.radius <= c.radius + eps);
    }
  }
}

TEST_CASE("segment line intersection") {
  Tolerance t = unit_tol();
  Line horiz{{0, 0}, {1, 0}};
  auto p1 = segment_line_intersection({{0, -1}, {0, 1}}, horiz, t);
  REQUIRE(p1.has_value());
  CHECK(p1->x == doctest::Approx(0));
  CHECK(p1->y == doctest::Approx(0));

  CHECK(!segment_line_intersection({{1, 1}, {2, 2}}, horiz, t).has_value());

  // Segment on the line: midpoint convention.
  auto p3 = segment_line_intersection({{-1, 0}, {1, 0}}, horiz, t);
  REQUIRE(p3.has_value());
  CHECK(p3->x == doctest::Approx(0));
}
