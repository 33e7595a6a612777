#include <doctest.h>

#include "noncvx/delaunay.hpp"
#include "noncvx/generate.hpp"

using namespace noncvx;

TEST_CASE("single triangle") {
  PointSet ps = PointSet::from_points({{-2, 0}, {2, 0}, {0, 1}});
  Triangulation t = Triangulation::build(ps);
  REQUIRE(t.triangle_count() == 1);
  CHECK(t.circumcenter(0).x == doctest::Approx(0.0));
  CHECK(t.circumcenter(0).y == doctest::Approx(-1.5));
  CHECK(t.hull_edges().size() == 3);

  VoronoiSkeleton vs = voronoi_skeleton(t);
  REQUIRE(vs.vertices.size() == 1);
  CHECK(vs.vertices[0].p.y == doctest::Approx(-1.5));
  CHECK(vs.edges.size() == 3);
  for (const auto& e : vs.edges) CHECK(e.is_ray);
}

TEST_CASE("cocircular square: lexicographic diagonal") {
  PointSet ps = PointSet::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  Triangulation t = Triangulation::build(ps);
  REQUIRE(t.triangle_count() == 2);
  // Both diagonals are Delaunay-valid; the tie breaks toward the diagonal
  // containing the lexicographically smallest point, here (0,0)-(1,1).
  const auto& pts = ps.points();
  int shared[2] = {-1, -1};
  for (int i = 0; i < 3; ++i)
    if (t.neighbors(0)[i] == 1) {
      shared[0] = t.triangle(0)[(i + 1) % 3];
      shared[1] = t.triangle(0)[(i + 2) % 3];
    }
  REQUIRE(shared[0] >= 0);
  Point2 lo = lex_less(pts[shared[0]], pts[shared[1]]) ? pts[shared[0]] : pts[shared[1]];
  Point2 hi = lex_less(pts[shared[0]], pts[shared[1]]) ? pts[shared[1]] : pts[shared[0]];
  CHECK(lo.x == 0.0);
  CHECK(lo.y == 0.0);
  CHECK(hi.x == 1.0);
  CHECK(hi.y == 1.0);

  VoronoiSkeleton vs = voronoi_skeleton(t);
  REQUIRE(vs.vertices.size() == 1);  // cocircular merge
  CHECK(vs.vertices[0].p.x == doctest::Approx(0.5));
  CHECK(vs.vertices[0].p.y == doctest::Approx(0.5));
  int rays = 0;
  for (const auto& e : vs.edges) rays += e.is_ray;
  CHECK(rays == 4);
  CHECK(vs.edges.size() == 4);  // the degenerate interior dual is dropped
}

TEST_CASE("rank-deficient input is rejected") {
  PointSet line = PointSet::from_points({{0, 0}, {1, 0}, {2, 0}, {5, 0}});
  CHECK_THROWS_AS(Triangulation::build(line), std::runtime_error);
}

TEST_CASE("random sets: empty circumcircle, areas, voronoi vertices") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    Shape shape = seed % 3 == 0   ? Shape::GridPerturbed
                  : seed % 3 == 1 ? Shape::UniformSquare
                                  : Shape::Annulus;
    PointSet ps = generate(seed, 100, shape);
    Triangulation t = Triangulation::build(ps);
    const double eps = ps.tol().eps();

    CHECK(t.empty_circumcircle_violation() <= eps);
    CHECK(t.triangle_area_sum() ==
          doctest::Approx(ps.hull().area()).epsilon(1e-9));

    VoronoiSkeleton vs = voronoi_skeleton(t);
    for (const auto& vx : vs.vertices) {
      double r = t.circumradius(vx.triangle);
      int at_min = 0;
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : ps.points()) nearest = std::min(nearest, dist(p, vx.p));
      for (const auto& p : ps.points())
        if (dist(p, vx.p) <= nearest + eps) ++at_min;
      CHECK(at_min >= 3);
      CHECK(nearest == doctest::Approx(r).epsilon(1e-7));
    }
  }
}

TEST_CASE("sumset-style lattice input stays consistent") {
  // Exact lattice: heavily cocircular and collinear-on-boundary.
  std::vector<Point2> pts;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  PointSet ps = PointSet::from_points(pts);
  Triangulation t = Triangulation::build(ps);
  CHECK(t.empty_circumcircle_violation() <= ps.tol().eps());
  CHECK(t.triangle_area_sum() == doctest::Approx(25.0).epsilon(1e-12));
}
