#include <doctest.h>

#include <cmath>

#include "noncvx/generate.hpp"
#include "noncvx/sumset.hpp"

using namespace noncvx;

namespace {

PointSet axis_pair_a(double d) { return PointSet::from_points({{0, 0}, {2 * d, 0}}); }
PointSet axis_pair_b(double d) { return PointSet::from_points({{0, 0}, {0, 2 * d}}); }

bool has_point(const PointSet& ps, Point2 q, double eps = 1e-12) {
  for (const auto& p : ps.points())
    if (dist(p, q) <= eps) return true;
  return false;
}

}  // namespace

TEST_CASE("minkowski_finite") {
  PointSet ab = minkowski_finite(axis_pair_a(3), axis_pair_b(4));
  REQUIRE(ab.size() == 4);
  CHECK(has_point(ab, {0, 0}));
  CHECK(has_point(ab, {6, 0}));
  CHECK(has_point(ab, {0, 8}));
  CHECK(has_point(ab, {6, 8}));

  PointSet a = PointSet::from_points({{1, 2}, {3, 4}, {5, 0}});
  PointSet idsum = minkowski_finite(a, PointSet::from_points({{0, 0}}));
  REQUIRE(idsum.size() == a.size());
  for (const auto& p : a.points()) CHECK(has_point(idsum, p));

  PointSet line = minkowski_finite(PointSet::from_reals({0, 1}), PointSet::from_reals({0, 1}));
  REQUIRE(line.size() == 3);  // 1+0 and 0+1 merge
  CHECK(line.declared_dim() == 1);
}

TEST_CASE("minkowski_finite commutative and associative up to dedup") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    PointSet a = generate(seed, 6, Shape::UniformSquare);
    PointSet b = generate(seed + 1, 5, Shape::Annulus);
    PointSet c = generate(seed + 2, 4, Shape::GridPerturbed);
    PointSet ab = minkowski_finite(a, b), ba = minkowski_finite(b, a);
    REQUIRE(ab.size() == ba.size());
    for (size_t i = 0; i < ab.size(); ++i)
      CHECK(dist(ab.points()[i], ba.points()[i]) <= ab.tol().eps());
    PointSet l = minkowski_finite(ab, c), r = minkowski_finite(a, minkowski_finite(b, c));
    REQUIRE(l.size() == r.size());
    for (size_t i = 0; i < l.size(); ++i)
      CHECK(dist(l.points()[i], r.points()[i]) <= 4 * l.tol().eps());
  }
}

TEST_CASE("minkowski segment + polygon") {
  ConvexPolygon sq = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  ConvexPolygon rect = minkowski_segment_polygon({{0, 0}, {1, 0}}, sq);
  REQUIRE(rect.size() == 4);
  CHECK(rect.bounds().width() == doctest::Approx(2.0));
  CHECK(rect.bounds().height() == doctest::Approx(1.0));

  ConvexPolygon tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
  ConvexPolygon moved = minkowski_segment_polygon({{5, 5}, {5, 5}}, tri);
  REQUIRE(moved.size() == 3);
  CHECK(moved.vertices[0].x == doctest::Approx(5.0));
  CHECK(moved.vertices[0].y == doctest::Approx(5.0));

  ConvexPolygon big = convex_hull({{0, 0}, {10, 0}, {0, 10}});
  ConvexPolygon sum = minkowski_segment_polygon({{0, 0}, {0, 10}}, big);
  Tolerance t{1e-9, 20};
  CHECK(point_in_polygon({6, 12}, sum, t) == Containment::Inside);
  CHECK(point_in_polygon({10, 0}, sum, t) == Containment::Boundary);
  CHECK(point_in_polygon({0, 20}, sum, t) == Containment::Boundary);
  CHECK(point_in_polygon({10, 10}, sum, t) == Containment::Boundary);
}

TEST_CASE("min_crossing_pair") {
  Tolerance tol{1e-9, 30};
  PointSet s = PointSet::from_points({{10, 0}, {20, 0}, {10, 10}});
  // Line x + y = 12: two crossing pairs at distance 10; the lexicographic
  // tie-break on (s1, s2) picks s1 = (10,10).
  Line l{{12, 0}, {1, -1}};
  auto [s1, s2] = min_crossing_pair(s, l, tol);
  CHECK(s1.x == doctest::Approx(10));
  CHECK(s1.y == doctest::Approx(10));
  CHECK(s2.x == doctest::Approx(10));
  CHECK(s2.y == doctest::Approx(0));

  // A point on the line pairs with itself.
  PointSet on = PointSet::from_points({{6, 6}, {0, 20}, {20, 20}});
  auto [p1, p2] = min_crossing_pair(on, l, tol);
  CHECK(p1.x == doctest::Approx(6));
  CHECK(p2.x == doctest::Approx(6));
  CHECK(dist(p1, p2) == doctest::Approx(0));

  PointSet straddle = PointSet::from_points({{0, 0}, {20, 20}});
  auto [q1, q2] = min_crossing_pair(straddle, l, tol);
  CHECK(dist(q1, q2) == doctest::Approx(std::sqrt(800.0)));

  PointSet oneside = PointSet::from_points({{0, 0}, {1, 1}});
  CHECK_THROWS_AS(min_crossing_pair(oneside, l, tol), std::runtime_error);
}

TEST_CASE("decompose hand trace and branches") {
  PointSet a = PointSet::from_points({{0, 0}, {10, 0}, {0, 10}});
  Decomposer dec(a, a);

  DecomposeResult w = dec.decompose({6, 6});
  REQUIRE(w.kind == DecomposeResult::Kind::Witness);
  const auto& pw = *w.witness;
  double two_d = 2.0 * dec.d_a();  // d = 5*sqrt(2) for this right triangle
  CHECK(dec.d_a() == doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(pw.side_a_len() <= two_d + 1e-9);
  CHECK(pw.side_b_len() <= two_d + 1e-9);
  auto cs = pw.corner_sums();
  ConvexPolygon para = convex_hull(std::vector<Point2>(cs.begin(), cs.end()));
  CHECK(point_in_polygon({6, 6}, para, a.tol()) != Containment::Outside);
  // Rectangle bound from the witness sides.
  double dx2 = std::numeric_limits<double>::infinity();
  for (const auto& s : dec.sum().points()) dx2 = std::min(dx2, dist2({6, 6}, s));
  CHECK(dx2 <= 0.25 * pw.side_a_len() * pw.side_a_len() +
                   0.25 * pw.side_b_len() * pw.side_b_len() + 1e-9);

  DecomposeResult ia = dec.decompose({0, 0});
  CHECK(ia.kind == DecomposeResult::Kind::InATranslate);
  CHECK(ia.translate.x == doctest::Approx(0));
  CHECK(ia.translate.y == doctest::Approx(0));

  CHECK(dec.decompose({100, 100}).kind == DecomposeResult::Kind::NotInHull);

  PointSet flat = PointSet::from_points({{0, 0}, {1, 0}, {2, 0}});
  CHECK_THROWS_AS(decompose(flat, a, {1, 1}), std::invalid_argument);
}

TEST_CASE("decompose totality on random full-rank pairs") {
  Rng rng(123);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    PointSet a = generate(seed + 10, 8, Shape::UniformSquare);
    PointSet b = generate(seed + 20, 7, Shape::Annulus);
    if (a.rank() < 2 || b.rank() < 2) continue;
    Decomposer dec(a, b);
    for (int k = 0; k < 30; ++k) {
      Point2 x = uniform_point_in_polygon(dec.sum().hull(), rng);
      DecomposeResult r = dec.decompose(x);
      CHECK(r.kind != DecomposeResult::Kind::NotInHull);
      if (r.kind == DecomposeResult::Kind::Witness) {
        CHECK(r.witness->side_a_len() <= 2 * dec.d_a() + 1e-7);
        CHECK(r.witness->side_b_len() <= 2 * dec.d_b() + 1e-7);
      }
    }
  }
}

TEST_CASE("translate bound") {
  PointSet a = PointSet::from_points({{0, 0}, {2, 0}});
  PointSet b = PointSet::from_points({{5, 5}, {6, 7}, {9, 1}});
  TranslateBoundReport r = translate_bound_check(a, b, 500, 9);
  CHECK(r.violations == 0);
  CHECK(r.max_slack <= 1e-9 * 20);

  // Singleton B: pure translation, d(A+B) = d(A).
  PointSet ab = minkowski_finite(a, PointSet::from_points({{3, 3}}));
  CHECK(d_exact(ab).value == doctest::Approx(d_exact(a).value).epsilon(1e-12));
}

TEST_CASE("boundary decomposition identity") {
  PointSet a = PointSet::from_points({{0, 0}, {4, 0}, {0, 3}});
  PointSet b = PointSet::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Rng rng(55);
  std::vector<Point2> samples;
  for (int i = 0; i < 4000; ++i)
    samples.push_back({rng.uniform(-2, 7), rng.uniform(-2, 6)});
  samples.push_back({100, 100});  // far outside: both sides false
  samples.push_back({0, 0});      // in conv(A): both sides true
  auto rep = boundary_decomposition_check(a, b, samples);
  CHECK(rep.mismatches == 0);
  CHECK(rep.samples == 4002);

  PointSet flat = PointSet::from_reals({0, 1, 2});
  CHECK_THROWS_AS(boundary_decomposition_check(flat, b, samples), std::invalid_argument);
}

TEST_CASE("subadditivity equality cases") {
  for (auto [da, db] : std::vector<std::pair<double, double>>{{3, 4}, {1, 1}, {0, 5}}) {
    SubadditivityRecord rec = check_subadditivity(axis_pair_a(da), axis_pair_b(db));
    CHECK(rec.d_a == doctest::Approx(da).epsilon(1e-12));
    CHECK(rec.d_b == doctest::Approx(db).epsilon(1e-12));
    CHECK(rec.d_ab == doctest::Approx(std::hypot(da, db)).epsilon(1e-9));
    CHECK(rec.ratio == doctest::Approx(1.0).epsilon(1e-9));
  }
  // B a single point: the ratio degenerates to dA^2/dA^2.
  SubadditivityRecord rec =
      check_subadditivity(axis_pair_a(2), PointSet::from_points({{7, -1}}));
  CHECK(rec.d_b == 0.0);
  CHECK(rec.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("subadditivity on random pairs") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Shape sa = seed % 4 == 0 ? Shape::Collinear : Shape::UniformSquare;
    Shape sb = seed % 3 == 0 ? Shape::GridPerturbed : Shape::Annulus;
    PointSet a = generate(seed, 2 + static_cast<int>(seed) % 14, sa);
    PointSet b = seed % 5 == 0 ? a : generate(seed + 1000, 2 + static_cast<int>(seed) % 9, sb);
    SubadditivityRecord rec = check_subadditivity(a, b);
    CHECK(rec.ratio <= 1.0 + 1e-7);
  }
}

TEST_CASE("meyer 1d bound") {
  std::vector<PointSet> fam;
  fam.push_back(PointSet::from_reals({0, 6}));
  fam.push_back(PointSet::from_reals({0, 2}));
  fam.push_back(PointSet::from_reals({0, 2}));
  auto [lhs, bound] = meyer_bound_1d(fam);
  CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound == doctest::Approx(1.0).epsilon(1e-12));

  auto [l1, b1] = meyer_bound_1d({PointSet::from_reals({0, 5, 6})});
  CHECK(l1 == doctest::Approx(2.5));
  CHECK(b1 == doctest::Approx(2.5));

  auto [l2, b2] = meyer_bound_1d({PointSet::from_reals({0, 2}), PointSet::from_reals({0, 2})});
  CHECK(l2 == doctest::Approx(1.0));
  CHECK(b2 == doctest::Approx(1.0));

  std::vector<PointSet> bad;
  bad.push_back(PointSet::from_reals({0, 1}));
  bad.push_back(PointSet::from_points({{0, 0}, {1, 1}}));
  CHECK_THROWS_AS(meyer_bound_1d(bad), std::invalid_argument);
}
