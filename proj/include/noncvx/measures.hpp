#pragma once

#include "noncvx/delaunay.hpp"
#include "noncvx/pointset.hpp"

namespace noncvx {

enum class MeasureMethod { Exact, Grid };

// A measure value plus the point of conv(A) achieving it.
struct MeasureResult {
  double value = 0.0;
  Point2 witness{0, 0};
  MeasureMethod method = MeasureMethod::Exact;
};

// Hausdorff distance from A to conv(A): the largest nearest-site distance
// over conv(A). Exact via Voronoi candidates (vertices inside the hull plus
// Voronoi-edge / hull-boundary crossings); witness ties break
// lexicographically.
MeasureResult d_exact(const PointSet& a);

// Independent brute-force oracle: max over an in-hull grid of the bounding
// box (resolution x resolution) of the nearest-site distance.
MeasureResult d_grid_oracle(const PointSet& a, int resolution);

// Diagonal of one grid cell as used by d_grid_oracle, for sandwich bounds.
double grid_step_diagonal(const PointSet& a, int resolution);

// Minimal weighted second moment of x over convex representations from A:
// v^2(A,x) = min { sum p_i |a_i - x|^2 : sum p_i a_i = x, p simplex }.
// Exact by Caratheodory enumeration over singletons, pairs and triangles;
// O(n^3). Throws "infeasible point" when x lies outside conv(A).
double v2_at_point(const PointSet& a, Point2 x);

// Effective standard deviation v(A) = sup_x sqrt(v^2(A,x)), computed from the
// Delaunay structure: per triangle v^2 = R^2 - dist(c, T)^2, maximized at the
// circumcenter clipped to the triangle.
MeasureResult v_exact(const PointSet& a);

// Oracle counterpart of v_exact: maximizes v2_at_point over an in-hull grid
// augmented with samples along the hull boundary.
MeasureResult v_grid_oracle(const PointSet& a, int resolution);

// Chebyshev radius: radius (and center, as witness) of the smallest
// enclosing circle.
MeasureResult rad(const PointSet& a);

struct Measures {
  MeasureResult d, v, rad;
};

// d, v and rad sharing one Delaunay construction.
Measures measure_all(const PointSet& a);

// Exact nearest-site queries over a uniform bucket grid.
class NearestSiteIndex {
 public:
  explicit NearestSiteIndex(const PointSet& a);
  double nearest_dist(Point2 q) const;

 private:
  const std::vector<Point2>& pts_;
  BBox box_;
  double cell_ = 1.0;
  int nx_ = 1, ny_ = 1;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace noncvx
