#include "noncvx/pointset.hpp"

#include <algorithm>

namespace noncvx {

PointSet PointSet::from_points(std::vector<Point2> pts, int declared_dim) {
  if (pts.empty()) throw std::invalid_argument("empty set");
  if (declared_dim != 1 && declared_dim != 2)
    throw std::invalid_argument("dim must be 1 or 2");
  for (const auto& p : pts)
    if (!finite(p)) throw std::invalid_argument("non-finite coordinate");

  PointSet ps;
  ps.dim_ = declared_dim;
  ps.box_ = bbox_of(pts);
  ps.tol_ = Tolerance{default_eps_rel(), ps.box_.diameter()};

  std::sort(pts.begin(), pts.end(), lex_less);
  const double eps = ps.tol_.eps();
  std::vector<Point2> kept;
  kept.reserve(pts.size());
  for (const auto& p : pts) {
    bool dup = false;
    for (size_t j = kept.size(); j-- > 0;) {
      if (p.x - kept[j].x > eps) break;  // sorted: earlier points only get farther
      if (dist(p, kept[j]) <= eps) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  ps.pts_ = std::move(kept);
  ps.hull_ = convex_hull(ps.pts_, ps.tol_);
  return ps;
}

PointSet PointSet::from_reals(const std::vector<double>& ts) {
  std::vector<Point2> pts;
  pts.reserve(ts.size());
  for (double t : ts) pts.push_back({t, 0.0});
  return from_points(std::move(pts), 1);
}

PointSet PointSet::translated(Point2 t) const {
  std::vector<Point2> moved;
  moved.reserve(pts_.size());
  for (const auto& p : pts_) moved.push_back(p + t);
  return from_points(std::move(moved), dim_);
}

Point2 PointSet::line_origin() const { return hull_.vertices.front(); }

Point2 PointSet::line_dir() const {
  if (hull_.size() < 2) return {1.0, 0.0};
  Point2 d = hull_.vertices[1] - hull_.vertices[0];
  return (1.0 / norm(d)) * d;  // lex-min to lex-max: already lex-positive
}

std::vector<double> PointSet::line_params() const {
  Point2 o = line_origin(), u = line_dir();
  std::vector<double> ts;
  ts.reserve(pts_.size());
  for (const auto& p : pts_) ts.push_back(dot(p - o, u));
  std::sort(ts.begin(), ts.end());
  return ts;
}

}  // namespace noncvx
