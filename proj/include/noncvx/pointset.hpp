#pragma once

#include <vector>

#include "noncvx/geom.hpp"

namespace noncvx {

// A finite planar point set: the universal input. Points are deduplicated
// within the instance tolerance and kept lexicographically sorted, so the
// first point is the designated lexicographic minimum. 1D sets are embedded
// on the x axis; collinear 2D input is detected by rank().
class PointSet {
 public:
  static PointSet from_points(std::vector<Point2> pts, int declared_dim = 2);
  static PointSet from_reals(const std::vector<double>& ts);

  const std::vector<Point2>& points() const { return pts_; }
  size_t size() const { return pts_.size(); }
  int declared_dim() const { return dim_; }

  // Affine dimension: 0 = point, 1 = collinear, 2 = full-dimensional.
  int rank() const { return hull_.rank(); }
  const ConvexPolygon& hull() const { return hull_; }
  const Tolerance& tol() const { return tol_; }
  BBox bounds() const { return box_; }

  PointSet translated(Point2 t) const;

  // Supporting line for rank <= 1 sets: unit direction from the lex-min hull
  // vertex toward the lex-max one (rank 0 uses (1,0)).
  Point2 line_origin() const;
  Point2 line_dir() const;
  // Sorted projections of all points onto the supporting line.
  std::vector<double> line_params() const;

 private:
  PointSet() = default;

  std::vector<Point2> pts_;
  int dim_ = 2;
  ConvexPolygon hull_;
  Tolerance tol_;
  BBox box_;
};

}  // namespace noncvx
