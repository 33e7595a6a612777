#pragma once

#include <array>
#include <vector>

#include "noncvx/geom.hpp"

namespace noncvx {

enum class TriangleKind { Acute, Right, Obtuse };

struct TriangleSpec {
  Point2 v1, v2, v3;

  // Side lengths sorted ascending.
  std::array<double, 3> sorted_sides() const;
  double area() const { return 0.5 * std::abs(cross(v2 - v1, v3 - v1)); }
};

// By the sign of (longest side)^2 - (sum of squares of the others); a
// relative band of eps around zero classifies Right. Throws on degenerate
// input.
TriangleKind classify_triangle(const TriangleSpec& t);

// Hausdorff distance to convex hull of the vertex set:
//   acute  -> circumradius,
//   right  -> hypotenuse / 2,
//   obtuse -> b^2 c / (b^2 + c^2 - a^2) with sides relabeled a <= b < c.
double triangle_d(const TriangleSpec& t);

// Parallelogram with side lengths a <= x and smaller angle gamma in
// (0, pi/2]; cos(gamma) in [0, 1).
struct ParallelogramSpec {
  double side_a = 1.0;
  double side_x = 1.0;
  double gamma_rad = 1.5707963267948966;

  // Corners (0,0), (x,0), (x + a cos g, a sin g), (a cos g, a sin g).
  std::array<Point2, 4> corners() const;
};

// Case split on cos(gamma) <=> a/x: the sharp-angle regime takes the obtuse
// max formula, otherwise the circumradius of the half triangle. At the case
// boundary both are evaluated and must agree.
double parallelogram_d(const ParallelogramSpec& p);

struct MonotonicityReport {
  double d90 = 0.0;
  std::vector<double> values;    // d at each grid angle, ascending gamma
  double max_violation = 0.0;    // max of monotonicity / d90-bound slack
};

// Audits d(P_gamma) nondecreasing in gamma and bounded by d(P_90) over an
// ascending angle grid within (0, pi/2].
MonotonicityReport parallelogram_monotonicity_audit(double a, double x,
                                                    std::vector<double> gammas_rad);

}  // namespace noncvx
