#pragma once

#include <string>

#include "noncvx/pointset.hpp"
#include "noncvx/rng.hpp"

namespace noncvx {

enum class Shape { UniformSquare, Annulus, GridPerturbed, Collinear };

Shape parse_shape(const std::string& name);
std::string shape_name(Shape s);

// Deterministic seeded instance. Generators (all within the unit square):
//   uniform-square: i.i.d. uniform coordinates;
//   annulus: uniform angle, radius uniform in [0.25, 0.5] about (0.5, 0.5);
//   grid-perturbed: ceil(sqrt(n)) lattice, cell centers jittered by
//     +-0.2 cell per axis;
//   collinear: random direction through (0.5, 0.5), offsets uniform (rank 1).
PointSet generate(uint64_t seed, int n, Shape shape);

// Uniform sample over a convex polygon (area-weighted fan; degenerate ranks
// sample the segment / the point).
Point2 uniform_point_in_polygon(const ConvexPolygon& poly, Rng& rng);

}  // namespace noncvx
