#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "noncvx/measures.hpp"
#include "noncvx/pointset.hpp"

namespace noncvx {

// Deduplicated set of all pairwise sums.
PointSet minkowski_finite(const PointSet& a, const PointSet& b);

// Minkowski sum of a segment with a convex polygon: hull of the polygon
// translated to both segment endpoints.
ConvexPolygon minkowski_segment_polygon(const Segment& s, const ConvexPolygon& p);

// Certifies that a query point lies in [a1,a2] + [b1,b2] with segment
// endpoints drawn from A and B and side lengths at most 2 d(A), 2 d(B).
struct ParallelogramWitness {
  Point2 a1, a2;  // from A
  Point2 b1, b2;  // from B
  double d_a = 0.0, d_b = 0.0;  // d(A), d(B) at construction time

  std::array<Point2, 4> corner_sums() const {
    return {a1 + b1, a1 + b2, a2 + b1, a2 + b2};
  }
  double side_a_len() const { return dist(a1, a2); }
  double side_b_len() const { return dist(b1, b2); }
};

struct DecomposeResult {
  enum class Kind { InATranslate, InBTranslate, Witness, NotInHull };
  Kind kind = Kind::NotInHull;
  Point2 translate{0, 0};  // the b (InATranslate) or a (InBTranslate)
  std::optional<ParallelogramWitness> witness;
};

// Constructive decomposition of x in conv(A+B) for full-dimensional A, B:
// either x lies in conv(A)+b, in a+conv(B), or in a parallelogram witness.
// Throws std::invalid_argument for rank-deficient inputs and
// std::logic_error (with a trace) if the construction fails.
DecomposeResult decompose(const PointSet& a, const PointSet& b, Point2 x);

// Same decomposition with the per-pair state (sumset, hulls, edge pieces,
// d values) precomputed once, for query batches.
class Decomposer {
 public:
  Decomposer(const PointSet& a, const PointSet& b);
  DecomposeResult decompose(Point2 x) const;

  const PointSet& sum() const { return ab_; }
  double d_a() const { return da_; }
  double d_b() const { return db_; }

 private:
  PointSet a_, b_, at_, bt_, ab_;
  Point2 a0_, b0_;
  double da_ = 0.0, db_ = 0.0;
  std::vector<ConvexPolygon> pieces_;  // hull edge of A (+) conv(B), translated frame
};

// The pair (s1, s2) of S minimizing |s1-s2| with s1 in the upper closed
// half-plane of the line and s2 in the lower (points on the line count for
// both; a point may pair with itself). Ties break lexicographically on
// (s1, s2). Throws when one half-plane is empty.
std::pair<Point2, Point2> min_crossing_pair(const PointSet& s, const Line& line,
                                            const Tolerance& tol);

struct DecompositionCheckReport {
  long samples = 0;
  long mismatches = 0;
};

// Samples the identity conv(A+B) = conv(A) u (boundary(conv(A)) + conv(B))
// after translating the designated origins; counts membership mismatches.
DecompositionCheckReport boundary_decomposition_check(
    const PointSet& a, const PointSet& b, const std::vector<Point2>& samples);

struct TranslateBoundReport {
  long trials = 0;
  long violations = 0;
  double max_slack = -std::numeric_limits<double>::infinity();
};

// Samples x = (point of conv(A)) + (b in B) and checks d(x, A+B) <= d(A).
TranslateBoundReport translate_bound_check(const PointSet& a, const PointSet& b,
                                           long trials, uint64_t seed);

struct SubadditivityRecord {
  double d_a = 0.0, d_b = 0.0, d_ab = 0.0;
  double ratio = 0.0;  // d_ab^2 / (d_a^2 + d_b^2); 1 when both inputs are points
  Point2 w_a, w_b, w_ab;
};

SubadditivityRecord check_subadditivity(const PointSet& a, const PointSet& b);

// 1D bound for families of collinear sets along a common direction:
// d(sum A_i) <= max_j (d(A_j) - sum_{i>j} d(A_i)) with d's sorted descending.
// Returns (lhs, bound). Throws on non-collinear input.
std::pair<double, double> meyer_bound_1d(const std::vector<PointSet>& sets);

}  // namespace noncvx
