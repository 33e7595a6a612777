#pragma once

#include <array>
#include <vector>

#include "noncvx/pointset.hpp"

namespace noncvx {

// Delaunay triangulation of a full-dimensional point set, plus the dual
// Voronoi skeleton. Construction is deterministic: sites are consumed in
// lexicographic order and cocircular ties are canonicalized toward the
// diagonal with the lexicographically smallest endpoint.
class Triangulation {
 public:
  struct HullEdge {
    int u, v;  // site indices, directed CCW around the hull
    int tri;   // adjacent triangle
  };

  // Throws std::runtime_error("rank deficient") when rank(ps) < 2.
  static Triangulation build(const PointSet& ps);

  const PointSet& sites() const { return sites_; }
  int triangle_count() const { return static_cast<int>(tri_.size()); }
  const std::array<int, 3>& triangle(int t) const { return tri_[t]; }
  const std::array<int, 3>& neighbors(int t) const { return nbr_[t]; }
  Point2 circumcenter(int t) const { return cc_[t]; }
  double circumradius(int t) const { return r_[t]; }
  const std::vector<HullEdge>& hull_edges() const { return hull_edges_; }

  double max_circumradius() const;
  double triangle_area_sum() const;

  // Empty-circumcircle audit: max over (triangle, foreign site) of
  // circumradius - dist(site, circumcenter). Valid triangulations stay below
  // the instance epsilon. Brute force O(T*n); meant for tests.
  double empty_circumcircle_violation() const;

 private:
  explicit Triangulation(PointSet ps) : sites_(std::move(ps)) {}

  PointSet sites_;
  std::vector<std::array<int, 3>> tri_;  // CCW site indices
  std::vector<std::array<int, 3>> nbr_;  // nbr_[t][i] faces edge opposite tri_[t][i]; -1 = hull
  std::vector<Point2> cc_;
  std::vector<double> r_;
  std::vector<HullEdge> hull_edges_;
};

struct VoronoiVertex {
  Point2 p;      // merged circumcenter
  int triangle;  // lowest-index generating triangle
};

struct VoronoiEdge {
  Point2 a, b;        // rays carry their clipped proxy endpoint in b
  int site_i, site_j; // the two sites this edge bisects
  bool is_ray = false;
  double proxy_len = 0.0;
};

struct VoronoiSkeleton {
  std::vector<VoronoiVertex> vertices;
  std::vector<VoronoiEdge> edges;
};

// Vertices are circumcenters merged within the instance epsilon; interior
// Delaunay edges become segments between adjacent circumcenters, hull edges
// become outward rays represented by long finite proxies.
VoronoiSkeleton voronoi_skeleton(const Triangulation& t);

}  // namespace noncvx
