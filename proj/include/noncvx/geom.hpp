#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Planar primitives: points, segments, circles, convex polygons, hulls and
// membership tests. All fuzzy decisions (collinearity, boundary bands) route
// through a single relative epsilon scaled by the instance bounding box.

namespace noncvx {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline Point2 operator-(Point2 p) { return {-p.x, -p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist2(Point2 a, Point2 b) { return norm2(a - b); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// 90 degree counter-clockwise rotation.
inline Point2 rot90(Point2 p) { return {-p.y, p.x}; }

inline bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Process-wide default for the relative epsilon. The CLI may override it once
// at startup (flag or NONCONVEXITY_EPS); library code reads it when building
// tolerances.
double default_eps_rel();
void set_default_eps_rel(double eps_rel);

struct Tolerance {
  double eps_rel = 1e-9;
  double scale = 1.0;  // bounding-box diameter of the instance at hand

  double eps() const { return eps_rel * std::max(scale, 1.0); }
};

struct BBox {
  Point2 lo{0, 0};
  Point2 hi{0, 0};
  bool empty = true;

  void expand(Point2 p) {
    if (empty) {
      lo = hi = p;
      empty = false;
      return;
    }
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  double width() const { return empty ? 0.0 : hi.x - lo.x; }
  double height() const { return empty ? 0.0 : hi.y - lo.y; }
  double diameter() const { return empty ? 0.0 : std::hypot(width(), height()); }
  Point2 center() const { return {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)}; }
};

BBox bbox_of(const std::vector<Point2>& pts);

// Tolerance derived from a point cloud with the current default eps_rel.
Tolerance tolerance_for(const std::vector<Point2>& pts);

enum class Orient { Left, Right, Collinear };
enum class Containment { Inside, Boundary, Outside };

// Sign of cross(b-a, c-a); |value| <= tol.eps() counts as collinear.
Orient orientation(Point2 a, Point2 b, Point2 c, const Tolerance& tol);

struct Segment {
  Point2 p;
  Point2 q;

  double length() const { return dist(p, q); }
};

// A line given by a point and a (nonzero) direction.
struct Line {
  Point2 point;
  Point2 dir;
};

struct Circle {
  Point2 center;
  double radius = 0.0;
};

// Counter-clockwise vertex cycle, strictly convex, first vertex is the
// lexicographic minimum. One vertex encodes a point, two a segment.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  size_t size() const { return vertices.size(); }
  const Point2& operator[](size_t i) const { return vertices[i % vertices.size()]; }
  int rank() const {
    return vertices.size() >= 3 ? 2 : static_cast<int>(vertices.size()) - 1;
  }
  double area() const;
  BBox bounds() const { return bbox_of(vertices); }
  ConvexPolygon translated(Point2 t) const;
};

// Minimal CCW hull; collinear points interior to edges are removed. Throws on
// empty input. The tolerance defaults to one derived from the input cloud.
ConvexPolygon convex_hull(std::vector<Point2> pts,
                          std::optional<Tolerance> tol = std::nullopt);

// Orthogonal projection clamped to the segment, plus the distance to it.
std::pair<Point2, double> nearest_point_on_segment(Point2 x, const Segment& s);

// Distance from x to the polygon's boundary (the vertex/segment/edge cycle).
double distance_to_boundary(Point2 x, const ConvexPolygon& poly);

// Boundary when within tol.eps() of the boundary; degenerate polygons (rank
// < 2) classify as Boundary/Outside only.
Containment point_in_polygon(Point2 x, const ConvexPolygon& poly,
                             const Tolerance& tol);

// Throws "degenerate circumcircle" on collinear input.
Circle circumcircle(Point2 a, Point2 b, Point2 c);

// Smallest circle containing all points (Welzl). Throws on empty input.
Circle min_enclosing_circle(const std::vector<Point2>& pts);

// Unique crossing point when the segment's endpoints lie on opposite closed
// sides of the line; midpoint of the segment when it lies on the line; nullopt
// when the segment is strictly on one side.
std::optional<Point2> segment_line_intersection(const Segment& s, const Line& line,
                                                const Tolerance& tol);

// Parameter interval [t0,t1] of s inside the convex polygon (Cyrus-Beck), or
// nullopt when disjoint. Exact arithmetic (no epsilon): callers treat the
// clipped endpoints as boundary candidates.
std::optional<std::pair<double, double>> clip_segment_to_convex(
    const Segment& s, const ConvexPolygon& poly);

}  // namespace noncvx
