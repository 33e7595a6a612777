#include "noncvx/geom.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace noncvx {

namespace {
std::atomic<double> g_eps_rel{1e-9};
}

double default_eps_rel() { return g_eps_rel.load(); }
void set_default_eps_rel(double eps_rel) {
  if (!(eps_rel > 0.0)) throw std::invalid_argument("eps_rel must be positive");
  g_eps_rel.store(eps_rel);
}

BBox bbox_of(const std::vector<Point2>& pts) {
  BBox b;
  for (const auto& p : pts) b.expand(p);
  return b;
}

Tolerance tolerance_for(const std::vector<Point2>& pts) {
  return Tolerance{default_eps_rel(), bbox_of(pts).diameter()};
}

Orient orientation(Point2 a, Point2 b, Point2 c, const Tolerance& tol) {
  double v = cross(b - a, c - a);
  if (std::abs(v) <= tol.eps()) return Orient::Collinear;
  return v > 0 ? Orient::Left : Orient::Right;
}

double ConvexPolygon::area() const {
  double s = 0.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    s += cross(vertices[i], vertices[i + 1]);
  if (vertices.size() >= 3) s += cross(vertices.back(), vertices.front());
  return 0.5 * s;
}

ConvexPolygon ConvexPolygon::translated(Point2 t) const {
  ConvexPolygon out;
  out.vertices.reserve(vertices.size());
  for (const auto& v : vertices) out.vertices.push_back(v + t);
  return out;
}

ConvexPolygon convex_hull(std::vector<Point2> pts, std::optional<Tolerance> tol) {
  if (pts.empty()) throw std::invalid_argument("empty set");
  for (const auto& p : pts)
    if (!finite(p)) throw std::invalid_argument("non-finite coordinate");
  Tolerance t = tol ? *tol : tolerance_for(pts);

  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());

  ConvexPolygon poly;
  if (pts.size() == 1) {
    poly.vertices = {pts[0]};
    return poly;
  }

  // Monotone chain with strict left turns; collinear mid points are popped.
  std::vector<Point2> h(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {  // lower
    while (k >= 2 && orientation(h[k - 2], h[k - 1], p, t) != Orient::Left) --k;
    h[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
    while (k >= lower && orientation(h[k - 2], h[k - 1], *it, t) != Orient::Left) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);  // last point repeats the first
  poly.vertices = std::move(h);
  return poly;
}

std::pair<Point2, double> nearest_point_on_segment(Point2 x, const Segment& s) {
  Point2 d = s.q - s.p;
  double len2 = norm2(d);
  if (len2 == 0.0) return {s.p, dist(x, s.p)};
  double t = dot(x - s.p, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  Point2 proj = s.p + t * d;
  return {proj, dist(x, proj)};
}

double distance_to_boundary(Point2 x, const ConvexPolygon& poly) {
  const auto& v = poly.vertices;
  if (v.empty()) throw std::invalid_argument("empty polygon");
  if (v.size() == 1) return dist(x, v[0]);
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    const Segment e{v[i], v[(i + 1) % v.size()]};
    best = std::min(best, nearest_point_on_segment(x, e).second);
    if (v.size() == 2) break;  // a segment has one edge
  }
  return best;
}

Containment point_in_polygon(Point2 x, const ConvexPolygon& poly,
                             const Tolerance& tol) {
  const auto& v = poly.vertices;
  if (v.empty()) throw std::invalid_argument("empty polygon");
  double db = distance_to_boundary(x, poly);
  if (db <= tol.eps()) return Containment::Boundary;
  if (v.size() <= 2) return Containment::Outside;
  // Farther than eps from the boundary: a plain sign test is decisive.
  for (size_t i = 0; i < v.size(); ++i) {
    if (cross(v[(i + 1) % v.size()] - v[i], x - v[i]) <= 0.0)
      return Containment::Outside;
  }
  return Containment::Inside;
}

Circle circumcircle(Point2 a, Point2 b, Point2 c) {
  Point2 B = b - a, C = c - a;
  double d = 2.0 * cross(B, C);
  Tolerance tol = tolerance_for({a, b, c});
  if (std::abs(cross(B, C)) <= tol.eps())
    throw std::invalid_argument("degenerate circumcircle");
  double nb = norm2(B), nc = norm2(C);
  Point2 u{(C.y * nb - B.y * nc) / d, (B.x * nc - C.x * nb) / d};
  return Circle{a + u, norm(u)};
}

namespace {

bool circle_contains(const Circle& c, Point2 p) {
  // Tiny relative slack keeps Welzl stable under roundoff.
  return dist(p, c.center) <= c.radius * (1.0 + 1e-12) + 1e-300;
}

Circle circle_two(Point2 a, Point2 b) {
  Point2 m = 0.5 * (a + b);
  return Circle{m, 0.5 * dist(a, b)};
}

Circle circle_three(Point2 a, Point2 b, Point2 c) {
  Circle d1 = circle_two(a, b);
  if (circle_contains(d1, c)) return d1;
  Circle d2 = circle_two(a, c);
  if (circle_contains(d2, b)) return d2;
  Circle d3 = circle_two(b, c);
  if (circle_contains(d3, a)) return d3;
  return circumcircle(a, b, c);
}

}  // namespace

Circle min_enclosing_circle(const std::vector<Point2>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty set");
  std::vector<Point2> p = pts;
  // Fixed-seed shuffle: expected linear time, fully deterministic output.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::shuffle(p.begin(), p.end(), rng);

  Circle c{p[0], 0.0};
  for (size_t i = 1; i < p.size(); ++i) {
    if (circle_contains(c, p[i])) continue;
    c = Circle{p[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (circle_contains(c, p[j])) continue;
      c = circle_two(p[i], p[j]);
      for (size_t k = 0; k < j; ++k) {
        if (circle_contains(c, p[k])) continue;
        c = circle_three(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

std::optional<Point2> segment_line_intersection(const Segment& s, const Line& line,
                                                const Tolerance& tol) {
  double len = norm(line.dir);
  if (len == 0.0) throw std::invalid_argument("zero line direction");
  Point2 d = (1.0 / len) * line.dir;
  double sp = cross(d, s.p - line.point);  // signed distances to the line
  double sq = cross(d, s.q - line.point);
  double eps = tol.eps();
  bool on_p = std::abs(sp) <= eps, on_q = std::abs(sq) <= eps;
  if (on_p && on_q) return 0.5 * (s.p + s.q);  // segment lies on the line
  if ((sp > eps && sq > eps) || (sp < -eps && sq < -eps)) return std::nullopt;
  if (on_p) return s.p;
  if (on_q) return s.q;
  double t = sp / (sp - sq);
  return s.p + std::clamp(t, 0.0, 1.0) * (s.q - s.p);
}

std::optional<std::pair<double, double>> clip_segment_to_convex(
    const Segment& s, const ConvexPolygon& poly) {
  const auto& v = poly.vertices;
  if (v.size() < 3) return std::nullopt;
  double t0 = 0.0, t1 = 1.0;
  Point2 d = s.q - s.p;
  for (size_t i = 0; i < v.size(); ++i) {
    Point2 n = rot90(v[(i + 1) % v.size()] - v[i]);  // inward for CCW
    double denom = dot(n, d);
    double num = dot(n, s.p - v[i]);
    if (denom == 0.0) {
      if (num < 0.0) return std::nullopt;  // parallel and outside
      continue;
    }
    double t = -num / denom;
    if (denom > 0.0)
      t0 = std::max(t0, t);
    else
      t1 = std::min(t1, t);
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

}  // namespace noncvx
