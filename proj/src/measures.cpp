#include "noncvx/measures.hpp"

#include <algorithm>
#include <limits>

namespace noncvx {

namespace {

struct Candidate {
  Point2 p;
  double fast;  // upper bound on the true nearest-site distance at p
};

double nearest_site_dist(const std::vector<Point2>& pts, Point2 q) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : pts) best = std::min(best, dist2(q, s));
  return std::sqrt(best);
}

// Half of the largest gap between consecutive projections; witness at the
// midpoint of that gap (first such gap wins ties, which is also the
// lexicographically smallest witness along the line).
MeasureResult rank1_gap_measure(const PointSet& a) {
  auto ts = a.line_params();
  double best = 0.0, mid = ts.front();
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    double gap = ts[i + 1] - ts[i];
    if (gap > 2.0 * best) {
      best = 0.5 * gap;
      mid = 0.5 * (ts[i] + ts[i + 1]);
    }
  }
  return {best, a.line_origin() + mid * a.line_dir(), MeasureMethod::Exact};
}

// Clip the line m + s*dir (unit dir) against a CCW polygon; returns the
// parameter interval intersected with [lo, hi], or nullopt.
std::optional<std::pair<double, double>> clip_param_line(
    Point2 m, Point2 dir, double lo, double hi, const ConvexPolygon& poly) {
  const auto& v = poly.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    Point2 n = rot90(v[(i + 1) % v.size()] - v[i]);  // inward for CCW
    double denom = dot(n, dir);
    double num = dot(n, m - v[i]);
    if (denom == 0.0) {
      if (num < 0.0) return std::nullopt;
      continue;
    }
    double t = -num / denom;
    if (denom > 0.0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
    if (lo > hi) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

MeasureResult d_exact_impl(const PointSet& a, const Triangulation& tri) {
  const auto& pts = a.points();
  const ConvexPolygon& hull = a.hull();
  const Tolerance& tol = a.tol();
  VoronoiSkeleton vs = voronoi_skeleton(tri);

  std::vector<Candidate> cands;
  for (const auto& vx : vs.vertices) {
    if (point_in_polygon(vx.p, hull, tol) != Containment::Outside)
      cands.push_back({vx.p, tri.circumradius(vx.triangle)});
  }
  for (const auto& e : vs.edges) {
    // Work in the bisector parametrization of the two generating sites: the
    // anchor and direction stay well-conditioned even when a sliver pushes
    // the circumcenter endpoints far away.
    Point2 si = pts[e.site_i], sj = pts[e.site_j];
    Point2 m = 0.5 * (si + sj);
    Point2 dir = rot90(sj - si);
    dir = (1.0 / norm(dir)) * dir;
    double s0 = dot(e.a - m, dir), s1 = dot(e.b - m, dir);
    double lo = std::min(s0, s1), hi = std::max(s0, s1);
    auto span = clip_param_line(m, dir, lo, hi, hull);
    if (!span) continue;
    auto [t0, t1] = *span;
    if (t0 > lo) {
      Point2 x = m + t0 * dir;
      cands.push_back({x, dist(x, si)});
    }
    if (t1 < hi) {
      Point2 x = m + t1 * dir;
      cands.push_back({x, dist(x, si)});
    }
  }
  if (cands.empty()) throw std::logic_error("no largest-empty-circle candidates");

  std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
    if (l.fast != r.fast) return l.fast > r.fast;
    return lex_less(l.p, r.p);
  });
  // The fast value upper-bounds the true distance, so we can stop as soon as
  // the verified best dominates every remaining bound.
  double best = -1.0;
  Point2 witness = cands.front().p;
  for (const auto& c : cands) {
    if (best > c.fast) break;
    double tv = nearest_site_dist(pts, c.p);
    if (tv > best || (tv == best && lex_less(c.p, witness))) {
      best = tv;
      witness = c.p;
    }
  }
  return {best, witness, MeasureMethod::Exact};
}

// Per triangle, sup over x in T of v^2(x) = R^2 - |x - c|^2. The circumcenter
// c lies on all three perpendicular bisectors, so when c is outside T its
// nearest point of T is an edge midpoint, where the value is (|e|/2)^2 by the
// power-of-the-point identity. This form never cancels, even for slivers
// whose circumcenter sits far away.
MeasureResult v_exact_impl(const PointSet& a, const Triangulation& tri) {
  const auto& pts = a.points();
  double best2 = -1.0;
  Point2 witness{};
  auto consider = [&](double val2, Point2 w) {
    if (val2 > best2 || (val2 == best2 && lex_less(w, witness))) {
      best2 = val2;
      witness = w;
    }
  };
  for (int t = 0; t < tri.triangle_count(); ++t) {
    const auto& tv = tri.triangle(t);
    Point2 A = pts[tv[0]], B = pts[tv[1]], C = pts[tv[2]];
    Point2 c = tri.circumcenter(t);
    bool inside = cross(B - A, c - A) >= 0 && cross(C - B, c - B) >= 0 &&
                  cross(A - C, c - C) >= 0;
    if (inside) {
      double r = tri.circumradius(t);
      consider(r * r, c);
    } else {
      for (const auto& e : {Segment{A, B}, Segment{B, C}, Segment{C, A}}) {
        Point2 mid = 0.5 * (e.p + e.q);
        consider(0.25 * dist2(e.p, e.q), mid);
      }
    }
  }
  return {std::sqrt(std::max(0.0, best2)), witness, MeasureMethod::Exact};
}

}  // namespace

MeasureResult d_exact(const PointSet& a) {
  if (a.rank() == 0) return {0.0, a.points().front(), MeasureMethod::Exact};
  if (a.rank() == 1) return rank1_gap_measure(a);
  return d_exact_impl(a, Triangulation::build(a));
}

MeasureResult v_exact(const PointSet& a) {
  if (a.rank() == 0) return {0.0, a.points().front(), MeasureMethod::Exact};
  if (a.rank() == 1) return rank1_gap_measure(a);
  return v_exact_impl(a, Triangulation::build(a));
}

MeasureResult rad(const PointSet& a) {
  Circle c = min_enclosing_circle(a.points());
  return {c.radius, c.center, MeasureMethod::Exact};
}

Measures measure_all(const PointSet& a) {
  Measures m;
  m.rad = rad(a);
  if (a.rank() <= 1) {
    m.d = d_exact(a);
    m.v = v_exact(a);
    return m;
  }
  Triangulation tri = Triangulation::build(a);
  m.d = d_exact_impl(a, tri);
  m.v = v_exact_impl(a, tri);
  return m;
}

NearestSiteIndex::NearestSiteIndex(const PointSet& a) : pts_(a.points()) {
  box_ = a.bounds();
  double diam = box_.diameter();
  int n = static_cast<int>(pts_.size());
  cell_ = std::max(diam / std::max(1.0, std::sqrt(static_cast<double>(n))), 1e-300);
  nx_ = std::max(1, static_cast<int>(box_.width() / cell_) + 1);
  ny_ = std::max(1, static_cast<int>(box_.height() / cell_) + 1);
  buckets_.assign(static_cast<size_t>(nx_) * ny_, {});
  for (int i = 0; i < n; ++i) {
    int cx = std::min(nx_ - 1, static_cast<int>((pts_[i].x - box_.lo.x) / cell_));
    int cy = std::min(ny_ - 1, static_cast<int>((pts_[i].y - box_.lo.y) / cell_));
    buckets_[static_cast<size_t>(cy) * nx_ + cx].push_back(i);
  }
}

double NearestSiteIndex::nearest_dist(Point2 q) const {
  int cx = std::clamp(static_cast<int>((q.x - box_.lo.x) / cell_), 0, nx_ - 1);
  int cy = std::clamp(static_cast<int>((q.y - box_.lo.y) / cell_), 0, ny_ - 1);
  double best2 = std::numeric_limits<double>::infinity();
  int max_ring = std::max(nx_, ny_);
  for (int ring = 0; ring <= max_ring; ++ring) {
    // Once a site is found, one extra ring guarantees exactness.
    if (best2 < std::numeric_limits<double>::infinity()) {
      double safe = (ring - 1) * cell_;
      if (safe > 0 && safe * safe >= best2) break;
    }
    int x0 = cx - ring, x1 = cx + ring, y0 = cy - ring, y1 = cy + ring;
    for (int y = y0; y <= y1; ++y) {
      if (y < 0 || y >= ny_) continue;
      for (int x = x0; x <= x1; ++x) {
        if (x < 0 || x >= nx_) continue;
        if (ring > 0 && x != x0 && x != x1 && y != y0 && y != y1) continue;
        for (int i : buckets_[static_cast<size_t>(y) * nx_ + x])
          best2 = std::min(best2, dist2(q, pts_[i]));
      }
    }
  }
  return std::sqrt(best2);
}

double grid_step_diagonal(const PointSet& a, int resolution) {
  BBox b = a.bounds();
  double sx = resolution > 1 ? b.width() / (resolution - 1) : 0.0;
  double sy = resolution > 1 ? b.height() / (resolution - 1) : 0.0;
  return std::hypot(sx, sy);
}

MeasureResult d_grid_oracle(const PointSet& a, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  if (a.size() == 1) return {0.0, a.points().front(), MeasureMethod::Grid};
  BBox b = a.bounds();
  const ConvexPolygon& hull = a.hull();
  NearestSiteIndex idx(a);
  int nx = b.width() > 0 ? resolution : 1;
  int ny = b.height() > 0 ? resolution : 1;
  double sx = nx > 1 ? b.width() / (nx - 1) : 0.0;
  double sy = ny > 1 ? b.height() / (ny - 1) : 0.0;
  double best = -1.0;
  Point2 witness = a.points().front();
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      Point2 g{b.lo.x + ix * sx, b.lo.y + iy * sy};
      if (point_in_polygon(g, hull, a.tol()) == Containment::Outside) continue;
      double v = idx.nearest_dist(g);
      if (v > best || (v == best && lex_less(g, witness))) {
        best = v;
        witness = g;
      }
    }
  }
  return {std::max(best, 0.0), witness, MeasureMethod::Grid};
}

double v2_at_point(const PointSet& a, Point2 x) {
  const auto& pts = a.points();
  const Tolerance& tol = a.tol();
  if (point_in_polygon(x, a.hull(), tol) == Containment::Outside)
    throw std::invalid_argument("infeasible point");
  const double eps = tol.eps();
  const int n = static_cast<int>(pts.size());
  double best = std::numeric_limits<double>::infinity();

  for (int i = 0; i < n; ++i)
    if (dist(x, pts[i]) <= eps) best = std::min(best, dist2(x, pts[i]));

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Segment s{pts[i], pts[j]};
      auto [proj, d] = nearest_point_on_segment(x, s);
      if (d > eps) continue;
      double len2 = dist2(pts[i], pts[j]);
      double t = len2 > 0 ? std::clamp(dot(x - pts[i], pts[j] - pts[i]) / len2, 0.0, 1.0)
                          : 0.0;
      best = std::min(best, (1.0 - t) * dist2(pts[i], x) + t * dist2(pts[j], x));
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        double denom = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (denom == 0.0) continue;  // degenerate: covered by pairs
        double wk = cross(pts[j] - pts[i], x - pts[i]) / denom;
        double wj = cross(x - pts[i], pts[k] - pts[i]) / denom;
        double wi = 1.0 - wj - wk;
        if (wi < 0 || wj < 0 || wk < 0) {
          // Clamp barycentric noise and re-verify feasibility honestly.
          wi = std::max(wi, 0.0);
          wj = std::max(wj, 0.0);
          wk = std::max(wk, 0.0);
          double sum = wi + wj + wk;
          wi /= sum;
          wj /= sum;
          wk /= sum;
          Point2 xhat = wi * pts[i] + wj * pts[j] + wk * pts[k];
          if (dist(xhat, x) > eps) continue;
        }
        best = std::min(best, wi * dist2(pts[i], x) + wj * dist2(pts[j], x) +
                                  wk * dist2(pts[k], x));
      }
    }
  }
  if (!std::isfinite(best)) throw std::logic_error("no convex representation found");
  return best;
}

MeasureResult v_grid_oracle(const PointSet& a, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be >= 2");
  if (a.size() == 1) return {0.0, a.points().front(), MeasureMethod::Grid};
  BBox b = a.bounds();
  const ConvexPolygon& hull = a.hull();
  std::vector<Point2> samples;
  int nx = b.width() > 0 ? resolution : 1;
  int ny = b.height() > 0 ? resolution : 1;
  double sx = nx > 1 ? b.width() / (nx - 1) : 0.0;
  double sy = ny > 1 ? b.height() / (ny - 1) : 0.0;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      Point2 g{b.lo.x + ix * sx, b.lo.y + iy * sy};
      if (point_in_polygon(g, hull, a.tol()) != Containment::Outside)
        samples.push_back(g);
    }
  // Boundary samples keep the oracle tight when the maximizer sits on or
  // near the hull boundary.
  const auto& hv = hull.vertices;
  for (size_t i = 0; i < hv.size(); ++i) {
    Point2 p = hv[i], q = hv[(i + 1) % hv.size()];
    for (int k = 0; k < resolution; ++k) {
      double t = static_cast<double>(k) / resolution;
      samples.push_back(p + t * (q - p));
    }
    if (hv.size() <= 2) break;
  }
  double best2 = -1.0;
  Point2 witness = a.points().front();
  for (const auto& g : samples) {
    double v2 = v2_at_point(a, g);
    if (v2 > best2 || (v2 == best2 && lex_less(g, witness))) {
      best2 = v2;
      witness = g;
    }
  }
  return {std::sqrt(std::max(0.0, best2)), witness, MeasureMethod::Grid};
}

}  // namespace noncvx
