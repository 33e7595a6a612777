#include "noncvx/delaunay.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace noncvx {

namespace {

// In-circle determinant for a CCW triangle (a,b,c): positive iff d lies
// strictly inside the circumcircle. The permanent bounds the roundoff, which
// keeps the test meaningful even for slivers whose circumcenter is far away.
double incircle_det(Point2 a, Point2 b, Point2 c, Point2 d, double* permanent) {
  double adx = a.x - d.x, ady = a.y - d.y;
  double bdx = b.x - d.x, bdy = b.y - d.y;
  double cdx = c.x - d.x, cdy = c.y - d.y;
  double ad2 = adx * adx + ady * ady;
  double bd2 = bdx * bdx + bdy * bdy;
  double cd2 = cdx * cdx + cdy * cdy;
  double det = ad2 * (bdx * cdy - cdx * bdy) + bd2 * (cdx * ady - adx * cdy) +
               cd2 * (adx * bdy - bdx * ady);
  if (permanent) {
    *permanent = ad2 * (std::abs(bdx * cdy) + std::abs(cdx * bdy)) +
                 bd2 * (std::abs(cdx * ady) + std::abs(adx * cdy)) +
                 cd2 * (std::abs(adx * bdy) + std::abs(bdx * ady));
  }
  return det;
}

// Certified "p strictly right of a->b": the cross sign is trusted only
// beyond its roundoff bound, so exactly collinear triples (common in
// sumsets: 2a, a+b, 2b) never read as sided.
bool certainly_right(Point2 a, Point2 b, Point2 p) {
  double t1 = (b.x - a.x) * (p.y - a.y);
  double t2 = (b.y - a.y) * (p.x - a.x);
  double err = 3.4e-16 * (std::abs(t1) + std::abs(t2));
  return t1 - t2 < -err;
}

struct Tri {
  std::array<int, 3> v;
  std::array<int, 3> nbr;  // across edge opposite v[i]; -1 = boundary
  Point2 cc;
  double r = 0.0;
  bool alive = true;
};

struct Builder {
  const std::vector<Point2>& s;
  Tolerance tol;
  std::vector<Tri> tris;
  std::unordered_map<int, int> hull_next;  // CCW boundary cycle, site -> site
  std::vector<std::pair<int, int>> flip_stack;

  explicit Builder(const PointSet& ps) : s(ps.points()), tol(ps.tol()) {}

  void set_circum(Tri& t) {
    Point2 a = s[t.v[0]], B = s[t.v[1]] - a, C = s[t.v[2]] - a;
    double d = 2.0 * cross(B, C);
    double nb = norm2(B), nc = norm2(C);
    Point2 u{(C.y * nb - B.y * nc) / d, (B.x * nc - C.x * nb) / d};
    t.cc = a + u;
    t.r = norm(u);
  }

  int make_tri(int a, int b, int c) {
    Tri t;
    t.v = {a, b, c};
    t.nbr = {-1, -1, -1};
    set_circum(t);
    tris.push_back(t);
    return static_cast<int>(tris.size()) - 1;
  }

  // Slot of the edge {a,b} in triangle t (index of the opposite vertex).
  int edge_slot(int t, int a, int b) const {
    for (int i = 0; i < 3; ++i) {
      int p = tris[t].v[(i + 1) % 3], q = tris[t].v[(i + 2) % 3];
      if ((p == a && q == b) || (p == b && q == a)) return i;
    }
    throw std::logic_error("edge not in triangle");
  }

  int slot_of_neighbor(int t, int n) const {
    for (int i = 0; i < 3; ++i)
      if (tris[t].nbr[i] == n) return i;
    throw std::logic_error("neighbor link broken");
  }

  bool in_circle_strict(int t, int site) const {
    double perm = 0.0;
    double det = incircle_det(s[tris[t].v[0]], s[tris[t].v[1]], s[tris[t].v[2]],
                              s[site], &perm);
    return det > perm * 1e-13;
  }

  bool flip(int t, int i) {
    int n = tris[t].nbr[i];
    int j = slot_of_neighbor(n, t);
    int a = tris[t].v[i];
    int p = tris[t].v[(i + 1) % 3], q = tris[t].v[(i + 2) % 3];
    int d = tris[n].v[j];
    // Quad a-p-d-q must be strictly convex for the flip to be valid.
    if (cross(s[p] - s[a], s[d] - s[a]) <= 0.0) return false;
    if (cross(s[d] - s[a], s[q] - s[a]) <= 0.0) return false;

    int X = tris[t].nbr[(i + 1) % 3];  // across (q,a)
    int Y = tris[t].nbr[(i + 2) % 3];  // across (a,p)
    int Z = tris[n].nbr[(j + 1) % 3];  // across (p,d)
    int W = tris[n].nbr[(j + 2) % 3];  // across (d,q)

    tris[t].v = {a, p, d};
    tris[t].nbr = {Z, n, Y};
    tris[n].v = {a, d, q};
    tris[n].nbr = {W, X, t};
    set_circum(tris[t]);
    set_circum(tris[n]);
    if (Z >= 0) tris[Z].nbr[slot_of_neighbor(Z, n)] = t;
    if (X >= 0) tris[X].nbr[slot_of_neighbor(X, t)] = n;
    return true;
  }

  void legalize() {
    while (!flip_stack.empty()) {
      auto [t, i] = flip_stack.back();
      flip_stack.pop_back();
      int n = tris[t].nbr[i];
      if (n < 0) continue;
      int j = slot_of_neighbor(n, t);
      int d = tris[n].v[j];
      if (!in_circle_strict(t, d)) continue;
      if (!flip(t, i)) continue;
      // Re-check the four outer edges of the flipped quad.
      flip_stack.push_back({t, 0});
      flip_stack.push_back({t, 2});
      flip_stack.push_back({n, 0});
      flip_stack.push_back({n, 1});
    }
  }

  void insert(int p) {
    // Walk the boundary cycle from site 0 (the global lex minimum stays on
    // the hull forever) and find the contiguous run of edges p sees.
    std::vector<std::pair<int, int>> edges;
    int u = 0;
    do {
      int v = hull_next.at(u);
      edges.push_back({u, v});
      u = v;
    } while (u != 0);
    int m = static_cast<int>(edges.size());
    std::vector<char> vis(m);
    int nvis = 0;
    for (int i = 0; i < m; ++i) {
      auto [a, b] = edges[i];
      vis[i] = certainly_right(s[a], s[b], s[p]);
      nvis += vis[i];
    }
    if (nvis == 0) {
      // p sits within roundoff of the boundary; fall back to the raw sign.
      for (int i = 0; i < m; ++i) {
        auto [a, b] = edges[i];
        vis[i] = cross(s[b] - s[a], s[p] - s[a]) < 0.0;
        nvis += vis[i];
      }
    }
    if (nvis == 0 || nvis == m) throw std::logic_error("hull visibility scan failed");
    int start = -1;
    for (int i = 0; i < m; ++i) {
      if (vis[i] && !vis[(i + m - 1) % m]) {
        start = i;
        break;
      }
    }
    // Vertices w0..wk of the visible arc, and the old triangle per edge.
    std::vector<int> w;
    std::vector<int> old_tri;
    w.push_back(edges[start].first);
    int i = start;
    while (true) {
      auto [a, b] = edges[i];
      w.push_back(b);
      old_tri.push_back(find_boundary_tri(a, b));
      i = (i + 1) % m;
      if (!vis[i]) break;
    }
    int k = static_cast<int>(old_tri.size());
    std::vector<int> fresh(k);
    for (int j = 0; j < k; ++j) fresh[j] = make_tri(w[j + 1], w[j], p);
    for (int j = 0; j < k; ++j) {
      Tri& f = tris[fresh[j]];
      f.nbr[0] = (j > 0) ? fresh[j - 1] : -1;
      f.nbr[1] = (j + 1 < k) ? fresh[j + 1] : -1;
      f.nbr[2] = old_tri[j];
      tris[old_tri[j]].nbr[edge_slot(old_tri[j], w[j], w[j + 1])] = fresh[j];
      flip_stack.push_back({fresh[j], 2});
    }
    for (int j = 1; j < k; ++j) hull_next.erase(w[j]);
    hull_next[w[0]] = p;
    hull_next[p] = w[k];
    legalize();
  }

  // Boundary edges carry no neighbor entry; locate the triangle owning (a,b).
  // The boundary map below keeps this O(1).
  std::unordered_map<long long, int> boundary_owner;
  static long long ekey(int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); }
  int find_boundary_tri(int a, int b) const { return boundary_owner.at(ekey(a, b)); }
  void refresh_boundary() {
    boundary_owner.clear();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      for (int i = 0; i < 3; ++i)
        if (tris[t].nbr[i] < 0)
          boundary_owner[ekey(tris[t].v[(i + 1) % 3], tris[t].v[(i + 2) % 3])] = t;
    }
  }
};

}  // namespace

Triangulation Triangulation::build(const PointSet& ps) {
  if (ps.rank() < 2) throw std::runtime_error("rank deficient");
  const auto& s = ps.points();
  const int n = static_cast<int>(s.size());
  Builder bld(ps);

  int i2 = -1;
  for (int i = 2; i < n; ++i) {
    if (orientation(s[0], s[1], s[i], ps.tol()) != Orient::Collinear) {
      i2 = i;
      break;
    }
  }
  if (i2 < 0) throw std::runtime_error("rank deficient");

  std::vector<int> order;
  order.reserve(n);
  order.push_back(0);
  order.push_back(1);
  order.push_back(i2);
  for (int i = 2; i < n; ++i)
    if (i != i2) order.push_back(i);

  // Seed triangle, oriented CCW.
  int a = 0, b = 1, c = i2;
  if (cross(s[b] - s[a], s[c] - s[a]) < 0.0) std::swap(b, c);
  bld.make_tri(a, b, c);
  bld.hull_next[a] = b;
  bld.hull_next[b] = c;
  bld.hull_next[c] = a;

  for (size_t k = 3; k < order.size(); ++k) {
    bld.refresh_boundary();
    bld.insert(order[k]);
  }

  // Canonical tie-break for cocircular quads: prefer the diagonal whose
  // lexicographically smallest endpoint is smaller. Bounded pass count; any
  // leftover configuration is still Delaunay within eps.
  for (int pass = 0; pass < 8; ++pass) {
    bool changed = false;
    for (int t = 0; t < static_cast<int>(bld.tris.size()); ++t) {
      for (int i = 0; i < 3; ++i) {
        int nb = bld.tris[t].nbr[i];
        if (nb <= t) continue;
        int j = bld.slot_of_neighbor(nb, t);
        int av = bld.tris[t].v[i], dv = bld.tris[nb].v[j];
        int pv = bld.tris[t].v[(i + 1) % 3], qv = bld.tris[t].v[(i + 2) % 3];
        double perm = 0.0;
        double det = incircle_det(s[bld.tris[t].v[0]], s[bld.tris[t].v[1]],
                                  s[bld.tris[t].v[2]], s[dv], &perm);
        if (std::abs(det) > perm * 1e-9) continue;  // not cocircular
        Point2 cur = lex_less(s[pv], s[qv]) ? s[pv] : s[qv];
        Point2 alt = lex_less(s[av], s[dv]) ? s[av] : s[dv];
        if (lex_less(alt, cur) && bld.flip(t, i)) changed = true;
      }
    }
    if (!changed) break;
  }

  Triangulation out(ps);
  std::vector<int> remap(bld.tris.size(), -1);
  for (size_t t = 0; t < bld.tris.size(); ++t) {
    if (!bld.tris[t].alive) continue;
    remap[t] = static_cast<int>(out.tri_.size());
    out.tri_.push_back(bld.tris[t].v);
    out.cc_.push_back(bld.tris[t].cc);
    out.r_.push_back(bld.tris[t].r);
    out.nbr_.push_back(bld.tris[t].nbr);
  }
  for (auto& nb : out.nbr_)
    for (int& x : nb)
      if (x >= 0) x = remap[x];

  // Boundary edges in CCW order, starting from site 0.
  std::unordered_map<int, std::pair<int, int>> bmap;  // u -> (v, tri)
  for (int t = 0; t < static_cast<int>(out.tri_.size()); ++t)
    for (int i = 0; i < 3; ++i)
      if (out.nbr_[t][i] < 0)
        bmap[out.tri_[t][(i + 1) % 3]] = {out.tri_[t][(i + 2) % 3], t};
  int u = 0;
  do {
    auto [v, t] = bmap.at(u);
    out.hull_edges_.push_back({u, v, t});
    u = v;
  } while (u != 0 && out.hull_edges_.size() <= bmap.size());
  return out;
}

double Triangulation::max_circumradius() const {
  double m = 0.0;
  for (double r : r_) m = std::max(m, r);
  return m;
}

double Triangulation::triangle_area_sum() const {
  double s = 0.0;
  const auto& p = sites_.points();
  for (const auto& t : tri_)
    s += 0.5 * cross(p[t[1]] - p[t[0]], p[t[2]] - p[t[0]]);
  return s;
}

double Triangulation::empty_circumcircle_violation() const {
  double worst = -std::numeric_limits<double>::infinity();
  const auto& p = sites_.points();
  for (size_t t = 0; t < tri_.size(); ++t) {
    Point2 a = p[tri_[t][0]], b = p[tri_[t][1]], c = p[tri_[t][2]];
    double area2 = cross(b - a, c - a);
    for (int sidx = 0; sidx < static_cast<int>(p.size()); ++sidx) {
      if (sidx == tri_[t][0] || sidx == tri_[t][1] || sidx == tri_[t][2]) continue;
      // Intrusion depth in length units: det = 2 area (r^2 - |d-c|^2), so
      // depth ~ det / (2 area (r + |d-c|)); this form stays accurate for
      // slivers where r - dist cancels catastrophically.
      double det = incircle_det(a, b, c, p[sidx], nullptr);
      if (det <= 0.0) continue;
      worst = std::max(worst, det / (area2 * (r_[t] + dist(p[sidx], cc_[t]))));
    }
  }
  return worst;
}

VoronoiSkeleton voronoi_skeleton(const Triangulation& t) {
  VoronoiSkeleton vs;
  const int nt = t.triangle_count();
  const double eps = t.sites().tol().eps();

  // Merge circumcenters within eps (sweep over lex-sorted order).
  std::vector<int> order(nt);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Point2 pa = t.circumcenter(a), pb = t.circumcenter(b);
    return lex_less(pa, pb) || (!lex_less(pb, pa) && a < b);
  });
  std::vector<int> cluster(nt, -1);  // triangle -> vertex id
  for (int pos = 0; pos < nt; ++pos) {
    int tri = order[pos];
    Point2 c = t.circumcenter(tri);
    int found = -1;
    for (int back = pos - 1; back >= 0; --back) {
      Point2 hc = t.circumcenter(order[back]);
      if (c.x - hc.x > eps) break;
      if (cluster[order[back]] >= 0 &&
          dist(c, vs.vertices[cluster[order[back]]].p) <= eps) {
        found = cluster[order[back]];
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(vs.vertices.size());
      vs.vertices.push_back({c, tri});
    }
    cluster[tri] = found;
    vs.vertices[found].triangle = std::min(vs.vertices[found].triangle, tri);
  }

  BBox box = t.sites().bounds();
  const double diam = std::max(box.diameter(), 1.0);
  for (int a = 0; a < nt; ++a) {
    for (int i = 0; i < 3; ++i) {
      int b = t.neighbors(a)[i];
      int si = t.triangle(a)[(i + 1) % 3], sj = t.triangle(a)[(i + 2) % 3];
      if (b > a) {
        if (cluster[a] == cluster[b]) continue;  // cocircular: zero-length dual
        vs.edges.push_back({vs.vertices[cluster[a]].p, vs.vertices[cluster[b]].p,
                            si, sj, false, 0.0});
      } else if (b < 0) {
        Point2 su = t.sites().points()[si], sv = t.sites().points()[sj];
        Point2 d = sv - su;
        Point2 outward = {d.y / norm(d), -d.x / norm(d)};
        Point2 origin = vs.vertices[cluster[a]].p;
        // Long enough to cross the hull even when the circumcenter sits far
        // outside the bounding box (flat triangles).
        double len = 4.0 * diam + dist(origin, box.center());
        vs.edges.push_back({origin, origin + len * outward, si, sj, true, len});
      }
    }
  }
  return vs;
}

}  // namespace noncvx
