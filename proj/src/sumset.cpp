#include "noncvx/sumset.hpp"

#include <algorithm>
#include <sstream>

#include "noncvx/generate.hpp"

namespace noncvx {

PointSet minkowski_finite(const PointSet& a, const PointSet& b) {
  std::vector<Point2> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a.points())
    for (const auto& q : b.points()) sums.push_back(p + q);
  int dim = (a.declared_dim() == 1 && b.declared_dim() == 1) ? 1 : 2;
  return PointSet::from_points(std::move(sums), dim);
}

ConvexPolygon minkowski_segment_polygon(const Segment& s, const ConvexPolygon& p) {
  std::vector<Point2> pts;
  pts.reserve(2 * p.size());
  for (const auto& v : p.vertices) {
    pts.push_back(v + s.p);
    pts.push_back(v + s.q);
  }
  return convex_hull(std::move(pts));
}

std::pair<Point2, Point2> min_crossing_pair(const PointSet& s, const Line& line,
                                            const Tolerance& tol) {
  double len = norm(line.dir);
  if (len == 0.0) throw std::invalid_argument("zero line direction");
  Point2 d = (1.0 / len) * line.dir;
  const double eps = tol.eps();
  std::vector<Point2> upper, lower;
  for (const auto& p : s.points()) {
    double side = cross(d, p - line.point);
    if (side >= -eps) upper.push_back(p);
    if (side <= eps) lower.push_back(p);
  }
  if (upper.empty() || lower.empty())
    throw std::runtime_error("line does not separate");
  double best = std::numeric_limits<double>::infinity();
  std::pair<Point2, Point2> out{upper.front(), lower.front()};
  for (const auto& u : upper) {
    for (const auto& l : lower) {
      double dd = dist(u, l);
      if (dd < best ||
          (dd == best && (lex_less(u, out.first) ||
                          (u.x == out.first.x && u.y == out.first.y &&
                           lex_less(l, out.second))))) {
        best = dd;
        out = {u, l};
      }
    }
  }
  return out;
}

namespace {

std::string fmt_point(Point2 p) {
  std::ostringstream os;
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

// Steps 2-4 of the witness construction: the pair of S straddling the line
// through x parallel to [g1,g2], pulled back by g1, plus the containment
// assertion x in y + [g1,g2].
std::pair<Point2, Point2> crossing_pair_for(const PointSet& s, Point2 x, Point2 g1,
                                            Point2 g2, const Tolerance& tol,
                                            const char* stage) {
  Line lx{x, g2 - g1};
  auto [u1, u2] = min_crossing_pair(s.translated(g1), lx, tol);
  Point2 s1 = u1 - g1, s2 = u2 - g1;
  Line pulled{x - g1, g2 - g1};
  auto y = segment_line_intersection(Segment{s1, s2}, pulled, tol);
  if (!y) {
    throw std::logic_error(std::string("decompose: crossing segment misses the line (") +
                           stage + ") at x=" + fmt_point(x));
  }
  double slack = nearest_point_on_segment(x, Segment{*y + g1, *y + g2}).second;
  if (slack > tol.eps()) {
    throw std::logic_error(std::string("decompose: x not on y+[g1,g2] (") + stage +
                           "), slack=" + std::to_string(slack));
  }
  return {s1, s2};
}

}  // namespace

Decomposer::Decomposer(const PointSet& a, const PointSet& b)
    : a_(a),
      b_(b),
      at_(a.translated(-a.points().front())),
      bt_(b.translated(-b.points().front())),
      ab_(minkowski_finite(a, b)),
      a0_(a.points().front()),
      b0_(b.points().front()) {
  if (a.rank() != 2 || b.rank() != 2)
    throw std::invalid_argument("requires full-dimensional sets");
  da_ = d_exact(a_).value;
  db_ = d_exact(b_).value;
  const auto& ha = at_.hull().vertices;
  pieces_.reserve(ha.size());
  for (size_t i = 0; i < ha.size(); ++i)
    pieces_.push_back(minkowski_segment_polygon(
        Segment{ha[i], ha[(i + 1) % ha.size()]}, bt_.hull()));
}

DecomposeResult Decomposer::decompose(Point2 x) const {
  const Tolerance& tol = ab_.tol();
  if (point_in_polygon(x, ab_.hull(), tol) == Containment::Outside)
    return {DecomposeResult::Kind::NotInHull, {}, std::nullopt};
  for (const auto& bp : b_.points())
    if (point_in_polygon(x - bp, a_.hull(), a_.tol()) != Containment::Outside)
      return {DecomposeResult::Kind::InATranslate, bp, std::nullopt};
  for (const auto& ap : a_.points())
    if (point_in_polygon(x - ap, b_.hull(), b_.tol()) != Containment::Outside)
      return {DecomposeResult::Kind::InBTranslate, ap, std::nullopt};

  // Origin convention: lexicographic minima moved to 0; results mapped back.
  Point2 xt = x - a0_ - b0_;
  const auto& ha = at_.hull().vertices;
  for (size_t i = 0; i < ha.size(); ++i) {
    Point2 g1 = ha[i], g2 = ha[(i + 1) % ha.size()];
    if (point_in_polygon(xt, pieces_[i], tol) == Containment::Outside) continue;
    if (point_in_polygon(xt - g1, bt_.hull(), bt_.tol()) != Containment::Outside)
      continue;
    if (point_in_polygon(xt - g2, bt_.hull(), bt_.tol()) != Containment::Outside)
      continue;

    auto [b1, b2] = crossing_pair_for(bt_, xt, g1, g2, tol, "b-side");
    if (dist(b1, b2) <= tol.eps()) {
      // x in b1 + conv(A) up to eps; report the translate branch instead.
      return {DecomposeResult::Kind::InATranslate, b1 + b0_, std::nullopt};
    }
    auto [a1, a2] = crossing_pair_for(at_, xt, b1, b2, tol, "a-side");

    ParallelogramWitness w{a1 + a0_, a2 + a0_, b1 + b0_, b2 + b0_, da_, db_};
    std::ostringstream trace;
    if (w.side_a_len() > 2.0 * da_ + tol.eps())
      trace << "side a " << w.side_a_len() << " > 2 d(A) " << 2.0 * da_ << "; ";
    if (w.side_b_len() > 2.0 * db_ + tol.eps())
      trace << "side b " << w.side_b_len() << " > 2 d(B) " << 2.0 * db_ << "; ";
    auto cs = w.corner_sums();
    ConvexPolygon para = convex_hull(std::vector<Point2>(cs.begin(), cs.end()));
    if (point_in_polygon(x, para, tol) == Containment::Outside)
      trace << "x outside witness parallelogram; ";
    if (!trace.str().empty())
      throw std::logic_error("decompose: witness invariant failed at x=" +
                             fmt_point(x) + ": " + trace.str());
    return {DecomposeResult::Kind::Witness, {}, w};
  }
  throw std::logic_error("decompose: no qualifying hull edge for x=" + fmt_point(x));
}

DecomposeResult decompose(const PointSet& a, const PointSet& b, Point2 x) {
  return Decomposer(a, b).decompose(x);
}

DecompositionCheckReport boundary_decomposition_check(
    const PointSet& a, const PointSet& b, const std::vector<Point2>& samples) {
  if (a.rank() != 2 || b.rank() != 2)
    throw std::invalid_argument("requires full-dimensional sets");
  const Point2 a0 = a.points().front(), b0 = b.points().front();
  PointSet at = a.translated(-a0), bt = b.translated(-b0);
  PointSet ab = minkowski_finite(at, bt);
  const Tolerance& tol = ab.tol();

  const auto& ha = at.hull().vertices;
  std::vector<ConvexPolygon> pieces;
  pieces.reserve(ha.size());
  for (size_t i = 0; i < ha.size(); ++i)
    pieces.push_back(minkowski_segment_polygon(
        Segment{ha[i], ha[(i + 1) % ha.size()]}, bt.hull()));

  DecompositionCheckReport rep;
  for (const auto& raw : samples) {
    Point2 x = raw - a0 - b0;
    bool lhs = point_in_polygon(x, ab.hull(), tol) != Containment::Outside;
    bool rhs = point_in_polygon(x, at.hull(), tol) != Containment::Outside;
    for (size_t i = 0; !rhs && i < pieces.size(); ++i)
      rhs = point_in_polygon(x, pieces[i], tol) != Containment::Outside;
    rep.samples++;
    if (lhs != rhs) rep.mismatches++;
  }
  return rep;
}

TranslateBoundReport translate_bound_check(const PointSet& a, const PointSet& b,
                                           long trials, uint64_t seed) {
  PointSet ab = minkowski_finite(a, b);
  double d_a = d_exact(a).value;
  Rng rng(derive_seed(seed, 0xabcd));
  TranslateBoundReport rep;
  rep.trials = trials;
  for (long t = 0; t < trials; ++t) {
    Point2 ca = uniform_point_in_polygon(a.hull(), rng);
    Point2 bp = b.points()[rng.index(b.size())];
    Point2 x = ca + bp;
    double dx = std::numeric_limits<double>::infinity();
    for (const auto& s : ab.points()) dx = std::min(dx, dist(x, s));
    double slack = dx - d_a;
    rep.max_slack = std::max(rep.max_slack, slack);
    if (slack > ab.tol().eps()) rep.violations++;
  }
  return rep;
}

SubadditivityRecord check_subadditivity(const PointSet& a, const PointSet& b) {
  SubadditivityRecord rec;
  MeasureResult ma = d_exact(a), mb = d_exact(b), mab = d_exact(minkowski_finite(a, b));
  rec.d_a = ma.value;
  rec.d_b = mb.value;
  rec.d_ab = mab.value;
  rec.w_a = ma.witness;
  rec.w_b = mb.witness;
  rec.w_ab = mab.witness;
  double denom = rec.d_a * rec.d_a + rec.d_b * rec.d_b;
  if (denom == 0.0)
    rec.ratio = rec.d_ab == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  else
    rec.ratio = rec.d_ab * rec.d_ab / denom;
  return rec;
}

std::pair<double, double> meyer_bound_1d(const std::vector<PointSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("empty set");
  Point2 dir{0, 0};
  for (const auto& s : sets) {
    if (s.rank() > 1) throw std::invalid_argument("non-collinear input");
    if (s.rank() == 1) {
      Point2 u = s.line_dir();
      if (norm(dir) == 0.0)
        dir = u;
      else if (std::abs(cross(dir, u)) > 1e-9)
        throw std::invalid_argument("non-collinear input");
    }
  }

  std::vector<double> ds;
  ds.reserve(sets.size());
  PointSet sum = sets.front();
  ds.push_back(d_exact(sum).value);
  for (size_t i = 1; i < sets.size(); ++i) {
    sum = minkowski_finite(sum, sets[i]);
    ds.push_back(d_exact(sets[i]).value);
  }
  double lhs = d_exact(sum).value;

  std::sort(ds.rbegin(), ds.rend());
  double bound = -std::numeric_limits<double>::infinity();
  double tail = 0.0;
  for (size_t j = ds.size(); j-- > 0;) {
    // tail holds sum_{i > j} d_i as j walks down.
    bound = std::max(bound, ds[j] - tail);
    tail += ds[j];
  }
  return {lhs, bound};
}

}  // namespace noncvx
