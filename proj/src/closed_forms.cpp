#include "noncvx/closed_forms.hpp"

#include <algorithm>

namespace noncvx {

std::array<double, 3> TriangleSpec::sorted_sides() const {
  std::array<double, 3> s{dist(v2, v3), dist(v1, v3), dist(v1, v2)};
  std::sort(s.begin(), s.end());
  return s;
}

TriangleKind classify_triangle(const TriangleSpec& t) {
  Tolerance tol = tolerance_for({t.v1, t.v2, t.v3});
  if (orientation(t.v1, t.v2, t.v3, tol) == Orient::Collinear)
    throw std::invalid_argument("degenerate triangle");
  auto s = t.sorted_sides();
  double gap = s[2] * s[2] - s[1] * s[1] - s[0] * s[0];
  if (std::abs(gap) <= tol.eps_rel * s[2] * s[2]) return TriangleKind::Right;
  return gap < 0 ? TriangleKind::Acute : TriangleKind::Obtuse;
}

double triangle_d(const TriangleSpec& t) {
  TriangleKind kind = classify_triangle(t);
  auto s = t.sorted_sides();
  switch (kind) {
    case TriangleKind::Right:
      return 0.5 * s[2];
    case TriangleKind::Acute:
      return s[0] * s[1] * s[2] / (4.0 * t.area());  // circumradius
    case TriangleKind::Obtuse:
      return s[1] * s[1] * s[2] / (s[1] * s[1] + s[2] * s[2] - s[0] * s[0]);
  }
  throw std::logic_error("unreachable");
}

std::array<Point2, 4> ParallelogramSpec::corners() const {
  double cg = std::cos(gamma_rad), sg = std::sin(gamma_rad);
  Point2 u{side_x, 0.0};
  Point2 w{side_a * cg, side_a * sg};
  return {Point2{0, 0}, u, u + w, w};
}

namespace {

void validate(const ParallelogramSpec& p) {
  if (!(p.side_a > 0.0) || !(p.side_x >= p.side_a))
    throw std::invalid_argument("parallelogram requires 0 < a <= x");
  double cg = std::cos(p.gamma_rad);
  if (!(cg < 1.0) || cg < -1e-12)
    throw std::invalid_argument("gamma must lie in (0, pi/2]");
}

}  // namespace

double parallelogram_d(const ParallelogramSpec& p) {
  validate(p);
  const double a = p.side_a, x = p.side_x;
  const double cg = std::max(0.0, std::cos(p.gamma_rad));
  const double sg = std::sin(p.gamma_rad);
  const double h2 = a * a + x * x - 2.0 * a * x * cg;
  const double case1 = std::sqrt(h2) / (2.0 * sg);
  if (cg <= a / x + 1e-12) {
    if (std::abs(cg - a / x) <= 1e-12) {
      double case2 = std::max(a / (2.0 * cg), h2 / (2.0 * (x - a * cg)));
      if (std::abs(case1 - case2) > 1e-6 * std::max(1.0, case1))
        throw std::logic_error("case formulas disagree at the boundary");
    }
    return case1;
  }
  return std::max(a / (2.0 * cg), h2 / (2.0 * (x - a * cg)));
}

MonotonicityReport parallelogram_monotonicity_audit(double a, double x,
                                                    std::vector<double> gammas_rad) {
  std::sort(gammas_rad.begin(), gammas_rad.end());
  MonotonicityReport rep;
  rep.d90 = parallelogram_d({a, x, std::acos(0.0)});
  rep.values.reserve(gammas_rad.size());
  for (double g : gammas_rad) rep.values.push_back(parallelogram_d({a, x, g}));
  for (size_t i = 0; i < rep.values.size(); ++i) {
    rep.max_violation = std::max(rep.max_violation, rep.values[i] - rep.d90);
    if (i + 1 < rep.values.size())
      rep.max_violation =
          std::max(rep.max_violation, rep.values[i] - rep.values[i + 1]);
  }
  return rep;
}

}  // namespace noncvx
