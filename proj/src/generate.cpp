#include "noncvx/generate.hpp"

#include <algorithm>
#include <cmath>

namespace noncvx {

Shape parse_shape(const std::string& name) {
  if (name == "uniform-square") return Shape::UniformSquare;
  if (name == "annulus") return Shape::Annulus;
  if (name == "grid-perturbed") return Shape::GridPerturbed;
  if (name == "collinear") return Shape::Collinear;
  throw std::invalid_argument("unknown shape: " + name);
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::UniformSquare: return "uniform-square";
    case Shape::Annulus: return "annulus";
    case Shape::GridPerturbed: return "grid-perturbed";
    case Shape::Collinear: return "collinear";
  }
  return "?";
}

PointSet generate(uint64_t seed, int n, Shape shape) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Rng rng(derive_seed(seed, static_cast<uint64_t>(n), static_cast<uint64_t>(shape)));
  std::vector<Point2> pts;
  pts.reserve(n);
  switch (shape) {
    case Shape::UniformSquare:
      for (int i = 0; i < n; ++i) pts.push_back({rng.unit(), rng.unit()});
      break;
    case Shape::Annulus:
      for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * rng.unit();
        double r = rng.uniform(0.25, 0.5);
        pts.push_back({0.5 + r * std::cos(th), 0.5 + r * std::sin(th)});
      }
      break;
    case Shape::GridPerturbed: {
      int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
      double cell = 1.0 / k;
      for (int i = 0; i < n; ++i) {
        double cx = (i % k + 0.5) * cell, cy = (i / k + 0.5) * cell;
        pts.push_back({cx + rng.uniform(-0.2, 0.2) * cell,
                       cy + rng.uniform(-0.2, 0.2) * cell});
      }
      break;
    }
    case Shape::Collinear: {
      double th = M_PI * rng.unit();
      Point2 u{std::cos(th), std::sin(th)};
      for (int i = 0; i < n; ++i) {
        double t = rng.unit() - 0.5;
        pts.push_back({0.5 + t * u.x, 0.5 + t * u.y});
      }
      break;
    }
  }
  return PointSet::from_points(std::move(pts));
}

Point2 uniform_point_in_polygon(const ConvexPolygon& poly, Rng& rng) {
  const auto& v = poly.vertices;
  if (v.size() == 1) return v[0];
  if (v.size() == 2) return v[0] + rng.unit() * (v[1] - v[0]);
  // Area-weighted triangle of the fan, then uniform inside it.
  std::vector<double> acc;
  acc.reserve(v.size() - 2);
  double total = 0.0;
  for (size_t i = 1; i + 1 < v.size(); ++i) {
    total += 0.5 * std::abs(cross(v[i] - v[0], v[i + 1] - v[0]));
    acc.push_back(total);
  }
  double r = rng.unit() * total;
  size_t tri = std::lower_bound(acc.begin(), acc.end(), r) - acc.begin();
  tri = std::min(tri, acc.size() - 1);
  Point2 A = v[0], B = v[tri + 1], C = v[tri + 2];
  double s = std::sqrt(rng.unit()), t = rng.unit();
  return A + s * ((B - A) + t * (C - B));
}

}  // namespace noncvx
