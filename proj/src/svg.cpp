#include "noncvx/svg.hpp"

#include <fstream>
#include <sstream>

#include "noncvx/delaunay.hpp"

namespace noncvx {

namespace {

// World coordinates go out y-up; SVG is y-down.
struct Frame {
  double flip_y;
  double stroke;
  double dot;

  double sy(double y) const { return flip_y - y; }
};

void line(std::ostringstream& os, const Frame& f, Point2 a, Point2 b,
          const char* color, double width, bool dashed = false) {
  os << "  <line x1='" << a.x << "' y1='" << f.sy(a.y) << "' x2='" << b.x
     << "' y2='" << f.sy(b.y) << "' stroke='" << color << "' stroke-width='"
     << width << "'";
  if (dashed) os << " stroke-dasharray='" << 4 * width << " " << 3 * width << "'";
  os << "/>\n";
}

}  // namespace

void emit_svg(const PointSet& ps, const SvgOptions& opts, const std::string& path) {
  if (ps.rank() < 2) throw std::invalid_argument("svg requires a rank-2 set");
  BBox box = ps.bounds();
  double pad = 0.1 * std::max(box.diameter(), 1e-9);
  if (opts.measure_circle) pad = std::max(pad, opts.measure_circle->radius * 0.15);
  double x0 = box.lo.x - pad, y0 = box.lo.y - pad;
  double w = box.width() + 2 * pad, h = box.height() + 2 * pad;
  // Mirror about the padded box's vertical center so world y points up.
  Frame f{2 * y0 + h, 0.004 * std::max(w, h), 0.008 * std::max(w, h)};

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='" << x0 << " " << y0
     << " " << w << " " << h << "'>\n";
  os << "  <rect x='" << x0 << "' y='" << y0 << "' width='" << w << "' height='"
     << h << "' fill='white'/>\n";

  if (opts.voronoi) {
    Triangulation tri = Triangulation::build(ps);
    for (const auto& e : voronoi_skeleton(tri).edges)
      line(os, f, e.a, e.b, "#9ecae1", f.stroke);
  }
  if (opts.hull) {
    const auto& hv = ps.hull().vertices;
    for (size_t i = 0; i < hv.size(); ++i)
      line(os, f, hv[i], hv[(i + 1) % hv.size()], "#333333", f.stroke);
  }
  if (opts.witness) {
    auto cs = opts.witness->corner_sums();
    ConvexPolygon para = convex_hull(std::vector<Point2>(cs.begin(), cs.end()));
    const auto& pv = para.vertices;
    for (size_t i = 0; i < pv.size(); ++i)
      line(os, f, pv[i], pv[(i + 1) % pv.size()], "#31a354", f.stroke, true);
  }
  if (opts.measure_circle) {
    os << "  <circle cx='" << opts.measure_circle->center.x << "' cy='"
       << f.sy(opts.measure_circle->center.y) << "' r='" << opts.measure_circle->radius
       << "' fill='none' stroke='#e6550d' stroke-width='" << f.stroke << "'/>\n";
    os << "  <circle cx='" << opts.measure_circle->center.x << "' cy='"
       << f.sy(opts.measure_circle->center.y) << "' r='" << 0.6 * f.dot
       << "' fill='#e6550d'/>\n";
  }
  for (const auto& p : ps.points())
    os << "  <circle cx='" << p.x << "' cy='" << f.sy(p.y) << "' r='" << f.dot
       << "' fill='#1f77b4'/>\n";
  os << "</svg>\n";

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << os.str();
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace noncvx
