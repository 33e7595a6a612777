// noncvx command line: measures, sums, decompositions, audits and figures
// for finite planar point sets. Exit codes: 0 ok, 1 property violation,
// 2 usage or parse error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "noncvx/audit.hpp"
#include "noncvx/closed_forms.hpp"
#include "noncvx/generate.hpp"
#include "noncvx/instance_io.hpp"
#include "noncvx/measures.hpp"
#include "noncvx/svg.hpp"
#include "noncvx/sumset.hpp"

namespace {

using namespace noncvx;

Point2 parse_xy(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'x,y': " + s);
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected 'x,y': " + s);
  }
}

std::string fmt(double v) {
  char buf[64];
  snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void print_measure(const char* name, const MeasureResult& m) {
  std::cout << name << ": " << fmt(m.value) << "\n"
            << "witness: " << fmt(m.witness.x) << " " << fmt(m.witness.y) << "\n"
            << "method: " << (m.method == MeasureMethod::Exact ? "exact" : "grid")
            << "\n";
}

struct Cli {
  std::string in_spec, a_spec, b_spec, x_spec, out_path, json_out;
  std::string method = "exact";
  std::string overlays = "hull";
  std::string size_range;
  AuditOptions audit_opts;
  std::string audit_name;
  double eps = 0.0;
  int resolution = 1024;
  // closed-form inputs
  std::string v1, v2, v3;
  double side_a = 1.0, side_x = 1.0, gamma_deg = 90.0;
  int monotonicity_grid = 0;
  // generate
  uint64_t gen_seed = 1;
  int gen_n = 10;
  std::string gen_shape = "uniform-square";
};

void apply_eps(const Cli& c) {
  if (c.eps > 0.0) set_default_eps_rel(c.eps);
}

void parse_size_range(const std::string& s, AuditOptions& o) {
  if (s.empty()) return;
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("expected --size MIN:MAX");
  o.size_min = std::stoi(s.substr(0, colon));
  o.size_max = std::stoi(s.substr(colon + 1));
  if (o.size_min < 1 || o.size_max < o.size_min)
    throw ParseError("bad --size range");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-convexity measures for finite planar point sets"};
  app.require_subcommand(1);
  Cli c;

  app.add_option("--eps", c.eps, "relative epsilon (default 1e-9)")
      ->envname("NONCONVEXITY_EPS");

  auto add_in = [&](CLI::App* sub) {
    sub->add_option("--in", c.in_spec, "point set: file path or inline JSON/CSV")
        ->required();
  };

  auto* hull_cmd = app.add_subcommand("hull", "convex hull of a set");
  add_in(hull_cmd);

  auto* d_cmd = app.add_subcommand("d", "Hausdorff distance to the convex hull");
  add_in(d_cmd);
  d_cmd->add_option("--method", c.method, "exact | grid");
  d_cmd->add_option("--resolution", c.resolution, "grid resolution (grid method)");

  auto* v_cmd = app.add_subcommand("v", "effective standard deviation");
  add_in(v_cmd);
  v_cmd->add_option("--method", c.method, "exact | grid");
  v_cmd->add_option("--resolution", c.resolution, "grid resolution (grid method)");
  v_cmd->add_option("--at", c.x_spec, "evaluate v^2(A,x) at 'x,y' instead");

  auto* rad_cmd = app.add_subcommand("rad", "smallest enclosing circle radius");
  add_in(rad_cmd);

  auto* mink = app.add_subcommand("minkowski", "Minkowski sum of two sets");
  mink->add_option("--a", c.a_spec, "first set")->required();
  mink->add_option("--b", c.b_spec, "second set")->required();
  mink->add_option("--out", c.out_path, "write the sum as a JSON instance");

  auto* cf = app.add_subcommand("closed-form", "closed-form d for special shapes");
  cf->require_subcommand(1);
  auto* cft = cf->add_subcommand("triangle", "d of a triangle's vertex set");
  cft->add_option("--v1", c.v1, "vertex 'x,y'")->required();
  cft->add_option("--v2", c.v2, "vertex 'x,y'")->required();
  cft->add_option("--v3", c.v3, "vertex 'x,y'")->required();
  auto* cfp = cf->add_subcommand("parallelogram", "d of a parallelogram's corners");
  cfp->add_option("--side-a", c.side_a, "shorter side length")->required();
  cfp->add_option("--side-x", c.side_x, "longer side length")->required();
  cfp->add_option("--gamma-deg", c.gamma_deg, "smaller angle in degrees, (0,90]")
      ->required();
  cfp->add_option("--audit-grid", c.monotonicity_grid,
                  "also audit monotonicity over an N-point angle grid");

  auto* dec = app.add_subcommand("decompose", "decompose x within conv(A+B)");
  dec->add_option("--a", c.a_spec, "set A")->required();
  dec->add_option("--b", c.b_spec, "set B")->required();
  dec->add_option("--x", c.x_spec, "query point 'x,y'")->required();

  auto* gen = app.add_subcommand("generate", "seeded random instance");
  gen->add_option("--seed", c.gen_seed, "seed");
  gen->add_option("--n", c.gen_n, "number of points");
  gen->add_option("--shape", c.gen_shape,
                  "uniform-square | annulus | grid-perturbed | collinear");
  gen->add_option("--out", c.out_path, "write instance to file");

  auto* audit = app.add_subcommand("audit", "run a property audit");
  audit->add_option("name", c.audit_name, "subadd | starr | cassels | translate-bound | eq32 | decompose | meyer1d | closedforms | oracle")
      ->required();
  audit->add_option("--trials", c.audit_opts.trials, "trial count");
  audit->add_option("--seed", c.audit_opts.seed, "base seed");
  audit->add_option("--size", c.size_range, "set size range MIN:MAX");
  audit->add_option("--shape", c.audit_opts.shapes, "restrict generator shapes");
  audit->add_option("--samples", c.audit_opts.samples, "samples per trial");
  audit->add_option("--resolution", c.audit_opts.resolution, "d-oracle resolution");
  audit->add_option("--v-resolution", c.audit_opts.v_resolution, "v-oracle resolution");
  audit->add_option("--threads", c.audit_opts.threads, "worker threads (0 = auto)");
  audit->add_option("--json-out", c.json_out, "also write the report as JSON");

  auto* svg = app.add_subcommand("svg", "emit an SVG figure");
  add_in(svg);
  svg->add_option("--out", c.out_path, "output path")->required();
  svg->add_option("--overlays", c.overlays,
                  "comma list of: hull, voronoi, measure-circle, witness");
  svg->add_option("--b", c.b_spec, "set B (witness overlay)");
  svg->add_option("--x", c.x_spec, "query point 'x,y' (witness overlay)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    apply_eps(c);

    if (hull_cmd->parsed()) {
      Instance in = resolve_instance(c.in_spec);
      const auto& hv = in.points.hull().vertices;
      std::cout << "rank: " << in.points.rank() << "\nvertices:";
      for (const auto& p : hv) std::cout << " [" << fmt(p.x) << "," << fmt(p.y) << "]";
      std::cout << "\n";
    } else if (d_cmd->parsed()) {
      Instance in = resolve_instance(c.in_spec);
      print_measure("d", c.method == "grid" ? d_grid_oracle(in.points, c.resolution)
                                            : d_exact(in.points));
    } else if (v_cmd->parsed()) {
      Instance in = resolve_instance(c.in_spec);
      if (!c.x_spec.empty()) {
        double v2 = v2_at_point(in.points, parse_xy(c.x_spec));
        std::cout << "v2_at_point: " << fmt(v2) << "\n";
      } else {
        print_measure("v", c.method == "grid" ? v_grid_oracle(in.points, c.resolution)
                                              : v_exact(in.points));
      }
    } else if (rad_cmd->parsed()) {
      Instance in = resolve_instance(c.in_spec);
      print_measure("rad", rad(in.points));
    } else if (mink->parsed()) {
      PointSet a = resolve_instance(c.a_spec).points;
      PointSet b = resolve_instance(c.b_spec).points;
      PointSet ab = minkowski_finite(a, b);
      std::string j = instance_to_json(ab);
      if (!c.out_path.empty()) save_instance(ab, c.out_path);
      std::cout << j << "\n";
    } else if (cf->parsed()) {
      if (cft->parsed()) {
        TriangleSpec t{parse_xy(c.v1), parse_xy(c.v2), parse_xy(c.v3)};
        TriangleKind k = classify_triangle(t);
        std::cout << "kind: "
                  << (k == TriangleKind::Acute
                          ? "acute"
                          : (k == TriangleKind::Right ? "right" : "obtuse"))
                  << "\nd: " << fmt(triangle_d(t)) << "\n";
      } else {
        ParallelogramSpec p{c.side_a, c.side_x, c.gamma_deg * M_PI / 180.0};
        std::cout << "d: " << fmt(parallelogram_d(p)) << "\n";
        if (c.monotonicity_grid > 0) {
          std::vector<double> grid;
          for (int i = 1; i <= c.monotonicity_grid; ++i)
            grid.push_back(i * (M_PI / 2.0) / c.monotonicity_grid);
          auto rep = parallelogram_monotonicity_audit(c.side_a, c.side_x, grid);
          std::cout << "d90: " << fmt(rep.d90)
                    << "\nmax_violation: " << fmt(rep.max_violation) << "\n";
          if (rep.max_violation > 1e-9 * std::max(1.0, rep.d90)) return 1;
        }
      }
    } else if (dec->parsed()) {
      PointSet a = resolve_instance(c.a_spec).points;
      PointSet b = resolve_instance(c.b_spec).points;
      DecomposeResult r = decompose(a, b, parse_xy(c.x_spec));
      switch (r.kind) {
        case DecomposeResult::Kind::NotInHull:
          std::cout << "branch: not-in-hull\n";
          break;
        case DecomposeResult::Kind::InATranslate:
          std::cout << "branch: in-A-translate\nb: " << fmt(r.translate.x) << " "
                    << fmt(r.translate.y) << "\n";
          break;
        case DecomposeResult::Kind::InBTranslate:
          std::cout << "branch: in-B-translate\na: " << fmt(r.translate.x) << " "
                    << fmt(r.translate.y) << "\n";
          break;
        case DecomposeResult::Kind::Witness: {
          const auto& w = *r.witness;
          std::cout << "branch: witness\n"
                    << "a1: " << fmt(w.a1.x) << " " << fmt(w.a1.y) << "\n"
                    << "a2: " << fmt(w.a2.x) << " " << fmt(w.a2.y) << "\n"
                    << "b1: " << fmt(w.b1.x) << " " << fmt(w.b1.y) << "\n"
                    << "b2: " << fmt(w.b2.x) << " " << fmt(w.b2.y) << "\n"
                    << "side_a: " << fmt(w.side_a_len()) << " (bound "
                    << fmt(2 * w.d_a) << ")\n"
                    << "side_b: " << fmt(w.side_b_len()) << " (bound "
                    << fmt(2 * w.d_b) << ")\n";
          break;
        }
      }
    } else if (gen->parsed()) {
      PointSet ps = generate(c.gen_seed, c.gen_n, parse_shape(c.gen_shape));
      std::string j = instance_to_json(ps);
      if (!c.out_path.empty()) save_instance(ps, c.out_path);
      std::cout << j << "\n";
    } else if (audit->parsed()) {
      parse_size_range(c.size_range, c.audit_opts);
      AuditReport rep = run_audit(c.audit_name, c.audit_opts);
      std::cout << rep.to_text();
      if (!c.json_out.empty()) {
        std::ofstream out(c.json_out);
        if (!out) throw std::runtime_error("cannot write '" + c.json_out + "'");
        out << rep.to_json() << "\n";
      }
      return rep.ok() ? 0 : 1;
    } else if (svg->parsed()) {
      Instance in = resolve_instance(c.in_spec);
      SvgOptions so;
      std::string ov = c.overlays;
      so.hull = ov.find("hull") != std::string::npos;
      so.voronoi = ov.find("voronoi") != std::string::npos;
      if (ov.find("measure-circle") != std::string::npos || ov.find("circle") != std::string::npos) {
        MeasureResult m = d_exact(in.points);
        so.measure_circle = Circle{m.witness, m.value};
      }
      if (ov.find("witness") != std::string::npos) {
        if (c.b_spec.empty() || c.x_spec.empty())
          throw ParseError("witness overlay needs --b and --x");
        PointSet b = resolve_instance(c.b_spec).points;
        DecomposeResult r = decompose(in.points, b, parse_xy(c.x_spec));
        if (r.kind == DecomposeResult::Kind::Witness) so.witness = r.witness;
      }
      emit_svg(in.points, so, c.out_path);
      std::cout << "wrote " << c.out_path << "\n";
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
