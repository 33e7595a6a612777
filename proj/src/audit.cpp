#include "noncvx/audit.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "noncvx/closed_forms.hpp"
#include "noncvx/generate.hpp"
#include "noncvx/instance_io.hpp"
#include "noncvx/measures.hpp"
#include "noncvx/sumset.hpp"

namespace noncvx {

namespace {

using nlohmann::json;

constexpr double kRatioTol = 1e-7;       // subadditivity-style ratios
constexpr double kRelTol = 1e-7;         // closed-form vs exact, relative
constexpr double kMeyerTol = 1e-9;

struct TrialOutcome {
  double metric = -std::numeric_limits<double>::infinity();
  bool violation = false;
};

// A trial computes its outcome; when `capture` is non-null it also records
// the instance(s) for the report.
using TrialFn = std::function<TrialOutcome(long trial, json* capture)>;

std::vector<Shape> allowed_shapes(const AuditOptions& o, bool full_rank_only) {
  std::vector<Shape> all;
  if (o.shapes.empty()) {
    all = {Shape::UniformSquare, Shape::Annulus, Shape::GridPerturbed,
           Shape::Collinear};
  } else {
    for (const auto& s : o.shapes) all.push_back(parse_shape(s));
  }
  if (full_rank_only) {
    std::erase(all, Shape::Collinear);
    if (all.empty()) throw std::invalid_argument("no full-rank shape available");
  }
  return all;
}

PointSet make_set(const AuditOptions& o, long trial, int which, Rng& rng,
                  const std::vector<Shape>& shapes, bool full_rank, int min_size) {
  int lo = std::max(o.size_min, min_size);
  int hi = std::max(o.size_max, lo);
  for (uint64_t attempt = 0;; ++attempt) {
    int n = lo + static_cast<int>(rng.index(static_cast<uint64_t>(hi - lo + 1)));
    Shape sh = shapes[rng.index(shapes.size())];
    PointSet ps = generate(
        derive_seed(o.seed, static_cast<uint64_t>(trial) * 8 + which, attempt), n, sh);
    if (!full_rank || ps.rank() == 2) return ps;
    if (attempt > 200) throw std::logic_error("cannot generate a full-rank set");
  }
}

json instance_json(const PointSet& ps) { return json::parse(instance_to_json(ps)); }

double rel_dev(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

AuditReport run_trials(const std::string& command, const AuditOptions& o,
                       const std::string& metric_name, const TrialFn& fn) {
  auto start = std::chrono::steady_clock::now();
  AuditReport rep;
  rep.command = command;
  rep.seed = o.seed;
  rep.trials = o.trials;
  rep.metric_name = metric_name;
  rep.eps_rel = default_eps_rel();
  rep.rng = kRngName;

  std::vector<TrialOutcome> out(o.trials);
  unsigned nt = o.threads > 0 ? o.threads : std::thread::hardware_concurrency();
  nt = std::max(1u, std::min<unsigned>(nt, 64));
  auto worker = [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      try {
        out[t] = fn(t, nullptr);
      } catch (const std::exception&) {
        out[t] = {std::numeric_limits<double>::infinity(), true};
      }
    }
  };
  if (nt <= 1 || o.trials < 4) {
    worker(0, o.trials);
  } else {
    std::vector<std::thread> pool;
    long chunk = (o.trials + nt - 1) / nt;
    for (unsigned i = 0; i < nt; ++i) {
      long lo = i * chunk, hi = std::min<long>(o.trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  rep.max_metric = -std::numeric_limits<double>::infinity();
  for (long t = 0; t < o.trials; ++t) {
    if (out[t].violation) rep.violations++;
    if (out[t].metric > rep.max_metric) {
      rep.max_metric = out[t].metric;
      rep.worst_trial = t;
    }
  }
  if (rep.worst_trial >= 0) {
    json cap;
    try {
      fn(rep.worst_trial, &cap);
    } catch (const std::exception& e) {
      cap["error"] = e.what();
    }
    rep.worst_instance_json = cap.dump();
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// --- command implementations -------------------------------------------

std::pair<PointSet, PointSet> corpus_pair(const AuditOptions& o, long trial,
                                          const std::vector<Shape>& shapes) {
  Rng rng(derive_seed(o.seed, trial, 1));
  PointSet a = make_set(o, trial, 0, rng, shapes, false, 1);
  // Every tenth pair reuses A: the equal-set corpus.
  if (trial % 10 == 3) return {a, a};
  PointSet b = make_set(o, trial, 1, rng, shapes, false, 1);
  return {a, b};
}

AuditReport audit_subadd(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, false);
  return run_trials("subadd", o, "max_ratio", [&](long trial, json* cap) {
    auto [a, b] = corpus_pair(o, trial, shapes);
    SubadditivityRecord rec = check_subadditivity(a, b);
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["dA"] = rec.d_a;
      (*cap)["dB"] = rec.d_b;
      (*cap)["dAB"] = rec.d_ab;
      (*cap)["ratio"] = rec.ratio;
    }
    return TrialOutcome{rec.ratio, rec.ratio > 1.0 + kRatioTol};
  });
}

AuditReport audit_starr(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, false);
  return run_trials("starr", o, "max_ratio", [&](long trial, json* cap) {
    auto [a, b] = corpus_pair(o, trial, shapes);
    Measures ma = measure_all(a), mb = measure_all(b);
    Measures mab = measure_all(minkowski_finite(a, b));
    double denom = ma.rad.value * ma.rad.value + mb.rad.value * mb.rad.value;
    double ratio = denom == 0.0 ? (mab.d.value == 0.0 ? 1.0
                                                      : std::numeric_limits<double>::infinity())
                                : mab.d.value * mab.d.value / denom;
    bool bad = ratio > 1.0 + kRatioTol;
    for (const auto* m : {&ma, &mb, &mab})
      if (m->d.value > m->rad.value + kRatioTol * std::max(1.0, m->rad.value))
        bad = true;  // d <= rad pointwise
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["ratio"] = ratio;
    }
    return TrialOutcome{ratio, bad};
  });
}

AuditReport audit_cassels(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, false);
  return run_trials("cassels", o, "max_ratio", [&](long trial, json* cap) {
    auto [a, b] = corpus_pair(o, trial, shapes);
    Measures ma = measure_all(a), mb = measure_all(b);
    Measures mab = measure_all(minkowski_finite(a, b));
    double denom = ma.v.value * ma.v.value + mb.v.value * mb.v.value;
    double ratio = denom == 0.0 ? (mab.v.value == 0.0 ? 1.0
                                                      : std::numeric_limits<double>::infinity())
                                : mab.v.value * mab.v.value / denom;
    bool bad = ratio > 1.0 + kRatioTol;
    for (const auto* m : {&ma, &mb, &mab})
      if (m->d.value > m->v.value + kRatioTol * std::max(1.0, m->v.value))
        bad = true;  // d <= v pointwise
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["ratio"] = ratio;
    }
    return TrialOutcome{ratio, bad};
  });
}

AuditReport audit_translate_bound(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, false);
  return run_trials("translate-bound", o, "max_slack", [&](long trial, json* cap) {
    auto [a, b] = corpus_pair(o, trial, shapes);
    TranslateBoundReport r =
        translate_bound_check(a, b, o.samples, derive_seed(o.seed, trial, 2));
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["max_slack"] = r.max_slack;
    }
    return TrialOutcome{r.max_slack, r.violations > 0};
  });
}

AuditReport audit_eq32(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, true);
  return run_trials("eq32", o, "mismatches", [&](long trial, json* cap) {
    Rng rng(derive_seed(o.seed, trial, 1));
    PointSet a = make_set(o, trial, 0, rng, shapes, true, 3);
    PointSet b = make_set(o, trial, 1, rng, shapes, true, 3);
    PointSet ab = minkowski_finite(a, b);
    BBox box = ab.bounds();
    double mx = 0.25 * std::max(box.width(), 1e-6);
    double my = 0.25 * std::max(box.height(), 1e-6);
    Rng srng(derive_seed(o.seed, trial, 3));
    std::vector<Point2> samples;
    samples.reserve(o.samples);
    for (long i = 0; i < o.samples; ++i)
      samples.push_back({srng.uniform(box.lo.x - mx, box.hi.x + mx),
                         srng.uniform(box.lo.y - my, box.hi.y + my)});
    auto rep = boundary_decomposition_check(a, b, samples);
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["mismatches"] = rep.mismatches;
    }
    return TrialOutcome{static_cast<double>(rep.mismatches), rep.mismatches > 0};
  });
}

AuditReport audit_decompose(const AuditOptions& o) {
  auto shapes = allowed_shapes(o, true);
  return run_trials("decompose", o, "max_rect_slack", [&](long trial, json* cap) {
    Rng rng(derive_seed(o.seed, trial, 1));
    PointSet a = make_set(o, trial, 0, rng, shapes, true, 3);
    PointSet b = make_set(o, trial, 1, rng, shapes, true, 3);
    Decomposer dec(a, b);
    const PointSet& ab = dec.sum();
    Rng srng(derive_seed(o.seed, trial, 4));
    TrialOutcome out;
    long witnesses = 0;
    for (long i = 0; i < o.samples; ++i) {
      Point2 x = uniform_point_in_polygon(ab.hull(), srng);
      DecomposeResult r = dec.decompose(x);
      switch (r.kind) {
        case DecomposeResult::Kind::NotInHull:
          out.violation = true;  // sampled inside conv(A+B)
          break;
        case DecomposeResult::Kind::InATranslate:
          if (point_in_polygon(x - r.translate, a.hull(), a.tol()) ==
              Containment::Outside)
            out.violation = true;
          break;
        case DecomposeResult::Kind::InBTranslate:
          if (point_in_polygon(x - r.translate, b.hull(), b.tol()) ==
              Containment::Outside)
            out.violation = true;
          break;
        case DecomposeResult::Kind::Witness: {
          witnesses++;
          const auto& w = *r.witness;
          if (w.side_a_len() > 2.0 * dec.d_a() + kRatioTol) out.violation = true;
          if (w.side_b_len() > 2.0 * dec.d_b() + kRatioTol) out.violation = true;
          auto cs = w.corner_sums();
          ConvexPolygon para = convex_hull(std::vector<Point2>(cs.begin(), cs.end()));
          if (point_in_polygon(x, para, ab.tol()) == Containment::Outside)
            out.violation = true;
          double dx2 = std::numeric_limits<double>::infinity();
          for (const auto& s : ab.points()) dx2 = std::min(dx2, dist2(x, s));
          double half_a = 0.5 * w.side_a_len(), half_b = 0.5 * w.side_b_len();
          double slack = dx2 - (half_a * half_a + half_b * half_b);
          out.metric = std::max(out.metric, slack);
          if (slack > kRatioTol) out.violation = true;
          break;
        }
      }
    }
    if (cap) {
      (*cap)["A"] = instance_json(a);
      (*cap)["B"] = instance_json(b);
      (*cap)["witness_branches"] = witnesses;
      (*cap)["max_rect_slack"] = out.metric;
    }
    return out;
  });
}

AuditReport audit_meyer1d(const AuditOptions& o) {
  return run_trials("meyer1d", o, "max_slack", [&](long trial, json* cap) {
    Rng rng(derive_seed(o.seed, trial, 1));
    int m = 1 + static_cast<int>(rng.index(5));
    double th = M_PI * rng.unit();
    Point2 u{std::cos(th), std::sin(th)};
    std::vector<PointSet> sets;
    json inst = json::array();
    for (int s = 0; s < m; ++s) {
      int n = 1 + static_cast<int>(rng.index(8));
      Point2 c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
      double scale = rng.uniform(0.5, 2.0);
      std::vector<Point2> pts;
      for (int i = 0; i < n; ++i) {
        double t = (rng.unit() - 0.5) * scale;
        pts.push_back(c + t * u);
      }
      sets.push_back(PointSet::from_points(std::move(pts)));
      if (cap) inst.push_back(instance_json(sets.back()));
    }
    auto [lhs, bound] = meyer_bound_1d(sets);
    if (cap) {
      (*cap)["sets"] = inst;
      (*cap)["lhs"] = lhs;
      (*cap)["bound"] = bound;
    }
    return TrialOutcome{lhs - bound, lhs > bound + kMeyerTol};
  });
}

AuditReport audit_closedforms(const AuditOptions& o) {
  return run_trials("closedforms", o, "max_rel_dev", [&](long trial, json* cap) {
    Rng rng(derive_seed(o.seed, trial, 1));
    TrialOutcome out;

    TriangleSpec tr;
    do {
      tr = {{rng.unit(), rng.unit()}, {rng.unit(), rng.unit()}, {rng.unit(), rng.unit()}};
    } while (tr.area() < 1e-5);
    double cf_t = triangle_d(tr);
    double de_t = d_exact(PointSet::from_points({tr.v1, tr.v2, tr.v3})).value;
    out.metric = rel_dev(cf_t, de_t);

    ParallelogramSpec par;
    par.side_a = rng.uniform(0.1, 2.0);
    par.side_x = par.side_a * (1.0 + 9.0 * rng.unit());
    par.gamma_rad = (trial % 10 == 0) ? std::acos(0.0) : rng.uniform(0.002, std::acos(0.0));
    double cf_p = parallelogram_d(par);
    auto corners = par.corners();
    double de_p =
        d_exact(PointSet::from_points({corners.begin(), corners.end()})).value;
    out.metric = std::max(out.metric, rel_dev(cf_p, de_p));

    out.violation = out.metric > kRelTol;
    if (cap) {
      (*cap)["triangle"] = {{"v1", {tr.v1.x, tr.v1.y}},
                            {"v2", {tr.v2.x, tr.v2.y}},
                            {"v3", {tr.v3.x, tr.v3.y}},
                            {"closed_form", cf_t},
                            {"exact", de_t}};
      (*cap)["parallelogram"] = {{"a", par.side_a},
                                 {"x", par.side_x},
                                 {"gamma_rad", par.gamma_rad},
                                 {"closed_form", cf_p},
                                 {"exact", de_p}};
    }
    return out;
  });
}

AuditReport audit_oracle(const AuditOptions& o) {
  AuditOptions fat = o;
  fat.size_min = std::max(o.size_min, 8);  // keep hulls fat for grid coverage
  auto shapes = allowed_shapes(fat, true);
  return run_trials("oracle", o, "max_sandwich_slack", [&](long trial, json* cap) {
    Rng rng(derive_seed(o.seed, trial, 1));
    PointSet ps = make_set(fat, trial, 0, rng, shapes, true, 8);
    const double eps = ps.tol().eps();

    MeasureResult de = d_exact(ps);
    MeasureResult dg = d_grid_oracle(ps, o.resolution);
    double diag = grid_step_diagonal(ps, o.resolution);
    double slack = std::max(dg.value - de.value, de.value - dg.value - diag);

    MeasureResult ve = v_exact(ps);
    MeasureResult vg = v_grid_oracle(ps, o.v_resolution);
    double vdiag = grid_step_diagonal(ps, o.v_resolution);
    double rmax = Triangulation::build(ps).max_circumradius();
    double v_upper = ve.value * ve.value - vg.value * vg.value - 2.0 * rmax * vdiag;
    slack = std::max({slack, vg.value - ve.value, v_upper});

    if (cap) {
      (*cap)["set"] = instance_json(ps);
      (*cap)["d_exact"] = de.value;
      (*cap)["d_grid"] = dg.value;
      (*cap)["v_exact"] = ve.value;
      (*cap)["v_grid"] = vg.value;
    }
    return TrialOutcome{slack, slack > eps};
  });
}

}  // namespace

const std::vector<std::string>& audit_command_names() {
  static const std::vector<std::string> names = {
      "subadd",    "starr",  "cassels",     "translate-bound", "eq32",
      "decompose", "meyer1d", "closedforms", "oracle"};
  return names;
}

AuditReport run_audit(const std::string& command, const AuditOptions& opts) {
  if (command == "subadd") return audit_subadd(opts);
  if (command == "starr") return audit_starr(opts);
  if (command == "cassels") return audit_cassels(opts);
  if (command == "translate-bound") return audit_translate_bound(opts);
  if (command == "eq32") return audit_eq32(opts);
  if (command == "decompose") return audit_decompose(opts);
  if (command == "meyer1d") return audit_meyer1d(opts);
  if (command == "closedforms") return audit_closedforms(opts);
  if (command == "oracle") return audit_oracle(opts);
  throw std::invalid_argument("unknown audit command: " + command);
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n"
     << "rng: " << rng << "\n"
     << "seed: " << seed << "\n"
     << "eps_rel: " << eps_rel << "\n"
     << "trials: " << trials << "\n"
     << "violations: " << violations << "\n"
     << metric_name << ": " << max_metric << "\n"
     << "worst_trial: " << worst_trial << "\n"
     << "wall_seconds: " << wall_seconds << "\n"
     << "worst_instance: " << worst_instance_json << "\n";
  return os.str();
}

std::string AuditReport::to_json() const {
  json j;
  j["command"] = command;
  j["rng"] = rng;
  j["seed"] = seed;
  j["eps_rel"] = eps_rel;
  j["trials"] = trials;
  j["violations"] = violations;
  j["metric_name"] = metric_name;
  j["max_metric"] = max_metric;
  j["worst_trial"] = worst_trial;
  if (!worst_instance_json.empty())
    j["worst_instance"] = json::parse(worst_instance_json);
  j["wall_seconds"] = wall_seconds;
  return j.dump(2);
}

}  // namespace noncvx
