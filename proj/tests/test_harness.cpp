#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "noncvx/audit.hpp"
#include "noncvx/generate.hpp"
#include "noncvx/instance_io.hpp"
#include "noncvx/svg.hpp"

using namespace noncvx;

TEST_CASE("instance parsing") {
  Instance j = parse_instance_text(R"({"dim":2,"points":[[-2,0],[2,0],[0,1]]})");
  CHECK(j.points.size() == 3);
  CHECK(j.points.rank() == 2);

  Instance csv = parse_instance_text("0,0\n6,0\n");
  CHECK(csv.points.size() == 2);
  CHECK(csv.points.rank() == 1);

  Instance one_d = parse_instance_text(R"({"dim":1,"points":[[0],[6],[2]]})");
  CHECK(one_d.points.declared_dim() == 1);
  CHECK(one_d.points.size() == 3);

  CHECK_THROWS_AS(parse_instance_text("[]"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(""), ParseError);
  CHECK_THROWS_AS(parse_instance_text("0,0\n1,zzz\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("0,0\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(R"({"dim":2,"points":[[1e999,0]]})"), ParseError);
}

TEST_CASE("emit/parse round trip is lossless") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    PointSet ps = generate(seed, 17, seed % 2 ? Shape::GridPerturbed : Shape::Annulus);
    Instance back = parse_instance_text(instance_to_json(ps, "roundtrip"));
    REQUIRE(back.points.size() == ps.size());
    CHECK(back.label == "roundtrip");
    for (size_t i = 0; i < ps.size(); ++i) {
      CHECK(back.points.points()[i].x == ps.points()[i].x);
      CHECK(back.points.points()[i].y == ps.points()[i].y);
    }
    Instance csv = parse_instance_text(instance_to_csv(ps));
    for (size_t i = 0; i < ps.size(); ++i)
      CHECK(csv.points.points()[i].x == ps.points()[i].x);
  }
}

TEST_CASE("generators are deterministic and shaped") {
  PointSet a = generate(42, 25, Shape::UniformSquare);
  PointSet b = generate(42, 25, Shape::UniformSquare);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points()[i].x == b.points()[i].x);
    CHECK(a.points()[i].y == b.points()[i].y);
  }
  CHECK(generate(1, 1, Shape::Annulus).size() == 1);
  CHECK(generate(2, 20, Shape::Collinear).rank() == 1);
  CHECK(generate(3, 50, Shape::GridPerturbed).rank() == 2);
  CHECK_THROWS_AS(generate(1, 0, Shape::Annulus), std::invalid_argument);
}

TEST_CASE("audit reports are reproducible and well-formed") {
  AuditOptions o;
  o.trials = 60;
  o.seed = 5;
  o.size_min = 2;
  o.size_max = 10;
  o.samples = 50;
  AuditReport r1 = run_audit("subadd", o);
  AuditReport r2 = run_audit("subadd", o);
  CHECK(r1.violations == 0);
  CHECK(r1.max_metric == r2.max_metric);
  CHECK(r1.worst_trial == r2.worst_trial);
  CHECK(r1.to_text().find("command: subadd") != std::string::npos);
  CHECK(!r1.worst_instance_json.empty());

  CHECK_THROWS_AS(run_audit("nope", o), std::invalid_argument);
}

TEST_CASE("small audit run per command") {
  AuditOptions o;
  o.trials = 12;
  o.seed = 17;
  o.size_min = 3;
  o.size_max = 9;
  o.samples = 60;
  o.resolution = 96;
  o.v_resolution = 16;
  for (const auto& name : audit_command_names()) {
    AuditReport r = run_audit(name, o);
    CHECK_MESSAGE(r.violations == 0, name, ": ", r.worst_instance_json);
  }
}

TEST_CASE("svg emission") {
  PointSet ps = PointSet::from_points({{-2, 0}, {2, 0}, {0, 1}});
  SvgOptions so;
  so.hull = true;
  so.voronoi = true;
  so.measure_circle = Circle{{0.75, 0}, 1.25};
  std::string path = "test_figure.svg";
  emit_svg(ps, so, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(all.find("<svg") != std::string::npos);
  CHECK(all.find("r='1.25'") != std::string::npos);
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(emit_svg(PointSet::from_reals({0, 1}), so, path), std::invalid_argument);
}
