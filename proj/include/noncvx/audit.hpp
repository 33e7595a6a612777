#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace noncvx {

struct AuditOptions {
  uint64_t seed = 7;
  long trials = 1000;
  int size_min = 2;
  int size_max = 40;
  int resolution = 1024;   // d-oracle grid
  int v_resolution = 32;   // v-oracle grid (Caratheodory enumeration is O(n^3))
  long samples = 1000;     // membership / decompose samples per trial
  int threads = 0;         // 0 = hardware concurrency
  std::vector<std::string> shapes;  // empty = all four generators
};

struct AuditReport {
  std::string command;
  uint64_t seed = 0;
  long trials = 0;
  long violations = 0;
  std::string metric_name;
  double max_metric = 0.0;
  long worst_trial = -1;
  std::string worst_instance_json;  // instance(s) of the worst trial, inline
  double wall_seconds = 0.0;
  double eps_rel = 1e-9;
  std::string rng;

  bool ok() const { return violations == 0; }
  std::string to_text() const;
  std::string to_json() const;
};

// Commands: subadd, starr, cassels, translate-bound, eq32, decompose,
// meyer1d, closedforms, oracle. Throws std::invalid_argument on unknown
// names. Trials run in parallel with order-independent aggregation; the
// worst trial is re-run serially to capture its instance.
AuditReport run_audit(const std::string& command, const AuditOptions& opts);

const std::vector<std::string>& audit_command_names();

}  // namespace noncvx
