#pragma once

#include <optional>
#include <string>

#include "noncvx/pointset.hpp"
#include "noncvx/sumset.hpp"

namespace noncvx {

struct SvgOptions {
  bool hull = false;
  bool voronoi = false;
  std::optional<Circle> measure_circle;               // d-witness circle
  std::optional<ParallelogramWitness> witness;        // decomposition overlay
};

// Standalone vector figure: sites as dots plus the requested overlays.
// Requires a rank-2 set; throws on I/O failure.
void emit_svg(const PointSet& ps, const SvgOptions& opts, const std::string& path);

}  // namespace noncvx
