#pragma once

#include <stdexcept>
#include <string>

#include "noncvx/pointset.hpp"

namespace noncvx {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instance {
  PointSet points;
  std::string label;
};

// Accepts a JSON object {"dim":1|2,"points":[[...],...],"label"?}, a bare
// JSON array of points, or CSV lines with 1 (dim 1) or 2 (dim 2) columns.
// Throws ParseError with a line/position diagnostic.
Instance parse_instance_text(const std::string& text);

// Loads from a file path.
Instance load_instance(const std::string& path);

// If `spec` names an existing file, load it; otherwise parse it inline.
Instance resolve_instance(const std::string& spec);

// Canonical JSON emission; coordinates round-trip losslessly.
std::string instance_to_json(const PointSet& ps, const std::string& label = "");
std::string instance_to_csv(const PointSet& ps);

void save_instance(const PointSet& ps, const std::string& path,
                   const std::string& label = "");

}  // namespace noncvx
