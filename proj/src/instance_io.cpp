#include "noncvx/instance_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace noncvx {

namespace {

using nlohmann::json;

double parse_double(const std::string& tok, long line_no) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
  if (!std::isfinite(v))
    throw ParseError("line " + std::to_string(line_no) + ": non-finite coordinate");
  return v;
}

Instance from_json_points(const json& pts_j, int dim, std::string label) {
  std::vector<Point2> pts;
  std::vector<double> reals;
  for (const auto& el : pts_j) {
    if (el.is_number()) {
      reals.push_back(el.get<double>());
    } else if (el.is_array() && el.size() == 1) {
      reals.push_back(el[0].get<double>());
    } else if (el.is_array() && el.size() == 2) {
      pts.push_back({el[0].get<double>(), el[1].get<double>()});
    } else {
      throw ParseError("points must be numbers, [t] or [x,y] entries");
    }
  }
  if (!pts.empty() && !reals.empty())
    throw ParseError("mixed 1D and 2D point entries");
  if (pts.empty() && reals.empty()) throw ParseError("empty set");
  for (const auto& p : pts)
    if (!finite(p)) throw ParseError("non-finite coordinate");
  for (double t : reals)
    if (!std::isfinite(t)) throw ParseError("non-finite coordinate");
  if (!reals.empty()) {
    if (dim == 2) throw ParseError("dim 2 requires [x,y] points");
    return {PointSet::from_reals(reals), std::move(label)};
  }
  if (dim == 1) throw ParseError("dim 1 requires scalar or [t] points");
  return {PointSet::from_points(std::move(pts), 2), std::move(label)};
}

Instance parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.is_array()) return from_json_points(j, 0, "");
    if (!j.is_object() || !j.contains("points"))
      throw ParseError("expected an object with a 'points' array");
    int dim = j.value("dim", 0);
    if (j.contains("dim") && dim != 1 && dim != 2)
      throw ParseError("dim must be 1 or 2");
    std::string label = j.value("label", "");
    return from_json_points(j.at("points"), dim, std::move(label));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

Instance parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Point2> pts;
  std::vector<double> reals;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    size_t comma = line.find(',');
    if (comma == std::string::npos) {
      reals.push_back(parse_double(line, line_no));
    } else {
      if (line.find(',', comma + 1) != std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": expected 1 or 2 columns");
      pts.push_back({parse_double(line.substr(0, comma), line_no),
                     parse_double(line.substr(comma + 1), line_no)});
    }
  }
  if (!pts.empty() && !reals.empty()) throw ParseError("mixed 1 and 2 column rows");
  if (pts.empty() && reals.empty()) throw ParseError("empty set");
  if (!reals.empty()) return {PointSet::from_reals(reals), ""};
  return {PointSet::from_points(std::move(pts), 2), ""};
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) throw ParseError("empty set");
  try {
    if (text[a] == '{' || text[a] == '[') return parse_json(text);
    return parse_csv(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // PointSet validation ("empty set", ...)
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

Instance resolve_instance(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return load_instance(spec);
  return parse_instance_text(spec);
}

std::string instance_to_json(const PointSet& ps, const std::string& label) {
  json j;
  j["dim"] = ps.declared_dim();
  json pts = json::array();
  if (ps.declared_dim() == 1) {
    for (const auto& p : ps.points()) pts.push_back(json::array({p.x}));
  } else {
    for (const auto& p : ps.points()) pts.push_back(json::array({p.x, p.y}));
  }
  j["points"] = std::move(pts);
  if (!label.empty()) j["label"] = label;
  return j.dump();
}

std::string instance_to_csv(const PointSet& ps) {
  std::ostringstream os;
  char buf[64];
  for (const auto& p : ps.points()) {
    if (ps.declared_dim() == 1) {
      snprintf(buf, sizeof buf, "%.17g", p.x);
      os << buf << "\n";
    } else {
      snprintf(buf, sizeof buf, "%.17g,", p.x);
      os << buf;
      snprintf(buf, sizeof buf, "%.17g", p.y);
      os << buf << "\n";
    }
  }
  return os.str();
}

void save_instance(const PointSet& ps, const std::string& path,
                   const std::string& label) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << instance_to_json(ps, label) << "\n";
}

}  // namespace noncvx
