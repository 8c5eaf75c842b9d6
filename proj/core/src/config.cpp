// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/config.hpp"

#include "crtresca/errors.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace crtresca {

namespace pt = boost::property_tree;

namespace {

constexpr std::array<Side, 4> kSides{Side::Bottom, Side::Right, Side::Top, Side::Left};

std::string trim(std::string s)
{
  boost::algorithm::trim(s);
  return s;
}

double to_double(const std::string& key, const std::string& text)
{
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  }
  catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + text + "'");
  }
  if (trim(text.substr(used)) != "" || !std::isfinite(v))
    throw ConfigError(key, "expected a number, got '" + text + "'");
  return v;
}

int to_int(const std::string& key, const std::string& text)
{
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ConfigError(key, "expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

AffineScalar to_affine(const std::string& key, const std::string& text)
{
  std::vector<std::string> parts;
  const std::string t = trim(text);
  boost::algorithm::split(parts, t, boost::is_any_of(" \t"), boost::token_compress_on);
  if (parts.size() != 1 && parts.size() != 3)
    throw ConfigError(key, "expected 'c' or 'c cx cy', got '" + text + "'");
  AffineScalar a;
  a.c = to_double(key, parts[0]);
  if (parts.size() == 3) {
    a.cx = to_double(key, parts[1]);
    a.cy = to_double(key, parts[2]);
  }
  return a;
}

TimeProfile to_profile(const std::string& key, const std::string& text)
{
  const std::string t = trim(text);
  if (t == "constant")
    return TimeProfile::Constant;
  if (t == "linear")
    return TimeProfile::Linear;
  throw ConfigError(key, "expected 'constant' or 'linear', got '" + text + "'");
}

std::vector<BoundarySegment> to_segments(const std::string& key, Side side,
                                         const std::string& text, double lo, double hi)
{
  std::vector<std::string> items;
  boost::algorithm::split(items, text, boost::is_any_of(","));
  std::vector<BoundarySegment> out;
  for (auto item : items) {
    item = trim(item);
    BoundarySegment seg{side, lo, hi, BoundaryLabel::Neumann};
    std::string label = item;
    if (const auto at = item.find('@'); at != std::string::npos) {
      label = trim(item.substr(0, at));
      const std::string range = item.substr(at + 1);
      const auto colon = range.find(':');
      if (colon == std::string::npos)
        throw ConfigError(key, "segment range must look like 'from:to', got '" + range + "'");
      seg.from = to_double(key, range.substr(0, colon));
      seg.to = to_double(key, range.substr(colon + 1));
    }
    const auto parsed = parse_boundary_label(label);
    if (!parsed)
      throw ConfigError(key, "unknown boundary label '" + label + "'");
    seg.label = *parsed;
    out.push_back(seg);
  }
  return out;
}

std::set<std::string> allowed_keys()
{
  std::set<std::string> keys{
      "domain.x_min",     "domain.x_max",         "domain.y_min",      "domain.y_max",
      "material.E",       "material.nu",          "material.plane",    "loads.friction_bound",
      "loads.body_x",     "loads.body_y",         "loads.body_time",   "loads.initial_x",
      "loads.initial_y",  "time.T",               "time.N",            "mesh.n",
      "study.levels",     "study.error",          "solver.rho",        "solver.rho_tilde",
      "solver.eps",       "solver.max_iter",      "output.csv",        "output.fields",
  };
  for (auto side : kSides) {
    const std::string s(to_string(side));
    keys.insert("domain." + s);
    for (const char* suffix : {"_x", "_y", "_time"})
      keys.insert("loads.traction_" + s + suffix);
  }
  return keys;
}

} // namespace

//-----------------------------------------------------------------------------
MaterialModel ProblemConfig::material() const
{
  return MaterialModel::from_engineering(youngs_modulus, poisson_ratio, plane);
}

void ProblemConfig::validate() const
{
  try {
    domain.validate();
  }
  catch (const InvalidInput& e) {
    throw ConfigError("domain", e.what());
  }
  if (!(youngs_modulus > 0.0))
    throw ConfigError("material.E", "must be positive");
  if (!(poisson_ratio >= 0.0 && poisson_ratio < 0.5))
    throw ConfigError("material.nu", "must lie in [0, 0.5)");
  if (!(loads.friction_bound >= 0.0))
    throw ConfigError("loads.friction_bound", "must be non-negative");
  if (!(final_time > 0.0))
    throw ConfigError("time.T", "must be positive");
  if (base_steps < 1)
    throw ConfigError("time.N", "must be at least 1");
  if (base_subdivisions < 1)
    throw ConfigError("mesh.n", "must be at least 1");
  if (levels < 1)
    throw ConfigError("study.levels", "must be at least 1");
  if (!(rho > 0.0))
    throw ConfigError("solver.rho", "must be positive");
  if (!(uzawa.rho_tilde > 0.0))
    throw ConfigError("solver.rho_tilde", "must be positive");
  if (!(uzawa.eps > 0.0))
    throw ConfigError("solver.eps", "must be positive");
  if (uzawa.max_iter < 1)
    throw ConfigError("solver.max_iter", "must be at least 1");
}

ProblemConfig parse_config(std::istream& in)
{
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  }
  catch (const pt::ini_parser_error& e) {
    throw ConfigError("", std::string("malformed configuration: ") + e.what());
  }

  const auto allowed = allowed_keys();
  for (const auto& [section, body] : tree) {
    if (body.empty())
      throw ConfigError(section, "key outside of any [section]");
    for (const auto& [key, value] : body)
      if (!allowed.count(section + "." + key))
        throw ConfigError(section + "." + key, "unknown key");
  }

  const auto get = [&tree](const std::string& key) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(key))
      return trim(*v);
    return std::nullopt;
  };

  ProblemConfig cfg;
  auto& d = cfg.domain;
  if (auto v = get("domain.x_min")) d.x_min = to_double("domain.x_min", *v);
  if (auto v = get("domain.x_max")) d.x_max = to_double("domain.x_max", *v);
  if (auto v = get("domain.y_min")) d.y_min = to_double("domain.y_min", *v);
  if (auto v = get("domain.y_max")) d.y_max = to_double("domain.y_max", *v);
  for (auto side : kSides) {
    const std::string key = "domain." + std::string(to_string(side));
    const auto v = get(key);
    if (!v)
      throw ConfigError(key, "missing boundary description");
    const bool horizontal = side == Side::Bottom || side == Side::Top;
    auto segs = to_segments(key, side, *v, horizontal ? d.x_min : d.y_min,
                            horizontal ? d.x_max : d.y_max);
    d.boundary.insert(d.boundary.end(), segs.begin(), segs.end());
  }

  if (auto v = get("material.E")) cfg.youngs_modulus = to_double("material.E", *v);
  if (auto v = get("material.nu")) cfg.poisson_ratio = to_double("material.nu", *v);
  if (auto v = get("material.plane")) {
    if (*v == "strain")
      cfg.plane = PlaneAssumption::Strain;
    else if (*v == "stress")
      cfg.plane = PlaneAssumption::Stress;
    else
      throw ConfigError("material.plane", "expected 'strain' or 'stress'");
  }

  auto& l = cfg.loads;
  if (auto v = get("loads.friction_bound"))
    l.friction_bound = to_double("loads.friction_bound", *v);
  if (auto v = get("loads.body_x")) l.body_force.x = to_affine("loads.body_x", *v);
  if (auto v = get("loads.body_y")) l.body_force.y = to_affine("loads.body_y", *v);
  if (auto v = get("loads.body_time")) l.body_profile = to_profile("loads.body_time", *v);
  if (auto v = get("loads.initial_x")) l.initial_displacement.x = to_affine("loads.initial_x", *v);
  if (auto v = get("loads.initial_y")) l.initial_displacement.y = to_affine("loads.initial_y", *v);
  for (auto side : kSides) {
    const std::string prefix = "loads.traction_" + std::string(to_string(side));
    const auto x = get(prefix + "_x");
    const auto y = get(prefix + "_y");
    const auto time = get(prefix + "_time");
    if (!x && !y && !time)
      continue;
    TractionLoad tr;
    tr.side = side;
    if (x) tr.value.x = to_affine(prefix + "_x", *x);
    if (y) tr.value.y = to_affine(prefix + "_y", *y);
    if (time) tr.profile = to_profile(prefix + "_time", *time);
    l.tractions.push_back(tr);
  }

  if (auto v = get("time.T")) cfg.final_time = to_double("time.T", *v);
  if (auto v = get("time.N")) cfg.base_steps = to_int("time.N", *v);
  if (auto v = get("mesh.n")) cfg.base_subdivisions = to_int("mesh.n", *v);
  if (auto v = get("study.levels")) cfg.levels = to_int("study.levels", *v);
  if (auto v = get("study.error")) {
    if (*v == "final")
      cfg.error_measure = ErrorMeasure::FinalTime;
    else if (*v == "max")
      cfg.error_measure = ErrorMeasure::MaxOverTime;
    else
      throw ConfigError("study.error", "expected 'final' or 'max'");
  }
  if (auto v = get("solver.rho")) cfg.rho = to_double("solver.rho", *v);
  if (auto v = get("solver.rho_tilde")) cfg.uzawa.rho_tilde = to_double("solver.rho_tilde", *v);
  if (auto v = get("solver.eps")) cfg.uzawa.eps = to_double("solver.eps", *v);
  if (auto v = get("solver.max_iter")) cfg.uzawa.max_iter = to_int("solver.max_iter", *v);
  if (auto v = get("output.csv")) cfg.csv_path = *v;
  if (auto v = get("output.fields")) cfg.fields_path = *v;

  cfg.validate();
  return cfg;
}

ProblemConfig load_config(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("", "cannot open configuration file '" + path.string() + "'");
  return parse_config(in);
}

//-----------------------------------------------------------------------------
ProblemConfig preset(std::string_view name)
{
  // Square (0,4)^2 clamped on the right, pushed on the left, resting on a
  // rigid foundation along the bottom.
  ProblemConfig cfg;
  cfg.domain = Domain::rectangle(0.0, 4.0, 0.0, 4.0, BoundaryLabel::Contact,
                                 BoundaryLabel::Dirichlet, BoundaryLabel::Neumann,
                                 BoundaryLabel::Neumann);
  cfg.youngs_modulus = 200.0;
  cfg.poisson_ratio = 0.3;
  cfg.plane = PlaneAssumption::Strain;

  TractionLoad left;
  left.side = Side::Left;
  left.value.x = {0.1, 0.0, -0.02}; // 0.02 (5 - y)
  left.value.y = {-0.01, 0.0, 0.0};
  left.profile = TimeProfile::Linear;
  cfg.loads.tractions = {left};
  cfg.loads.friction_bound = 0.0012;

  cfg.final_time = 1.0;
  cfg.rho = 10.0;
  cfg.uzawa = UzawaConfig{};
  cfg.levels = 5;

  if (name == "clamped-square") {
    cfg.base_subdivisions = 2;
    cfg.base_steps = 40;
  }
  else if (name == "clamped-square-fine") {
    cfg.base_subdivisions = 4;
    cfg.base_steps = 20;
  }
  else {
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
  }
  cfg.validate();
  return cfg;
}

std::vector<std::string> preset_names() { return {"clamped-square", "clamped-square-fine"}; }

} // namespace crtresca
