// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/study.hpp"

#include "crtresca/errors.hpp"

#include <boost/algorithm/string.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace crtresca {

LevelRun solve_level(const ProblemConfig& cfg, int level, const LevelRun* previous,
                     const DiagnosticsSink& sink)
{
  cfg.validate();
  if (level < 0)
    throw ConfigError("level", "must be non-negative");

  LevelRun run;
  run.level = level;
  run.subdivisions = cfg.base_subdivisions << level;
  if (previous && previous->level == level - 1 && previous->mesh) {
    run.mesh = std::make_shared<const Mesh>(refine_uniform(*previous->mesh));
  }
  else {
    Mesh mesh = generate_structured(cfg.domain, cfg.base_subdivisions);
    for (int l = 0; l < level; ++l)
      mesh = refine_uniform(mesh);
    run.mesh = std::make_shared<const Mesh>(std::move(mesh));
  }
  run.space = build_space(run.mesh);
  run.system = assemble_stiffness(run.space, cfg.material(), cfg.rho);
  const TimeGrid grid{cfg.final_time, cfg.base_steps << level};
  run.trajectory = march(run.system, cfg.loads, grid, cfg.uzawa, sink);
  return run;
}

SolveSummary summarize(const LevelRun& run)
{
  SolveSummary s;
  s.level = run.level;
  s.subdivisions = run.subdivisions;
  s.steps = run.trajectory.grid.steps;
  s.h = run.mesh->mesh_size();
  s.k = run.trajectory.grid.step();
  s.dof_reported = run.space->n_dofs_reported();
  s.dof_free = run.space->n_dofs_free();
  s.total_iterations = run.trajectory.total_iterations();

  const CRFunction& u = run.trajectory.final().u;
  bool first = true;
  for (std::size_t e = 0; e < run.mesh->num_edges(); ++e) {
    if (run.space->edge_dofs(static_cast<int>(e)).dirichlet)
      continue;
    const Eigen::Vector2d v = u.edge_value(static_cast<int>(e));
    s.u_min = first ? v : s.u_min.cwiseMin(v);
    s.u_max = first ? v : s.u_max.cwiseMax(v);
    first = false;
  }
  return s;
}

void write_summary(std::ostream& out, const SolveSummary& s)
{
  std::ostringstream b;
  b << std::setprecision(10);
  b << "level            " << s.level << '\n'
    << "grid             " << s.subdivisions << 'x' << s.subdivisions << '\n'
    << "steps            " << s.steps << '\n'
    << "h                " << s.h << '\n'
    << "k                " << s.k << '\n'
    << "dof              " << s.dof_reported << '\n'
    << "dof_free         " << s.dof_free << '\n'
    << "ux_min ux_max    " << s.u_min(0) << ' ' << s.u_max(0) << '\n'
    << "uy_min uy_max    " << s.u_min(1) << ' ' << s.u_max(1) << '\n'
    << "uzawa_iterations " << s.total_iterations << '\n';
  out << b.str();
}

void write_fields(std::ostream& out, const CRFunction& u)
{
  std::ostringstream b;
  b << std::setprecision(17);
  const Mesh& mesh = u.space().mesh();
  for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
    if (u.space().edge_dofs(static_cast<int>(e)).dirichlet)
      continue;
    const Point m = mesh.edges()[e].midpoint;
    const Eigen::Vector2d v = u.edge_value(static_cast<int>(e));
    b << m.x << ' ' << m.y << ' ' << v(0) << ' ' << v(1) << '\n';
  }
  out << b.str();
}

SolveSummary run_single(const ProblemConfig& cfg, int level, const std::string& fields_path,
                        const DiagnosticsSink& sink)
{
  const LevelRun run = solve_level(cfg, level, nullptr, sink);
  if (!fields_path.empty()) {
    std::ofstream out(fields_path);
    if (!out)
      throw ConfigError("output.fields", "cannot write '" + fields_path + "'");
    write_fields(out, run.trajectory.final().u);
  }
  return summarize(run);
}

double level_error(const LevelRun& coarse, const LevelRun& fine, ErrorMeasure measure)
{
  const auto& material = fine.system.material;
  const double rho = fine.system.rho;
  const auto& cs = coarse.trajectory.steps;
  const auto& fs = fine.trajectory.steps;
  if (measure == ErrorMeasure::FinalTime)
    return inter_mesh_error(cs.back().u, fs.back().u, material, rho);

  if (fs.size() != 2 * (cs.size() - 1) + 1)
    throw InvalidInput("level_error: fine trajectory must take twice as many steps");
  double worst = 0.0;
  for (std::size_t n = 1; n < cs.size(); ++n)
    worst = std::max(worst, inter_mesh_error(cs[n].u, fs[2 * n].u, material, rho));
  return worst;
}

std::vector<ConvergenceRow> run_convergence_study(const ProblemConfig& cfg,
                                                  const StudyProgress& progress)
{
  cfg.validate();
  if (cfg.levels < 2)
    throw ConfigError("study.levels", "a convergence study needs at least two levels");

  std::vector<ConvergenceRow> rows;
  std::unique_ptr<LevelRun> previous;
  for (int level = 0; level < cfg.levels; ++level) {
    auto run = std::make_unique<LevelRun>(solve_level(cfg, level, previous.get()));
    if (progress)
      progress(*run);

    ConvergenceRow row;
    row.N = run->trajectory.grid.steps;
    row.h = run->mesh->mesh_size();
    row.k = run->trajectory.grid.step();
    row.dof = run->space->n_dofs_reported();
    rows.push_back(row);

    if (previous) {
      auto& coarse_row = rows[static_cast<std::size_t>(level - 1)];
      coarse_row.error = level_error(*previous, *run, cfg.error_measure);
      if (level >= 2) {
        const auto& before = rows[static_cast<std::size_t>(level - 2)];
        if (before.error && *before.error > 0.0 && *coarse_row.error > 0.0)
          coarse_row.order = eoc(std::array{*before.error, *coarse_row.error})[0];
      }
    }
    previous = std::move(run);
  }
  return rows;
}

//-----------------------------------------------------------------------------
void write_csv(std::ostream& out, std::span<const ConvergenceRow> rows)
{
  std::ostringstream b;
  b << std::setprecision(17);
  b << "N,h,k,dof,error,order\n";
  for (const auto& r : rows) {
    b << r.N << ',' << r.h << ',' << r.k << ',' << r.dof << ',';
    if (r.error)
      b << *r.error;
    b << ',';
    if (r.order)
      b << *r.order;
    b << '\n';
  }
  out << b.str();
}

std::vector<ConvergenceRow> read_csv(std::istream& in)
{
  std::string line;
  if (!std::getline(in, line) || boost::algorithm::trim_copy(line) != "N,h,k,dof,error,order")
    throw InvalidInput("read_csv: missing or unexpected header");

  const auto number = [](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw InvalidInput("read_csv: bad number '" + s + "'");
    return v;
  };

  std::vector<ConvergenceRow> rows;
  while (std::getline(in, line)) {
    boost::algorithm::trim(line);
    if (line.empty())
      continue;
    std::vector<std::string> f;
    boost::algorithm::split(f, line, boost::is_any_of(","));
    if (f.size() != 6)
      throw InvalidInput("read_csv: expected 6 fields in '" + line + "'");
    ConvergenceRow r;
    try {
      r.N = std::stoi(f[0]);
      r.h = number(f[1]);
      r.k = number(f[2]);
      r.dof = std::stoi(f[3]);
      if (!f[4].empty())
        r.error = number(f[4]);
      if (!f[5].empty())
        r.order = number(f[5]);
    }
    catch (const std::logic_error&) {
      throw InvalidInput("read_csv: malformed row '" + line + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

} // namespace crtresca
