// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/config.hpp"
#include "crtresca/errors.hpp"
#include "crtresca/study.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

struct Source {
  std::string config_path;
  std::string preset_name;
};

void add_source_options(CLI::App* cmd, Source& src)
{
  auto* config = cmd->add_option("--config", src.config_path, "Problem configuration file")
                     ->check(CLI::ExistingFile);
  auto* preset = cmd->add_option("--preset", src.preset_name, "Built-in problem")
                     ->check(CLI::IsMember(crtresca::preset_names()));
  config->excludes(preset);
  preset->excludes(config);
}

crtresca::ProblemConfig resolve(const Source& src)
{
  if (!src.preset_name.empty())
    return crtresca::preset(src.preset_name);
  if (!src.config_path.empty())
    return crtresca::load_config(src.config_path);
  throw crtresca::ConfigError("", "one of --config or --preset is required");
}

void print_table(std::ostream& out, const std::vector<crtresca::ConvergenceRow>& rows)
{
  out << std::setw(6) << "N" << std::setw(12) << "h" << std::setw(12) << "k" << std::setw(8)
      << "DOF" << std::setw(14) << "error" << std::setw(9) << "order" << '\n';
  for (const auto& r : rows) {
    out << std::setw(6) << r.N << std::setw(12) << std::setprecision(5) << r.h << std::setw(12)
        << r.k << std::setw(8) << r.dof << std::setw(14) << std::scientific << std::setprecision(4);
    if (r.error)
      out << *r.error;
    else
      out << "-";
    out << std::defaultfloat << std::setw(9) << std::setprecision(4);
    if (r.order)
      out << *r.order;
    else
      out << "-";
    out << '\n';
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Crouzeix-Raviart solver for quasi-static Tresca friction contact"};
  app.require_subcommand(1);

  Source solve_src;
  int level = 0;
  std::string dump_fields;
  std::string dump_mesh;
  bool verbose = false;
  auto* solve = app.add_subcommand("solve", "Run one refinement level and print a summary");
  add_source_options(solve, solve_src);
  solve->add_option("--level", level, "Refinement level")->check(CLI::NonNegativeNumber);
  solve->add_option("--dump-fields", dump_fields, "Write final displacement (mx my ux uy)");
  solve->add_option("--dump-mesh", dump_mesh, "Write the mesh (v/t/e lines)");
  solve->add_flag("-v,--verbose", verbose, "Per-step Uzawa diagnostics on stderr");

  Source study_src;
  std::string csv_out;
  auto* study = app.add_subcommand("study", "Run the refinement study and emit a CSV table");
  add_source_options(study, study_src);
  study->add_option("--out", csv_out, "CSV output path (default: [output] csv or stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto cfg = resolve(solve_src);
      crtresca::DiagnosticsSink sink;
      if (verbose)
        sink = [](const crtresca::StepDiagnostics& d) {
          std::cerr << "step " << d.step << " t=" << d.time << " uzawa=" << d.iterations
                    << " increment=" << d.increment << '\n';
        };
      const std::string fields = dump_fields.empty() ? cfg.fields_path : dump_fields;
      const auto run = crtresca::solve_level(cfg, level, nullptr, sink);
      if (!fields.empty()) {
        std::ofstream out(fields);
        if (!out)
          throw crtresca::ConfigError("--dump-fields", "cannot write '" + fields + "'");
        crtresca::write_fields(out, run.trajectory.final().u);
      }
      if (!dump_mesh.empty()) {
        std::ofstream out(dump_mesh);
        if (!out)
          throw crtresca::ConfigError("--dump-mesh", "cannot write '" + dump_mesh + "'");
        run.mesh->write(out);
      }
      crtresca::write_summary(std::cout, crtresca::summarize(run));
    }
    else if (*study) {
      const auto cfg = resolve(study_src);
      const auto start = std::chrono::steady_clock::now();
      const auto rows = crtresca::run_convergence_study(cfg, [&](const crtresca::LevelRun& run) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cerr << "level " << run.level << ": " << run.subdivisions << 'x' << run.subdivisions
                  << ", N=" << run.trajectory.grid.steps << ", dof=" << run.space->n_dofs_reported()
                  << ", uzawa=" << run.trajectory.total_iterations() << " (" << elapsed.count()
                  << " s)\n";
      });
      const std::string path = csv_out.empty() ? cfg.csv_path : csv_out;
      if (path.empty()) {
        crtresca::write_csv(std::cout, rows);
      }
      else {
        std::ofstream out(path);
        if (!out)
          throw crtresca::ConfigError("--out", "cannot write '" + path + "'");
        crtresca::write_csv(out, rows);
        print_table(std::cout, rows);
      }
    }
  }
  catch (const crtresca::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (const crtresca::InvalidInput& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  catch (const crtresca::SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kExitSolver;
  }
  return 0;
}
