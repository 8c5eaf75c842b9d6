// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/analysis.hpp"
#include "crtresca/config.hpp"
#include "crtresca/solver.hpp"

#include <Eigen/Core>

#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

namespace crtresca {

/// Mesh, space, system and trajectory of one refinement level.
struct LevelRun {
  int level = 0;
  int subdivisions = 0;
  std::shared_ptr<const Mesh> mesh;
  std::shared_ptr<const CRSpace> space;
  DiscreteSystem system;
  TrajectorySolution trajectory;
};

/// Structured base mesh refined `level` times, N * 2^level time steps.
/// `previous`, when given, must be level - 1 of the same config; its mesh is
/// refined instead of rebuilding the hierarchy.
LevelRun solve_level(const ProblemConfig& cfg, int level, const LevelRun* previous = nullptr,
                     const DiagnosticsSink& sink = {});

struct SolveSummary {
  int level = 0;
  int subdivisions = 0;
  int steps = 0;
  double h = 0.0;
  double k = 0.0;
  int dof_reported = 0;
  int dof_free = 0;
  Eigen::Vector2d u_min = Eigen::Vector2d::Zero();
  Eigen::Vector2d u_max = Eigen::Vector2d::Zero();
  long total_iterations = 0;
};

SolveSummary summarize(const LevelRun& run);
void write_summary(std::ostream& out, const SolveSummary& summary);

/// Per non-Dirichlet edge: `mx my ux uy`.
void write_fields(std::ostream& out, const CRFunction& u);

/// Solves one level; writes the final displacement to `fields_path` when non-empty.
SolveSummary run_single(const ProblemConfig& cfg, int level, const std::string& fields_path = {},
                        const DiagnosticsSink& sink = {});

using StudyProgress = std::function<void(const LevelRun&)>;

/// One row per level. Row i carries the inter-mesh error between levels i
/// and i+1 (empty on the last row) and row i > 0 the observed order.
std::vector<ConvergenceRow> run_convergence_study(const ProblemConfig& cfg,
                                                  const StudyProgress& progress = {});

/// Error between two consecutive levels of the same config.
double level_error(const LevelRun& coarse, const LevelRun& fine, ErrorMeasure measure);

/// Header `N,h,k,dof,error,order`; doubles with 17 significant digits.
void write_csv(std::ostream& out, std::span<const ConvergenceRow> rows);
std::vector<ConvergenceRow> read_csv(std::istream& in);

} // namespace crtresca
