// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/assembly.hpp"
#include "crtresca/errors.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCholesky>

#include <functional>
#include <vector>

namespace crtresca {

/// Uniform partition of [0, T] into N steps.
struct TimeGrid {
  double final_time = 1.0;
  int steps = 1;

  /// Throws InvalidInput unless T > 0 and N >= 1.
  void validate() const;
  double step() const { return final_time / steps; }
  double node(int n) const { return n == steps ? final_time : n * step(); }
};

struct UzawaConfig {
  /// Multiplier step relative to the stable step of the contact Schur
  /// complement; converges for values in (0, 2).
  double rho_tilde = 1.0;
  /// Stopping tolerance on the max-norm of successive displacement iterates
  /// and on the tangential increment of every sticking contact edge.
  double eps = 1e-8;
  int max_iter = 10000;

  void validate() const;
};

/// Sparse Cholesky factorization kept for repeated solves.
class SpdSolver {
public:
  /// Throws SolverError when K is not symmetric positive definite.
  explicit SpdSolver(const SparseMatrix& K);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;
  Eigen::Index size() const { return n_; }

private:
  Eigen::SimplicialLLT<SparseMatrix> llt_;
  Eigen::Index n_ = 0;
};

/// One-shot factorize and solve.
Eigen::VectorXd solve_spd(const SparseMatrix& K, const Eigen::VectorXd& rhs);

/// Clamp to [-1, 1].
inline double projection_P(double chi) { return chi < -1.0 ? -1.0 : (chi > 1.0 ? 1.0 : chi); }

/// Thrown when the multiplier iteration hits max_iter.
class UzawaError : public SolverError {
public:
  UzawaError(const std::string& what, Eigen::VectorXd last_iterate, std::vector<double> history,
             int step = -1)
      : SolverError(what), last_iterate_(std::move(last_iterate)), history_(std::move(history)),
        step_(step)
  {
  }

  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
  /// Increment norm after each multiplier update.
  const std::vector<double>& history() const { return history_; }
  /// Time step index, -1 when raised outside march().
  int step() const { return step_; }

private:
  Eigen::VectorXd last_iterate_;
  std::vector<double> history_;
  int step_;
};

struct UzawaOutcome {
  Eigen::VectorXd u;
  FrictionState lambda;
  int iterations = 0;
  /// Max-norm of the last displacement increment.
  double increment = 0.0;
};

/// Multiplier iteration for one backward Euler step of the Tresca problem
///
///   K u = F - g_a B^T H lambda,   lambda <- P(lambda + c (B u - B u_prev) / k),
///
/// where B picks the tangential unknowns and H holds the contact edge
/// lengths. K is factorized once; the responses K^{-1} B^T are cached so an
/// iteration costs O(#contact^2) instead of a triangular solve. The step
/// c = rho_tilde * k / (g_a * s_max) uses the largest eigenvalue s_max of the
/// contact Schur complement B K^{-1} B^T H.
class UzawaSolver {
public:
  UzawaSolver(const SparseMatrix& K, std::vector<ContactCoupling> contact, double friction_bound);

  UzawaOutcome solve(const Eigen::VectorXd& load, const Eigen::VectorXd& u_prev, double k,
                     const FrictionState& start, const UzawaConfig& cfg) const;

  const SpdSolver& linear_solver() const { return solver_; }
  double schur_spectral_radius() const { return sigma_max_; }

private:
  SpdSolver solver_;
  std::vector<ContactCoupling> contact_;
  double friction_bound_ = 0.0;
  Eigen::MatrixXd response_;         // K^{-1} B^T H
  Eigen::MatrixXd contact_response_; // B K^{-1} B^T H
  double response_norm_ = 0.0;       // max abs row sum of response_
  double sigma_max_ = 0.0;
};

struct UzawaStepResult {
  CRFunction u;
  FrictionState lambda;
  int iterations = 0;
  double increment = 0.0;
};

/// Convenience wrapper that factorizes `system` and solves a single step.
UzawaStepResult uzawa_step_solve(const DiscreteSystem& system, double friction_bound,
                                 const Eigen::VectorXd& load, const CRFunction& u_prev, double k,
                                 const UzawaConfig& cfg, const FrictionState* start = nullptr);

struct StepRecord {
  double time = 0.0;
  CRFunction u;
  FrictionState lambda;
  int iterations = 0;
  double increment = 0.0;
  /// ||K u - (F - friction)|| / ||F||, 0 for the initial node.
  double linear_residual = 0.0;
};

struct TrajectorySolution {
  TimeGrid grid;
  /// steps[n] is the state at t_n; steps[0] holds the interpolated initial data.
  std::vector<StepRecord> steps;

  const StepRecord& final() const { return steps.back(); }
  long total_iterations() const;
};

struct StepDiagnostics {
  int step = 0;
  double time = 0.0;
  int iterations = 0;
  double increment = 0.0;
};

using DiagnosticsSink = std::function<void(const StepDiagnostics&)>;

/// Backward Euler in time with warm-started multipliers. Uzawa failures are
/// rethrown as UzawaError carrying the step index.
TrajectorySolution march(const DiscreteSystem& system, const LoadSpec& loads, const TimeGrid& grid,
                         const UzawaConfig& cfg, const DiagnosticsSink& sink = {});

} // namespace crtresca
