// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/assembly.hpp"
#include "crtresca/cr_space.hpp"
#include "crtresca/material.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace crtresca {

/// Squared pieces of the mesh-dependent energy norm.
struct EnergyNormBreakdown {
  /// sum_T int_T sigma(v):eps(v)
  double element_part = 0.0;
  /// sum over interior and Dirichlet edges of 2 rho mu / h_e ||[v]||^2_e
  double jump_part = 0.0;

  double total() const;
};

/// Evaluated element by element from the field itself, not from the
/// assembled matrix.
EnergyNormBreakdown energy_norm(const CRFunction& v, const MaterialModel& mat, double rho);
EnergyNormBreakdown energy_norm(const CRFunction& v, const DiscreteSystem& system);

/// (sum_T ||grad v||^2_T)^1/2
double broken_h1_seminorm(const CRFunction& v);

using GradientField = std::function<Eigen::Matrix2d(Point)>;

/// (sum_T ||grad_exact - grad v||^2_T)^1/2 with a degree-5 triangle rule.
double broken_h1_error(const CRFunction& v, const GradientField& exact_gradient);

/// Energy norm of prolongate(coarse) - fine on the fine mesh.
double inter_mesh_error(const CRFunction& coarse, const CRFunction& fine, const MaterialModel& mat,
                        double rho);

/// order_i = log2(e_{i-1} / e_i), one entry per consecutive pair.
/// Throws InvalidInput for fewer than two or non-positive errors.
std::vector<double> eoc(std::span<const double> errors);

/// One line of a convergence table.
struct ConvergenceRow {
  int N = 0;
  double h = 0.0;
  double k = 0.0;
  int dof = 0;
  std::optional<double> error;
  std::optional<double> order;

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct OracleOptions {
  /// Stationarity target relative to the load scale.
  double tolerance = 1e-10;
  long max_iter = 1'000'000;
};

struct OracleResult {
  Eigen::VectorXd u;
  long iterations = 0;
  double stationarity = 0.0;
};

/// Minimizes 1/2 u^T K u - F^T u + k j((u - u_prev) / k) by proximal
/// gradient descent with step 1/||K||. Intended for small dense systems.
/// Throws SolverError if the stationarity target is not met within max_iter.
OracleResult brute_force_vi_oracle(const Eigen::MatrixXd& K, const Eigen::VectorXd& load,
                                   const std::vector<ContactCoupling>& contact,
                                   double friction_bound, const Eigen::VectorXd& u_prev, double k,
                                   const OracleOptions& options = {});

CRFunction brute_force_vi_oracle(const DiscreteSystem& system, double friction_bound,
                                 const Eigen::VectorXd& load, const CRFunction& u_prev, double k,
                                 const OracleOptions& options = {});

} // namespace crtresca
