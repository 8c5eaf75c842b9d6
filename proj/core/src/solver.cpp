// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/solver.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace crtresca {

void TimeGrid::validate() const
{
  if (!(final_time > 0.0) || !std::isfinite(final_time))
    throw InvalidInput("time grid: final time must be positive");
  if (steps < 1)
    throw InvalidInput("time grid: at least one step required");
}

void UzawaConfig::validate() const
{
  if (!(rho_tilde > 0.0))
    throw InvalidInput("uzawa: rho_tilde must be positive");
  if (!(eps > 0.0))
    throw InvalidInput("uzawa: eps must be positive");
  if (max_iter < 1)
    throw InvalidInput("uzawa: max_iter must be at least 1");
}

//-----------------------------------------------------------------------------
SpdSolver::SpdSolver(const SparseMatrix& K) : n_(K.rows())
{
  if (K.rows() != K.cols())
    throw SolverError("solve_spd: matrix is not square");
  llt_.compute(K);
  if (llt_.info() != Eigen::Success)
    throw SolverError("solve_spd: Cholesky breakdown, matrix is not positive definite");
}

Eigen::VectorXd SpdSolver::solve(const Eigen::VectorXd& rhs) const
{
  if (rhs.size() != n_)
    throw InvalidInput("solve_spd: right-hand side has the wrong size");
  return llt_.solve(rhs);
}

Eigen::MatrixXd SpdSolver::solve(const Eigen::MatrixXd& rhs) const
{
  if (rhs.rows() != n_)
    throw InvalidInput("solve_spd: right-hand side has the wrong size");
  return llt_.solve(rhs);
}

Eigen::VectorXd solve_spd(const SparseMatrix& K, const Eigen::VectorXd& rhs)
{
  return SpdSolver(K).solve(rhs);
}

//-----------------------------------------------------------------------------
UzawaSolver::UzawaSolver(const SparseMatrix& K, std::vector<ContactCoupling> contact,
                         double friction_bound)
    : solver_(K), contact_(std::move(contact)), friction_bound_(friction_bound)
{
  if (!(friction_bound >= 0.0))
    throw InvalidInput("uzawa: friction bound must be non-negative");
  const Eigen::Index nc = static_cast<Eigen::Index>(contact_.size());
  if (nc == 0 || friction_bound_ == 0.0)
    return;

  Eigen::MatrixXd Bt = Eigen::MatrixXd::Zero(K.rows(), nc);
  Eigen::VectorXd h(nc);
  for (Eigen::Index i = 0; i < nc; ++i) {
    const auto& c = contact_[static_cast<std::size_t>(i)];
    if (c.dof < 0 || c.dof >= K.rows() || !(c.length > 0.0))
      throw InvalidInput("uzawa: invalid contact coupling");
    Bt(c.dof, i) = 1.0;
    h(i) = c.length;
  }
  response_ = solver_.solve(Bt) * h.asDiagonal();
  contact_response_.resize(nc, nc);
  for (Eigen::Index i = 0; i < nc; ++i)
    contact_response_.row(i) = response_.row(contact_[static_cast<std::size_t>(i)].dof);
  response_norm_ = response_.cwiseAbs().rowwise().sum().maxCoeff();

  // B K^{-1} B^T H is similar to the SPD matrix H^1/2 B K^{-1} B^T H^1/2
  const Eigen::VectorXd sqrt_h = h.cwiseSqrt();
  const Eigen::VectorXd inv_sqrt_h = sqrt_h.cwiseInverse();
  Eigen::MatrixXd S = sqrt_h.asDiagonal() * contact_response_ * inv_sqrt_h.asDiagonal();
  S = 0.5 * (S + S.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(S, Eigen::EigenvaluesOnly);
  sigma_max_ = eig.eigenvalues().maxCoeff();
  if (!(sigma_max_ > 0.0))
    throw SolverError("uzawa: contact Schur complement is not positive");
}

UzawaOutcome UzawaSolver::solve(const Eigen::VectorXd& load, const Eigen::VectorXd& u_prev,
                                double k, const FrictionState& start,
                                const UzawaConfig& cfg) const
{
  cfg.validate();
  if (!(k > 0.0))
    throw InvalidInput("uzawa: time step must be positive");
  const std::size_t nc = contact_.size();

  UzawaOutcome out;
  out.lambda = start.lambda.empty() ? FrictionState::zero(nc) : start;
  if (out.lambda.lambda.size() != nc)
    throw InvalidInput("uzawa: one multiplier per contact edge expected");

  const Eigen::VectorXd u_load = solver_.solve(load);
  if (nc == 0 || friction_bound_ == 0.0) {
    out.u = u_load;
    out.iterations = 1;
    return out;
  }

  const double g_a = friction_bound_;
  const double step = cfg.rho_tilde * k / (g_a * sigma_max_);
  const double exact_check = 1e3 * cfg.eps;

  Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(out.lambda.lambda.data(),
                                                             static_cast<Eigen::Index>(nc));
  Eigen::VectorXd free_slip(static_cast<Eigen::Index>(nc));
  for (std::size_t i = 0; i < nc; ++i)
    free_slip(static_cast<Eigen::Index>(i)) = u_load(contact_[i].dof) - u_prev(contact_[i].dof);

  std::vector<double> history;
  Eigen::VectorXd slip = free_slip - g_a * (contact_response_ * lambda);
  Eigen::VectorXd next(static_cast<Eigen::Index>(nc));
  for (int it = 1; it <= cfg.max_iter; ++it) {
    for (Eigen::Index i = 0; i < next.size(); ++i)
      next(i) = projection_P(lambda(i) + step * slip(i) / k);
    const Eigen::VectorXd delta = next - lambda;
    lambda = next;
    slip = free_slip - g_a * (contact_response_ * lambda);

    // displacement increment is -g_a K^{-1} B^T H delta
    double increment = g_a * response_norm_ * delta.lpNorm<Eigen::Infinity>();
    if (increment < exact_check)
      increment = g_a * (response_ * delta).lpNorm<Eigen::Infinity>();
    history.push_back(increment);

    double stick_slip = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
      if (std::abs(lambda(i)) < 1.0)
        stick_slip = std::max(stick_slip, std::abs(slip(i)));

    if (increment < cfg.eps && stick_slip < cfg.eps) {
      out.iterations = it;
      out.increment = increment;
      out.u = u_load - g_a * (response_ * lambda);
      out.lambda.lambda.assign(lambda.data(), lambda.data() + lambda.size());
      return out;
    }
  }

  std::ostringstream msg;
  msg << "uzawa: no convergence within " << cfg.max_iter << " iterations (last increment "
      << history.back() << ")";
  throw UzawaError(msg.str(), u_load - g_a * (response_ * lambda), std::move(history));
}

UzawaStepResult uzawa_step_solve(const DiscreteSystem& system, double friction_bound,
                                 const Eigen::VectorXd& load, const CRFunction& u_prev, double k,
                                 const UzawaConfig& cfg, const FrictionState* start)
{
  const UzawaSolver solver(system.stiffness, system.contact, friction_bound);
  auto out = solver.solve(load, u_prev.coefficients(), k,
                          start ? *start : FrictionState::zero(system.contact.size()), cfg);
  return {CRFunction(system.space, std::move(out.u)), std::move(out.lambda), out.iterations,
          out.increment};
}

//-----------------------------------------------------------------------------
long TrajectorySolution::total_iterations() const
{
  long total = 0;
  for (const auto& s : steps)
    total += s.iterations;
  return total;
}

TrajectorySolution march(const DiscreteSystem& system, const LoadSpec& loads, const TimeGrid& grid,
                         const UzawaConfig& cfg, const DiagnosticsSink& sink)
{
  grid.validate();
  cfg.validate();
  loads.validate();

  const CRSpace& space = *system.space;
  const UzawaSolver solver(system.stiffness, system.contact, loads.friction_bound);

  TrajectorySolution traj;
  traj.grid = grid;
  traj.steps.reserve(static_cast<std::size_t>(grid.steps) + 1);
  traj.steps.push_back({0.0, interpolate_cr(loads.initial_displacement, system.space),
                        FrictionState::zero(system.contact.size()), 0, 0.0, 0.0});

  const double k = grid.step();
  for (int n = 1; n <= grid.steps; ++n) {
    const double t = grid.node(n);
    const Eigen::VectorXd F = assemble_load(space, loads, t);
    const StepRecord& prev = traj.steps.back();

    UzawaOutcome out;
    try {
      out = solver.solve(F, prev.u.coefficients(), k, prev.lambda, cfg);
    }
    catch (const UzawaError& e) {
      throw UzawaError(std::string(e.what()) + " at step " + std::to_string(n), e.last_iterate(),
                       e.history(), n);
    }

    const Eigen::VectorXd rhs = F - friction_rhs(space, loads.friction_bound, out.lambda);
    const double scale = std::max(F.norm(), 1e-300);
    const double residual = (system.stiffness * out.u - rhs).norm() / scale;

    if (sink)
      sink({n, t, out.iterations, out.increment});
    traj.steps.push_back({t, CRFunction(system.space, std::move(out.u)), std::move(out.lambda),
                          out.iterations, out.increment, residual});
  }
  return traj;
}

} // namespace crtresca
