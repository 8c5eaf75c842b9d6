// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/cr_space.hpp"
#include "crtresca/material.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <memory>
#include <vector>

namespace crtresca {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Tangential unknown of one contact edge and the edge length it integrates over.
struct ContactCoupling {
  int dof = -1;
  double length = 0.0;
};

/// Stabilized stiffness over the free unknowns.
struct DiscreteSystem {
  std::shared_ptr<const CRSpace> space;
  MaterialModel material = MaterialModel::from_lame(0.0, 1.0);
  double rho = 1.0;
  SparseMatrix stiffness;
  /// One entry per contact edge, in CRSpace::contact_edges() order.
  std::vector<ContactCoupling> contact;
};

/// Affine scalar c + cx * x + cy * y.
struct AffineScalar {
  double c = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  double operator()(Point p) const { return c + cx * p.x + cy * p.y; }
};

struct AffineVector {
  AffineScalar x;
  AffineScalar y;

  Eigen::Vector2d operator()(Point p) const { return {x(p), y(p)}; }
  bool is_zero() const;
};

/// Time factor s(t) multiplying a load.
enum class TimeProfile { Constant, Linear };

inline double time_factor(TimeProfile profile, double t)
{
  return profile == TimeProfile::Linear ? t : 1.0;
}

/// Surface traction on the Neumann edges of one side.
struct TractionLoad {
  Side side = Side::Left;
  AffineVector value;
  TimeProfile profile = TimeProfile::Constant;
};

struct LoadSpec {
  AffineVector body_force;
  TimeProfile body_profile = TimeProfile::Constant;
  std::vector<TractionLoad> tractions;
  /// Tresca friction bound g_a >= 0.
  double friction_bound = 0.0;
  AffineVector initial_displacement;

  void validate() const;
};

/// Per-contact-edge multiplier, |lambda_e| <= 1.
struct FrictionState {
  std::vector<double> lambda;

  static FrictionState zero(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
  double max_abs() const;
};

/// Local 6x6 stiffness of one triangle; local unknown (edge i, component c) -> 2*i + c.
Eigen::Matrix<double, 6, 6> element_stiffness(const std::array<Point, 3>& corners,
                                              const MaterialModel& mat);

/// sum_T int_T sigma(u):eps(v)
SparseMatrix assemble_element_part(const CRSpace& space, const MaterialModel& mat);

/// sum over interior and Dirichlet edges of 2 rho mu / h_e int_e [u]:[v]
SparseMatrix assemble_jump_penalty(const CRSpace& space, const MaterialModel& mat, double rho);

/// Element part plus jump penalty. Throws InvalidInput for rho <= 0.
DiscreteSystem assemble_stiffness(std::shared_ptr<const CRSpace> space, const MaterialModel& mat,
                                  double rho);

/// (l(t), v) for every free basis function.
Eigen::VectorXd assemble_load(const CRSpace& space, const LoadSpec& loads, double t);

/// sum_e g_a h_e |v_tau(m_e)|
double friction_value(const CRSpace& space, double friction_bound, const CRFunction& v);

/// g_a h_e lambda_e at each tangential unknown. Throws InvalidInput when a
/// multiplier leaves [-1, 1].
Eigen::VectorXd friction_rhs(const CRSpace& space, double friction_bound,
                             const FrictionState& state);

} // namespace crtresca
