// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/analysis.hpp"

#include "crtresca/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace crtresca {

namespace {

struct TrianglePoint {
  std::array<double, 3> bary;
  double weight;
};

// Degree-5 seven-point rule, weights normalized to sum 1.
const std::array<TrianglePoint, 7>& seven_point_rule()
{
  constexpr double a1 = 0.059715871789770, b1 = 0.470142064105115, w1 = 0.132394152788506;
  constexpr double a2 = 0.797426985353087, b2 = 0.101286507323456, w2 = 0.125939180544827;
  static const std::array<TrianglePoint, 7> rule{{
      {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 0.225},
      {{a1, b1, b1}, w1},
      {{b1, a1, b1}, w1},
      {{b1, b1, a1}, w1},
      {{a2, b2, b2}, w2},
      {{b2, a2, b2}, w2},
      {{b2, b2, a2}, w2},
  }};
  return rule;
}

} // namespace

double EnergyNormBreakdown::total() const { return std::sqrt(element_part + jump_part); }

EnergyNormBreakdown energy_norm(const CRFunction& v, const MaterialModel& mat, double rho)
{
  const Mesh& mesh = v.space().mesh();
  EnergyNormBreakdown out;

  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const int ti = static_cast<int>(t);
    const SymTensor2 eps = strain(v.gradient(ti));
    out.element_part += mesh.area(ti) * contract(stress(eps, mat), eps);
  }

  for (const auto& edge : mesh.edges()) {
    if (edge.label != BoundaryLabel::Interior && edge.label != BoundaryLabel::Dirichlet)
      continue;
    const auto q = gauss2(mesh.vertices()[edge.vertices[0]], mesh.vertices()[edge.vertices[1]]);
    double integral = 0.0;
    for (const Point& p : q.points) {
      Eigen::Vector2d jump = v.value(edge.triangles[0], p);
      if (!edge.is_boundary())
        jump -= v.value(edge.triangles[1], p);
      integral += q.weight * jump.squaredNorm();
    }
    out.jump_part += 2.0 * rho * mat.mu() / edge.length * integral;
  }
  return out;
}

EnergyNormBreakdown energy_norm(const CRFunction& v, const DiscreteSystem& system)
{
  return energy_norm(v, system.material, system.rho);
}

double broken_h1_seminorm(const CRFunction& v)
{
  const Mesh& mesh = v.space().mesh();
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const int ti = static_cast<int>(t);
    sum += mesh.area(ti) * v.gradient(ti).squaredNorm();
  }
  return std::sqrt(sum);
}

double broken_h1_error(const CRFunction& v, const GradientField& exact_gradient)
{
  const Mesh& mesh = v.space().mesh();
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const int ti = static_cast<int>(t);
    const auto c = mesh.corners(ti);
    const Eigen::Matrix2d g = v.gradient(ti);
    double local = 0.0;
    for (const auto& qp : seven_point_rule()) {
      const Point p{qp.bary[0] * c[0].x + qp.bary[1] * c[1].x + qp.bary[2] * c[2].x,
                    qp.bary[0] * c[0].y + qp.bary[1] * c[1].y + qp.bary[2] * c[2].y};
      local += qp.weight * (exact_gradient(p) - g).squaredNorm();
    }
    sum += mesh.area(ti) * local;
  }
  return std::sqrt(sum);
}

double inter_mesh_error(const CRFunction& coarse, const CRFunction& fine, const MaterialModel& mat,
                        double rho)
{
  const CRFunction diff = prolongate(coarse, fine.space_ptr()) - fine;
  return energy_norm(diff, mat, rho).total();
}

std::vector<double> eoc(std::span<const double> errors)
{
  if (errors.size() < 2)
    throw InvalidInput("eoc: at least two errors required");
  for (double e : errors)
    if (!(e > 0.0))
      throw InvalidInput("eoc: errors must be positive");
  std::vector<double> orders;
  orders.reserve(errors.size() - 1);
  for (std::size_t i = 1; i < errors.size(); ++i)
    orders.push_back(std::log2(errors[i - 1] / errors[i]));
  return orders;
}

//-----------------------------------------------------------------------------
OracleResult brute_force_vi_oracle(const Eigen::MatrixXd& K, const Eigen::VectorXd& load,
                                   const std::vector<ContactCoupling>& contact,
                                   double friction_bound, const Eigen::VectorXd& u_prev, double k,
                                   const OracleOptions& options)
{
  if (K.rows() != K.cols() || K.rows() != load.size() || u_prev.size() != load.size())
    throw InvalidInput("oracle: inconsistent dimensions");
  if (!(k > 0.0))
    throw InvalidInput("oracle: time step must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(K, Eigen::EigenvaluesOnly);
  const double L = eig.eigenvalues().maxCoeff();
  if (!(eig.eigenvalues().minCoeff() > 0.0))
    throw SolverError("oracle: matrix is not positive definite");

  // k j((u - u_prev)/k) = sum_i g_a h_i |u_i - u_prev_i|
  std::vector<double> threshold(contact.size());
  double scale = load.lpNorm<Eigen::Infinity>();
  for (std::size_t i = 0; i < contact.size(); ++i) {
    threshold[i] = friction_bound * contact[i].length / L;
    scale = std::max(scale, friction_bound * contact[i].length);
  }
  scale = std::max(scale, 1e-300);

  const auto prox = [&](Eigen::VectorXd y) {
    for (std::size_t i = 0; i < contact.size(); ++i) {
      const int d = contact[i].dof;
      const double z = y(d) - u_prev(d);
      const double shrunk = std::max(std::abs(z) - threshold[i], 0.0);
      y(d) = u_prev(d) + std::copysign(shrunk, z);
    }
    return y;
  };

  OracleResult out;
  out.u = u_prev;
  for (long it = 1; it <= options.max_iter; ++it) {
    const Eigen::VectorXd next = prox(out.u - (K * out.u - load) / L);
    out.stationarity = L * (next - out.u).lpNorm<Eigen::Infinity>() / scale;
    out.u = next;
    out.iterations = it;
    if (out.stationarity <= options.tolerance)
      return out;
  }
  std::ostringstream msg;
  msg << "oracle: stationarity " << out.stationarity << " after " << options.max_iter
      << " iterations";
  throw SolverError(msg.str());
}

CRFunction brute_force_vi_oracle(const DiscreteSystem& system, double friction_bound,
                                 const Eigen::VectorXd& load, const CRFunction& u_prev, double k,
                                 const OracleOptions& options)
{
  const Eigen::MatrixXd K(system.stiffness);
  auto result = brute_force_vi_oracle(K, load, system.contact, friction_bound,
                                      u_prev.coefficients(), k, options);
  return CRFunction(system.space, std::move(result.u));
}

} // namespace crtresca
