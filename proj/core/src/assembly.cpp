// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/assembly.hpp"

#include "crtresca/errors.hpp"

#include <cmath>

namespace crtresca {

bool AffineVector::is_zero() const
{
  return x.c == 0.0 && x.cx == 0.0 && x.cy == 0.0 && y.c == 0.0 && y.cx == 0.0 && y.cy == 0.0;
}

void LoadSpec::validate() const
{
  if (!(friction_bound >= 0.0) || !std::isfinite(friction_bound))
    throw InvalidInput("loads: friction bound must be finite and non-negative");
}

double FrictionState::max_abs() const
{
  double m = 0.0;
  for (double l : lambda)
    m = std::max(m, std::abs(l));
  return m;
}

//-----------------------------------------------------------------------------
Eigen::Matrix<double, 6, 6> element_stiffness(const std::array<Point, 3>& corners,
                                              const MaterialModel& mat)
{
  const LocalBasis basis(corners);
  const auto& g = basis.gradients();
  Eigen::Matrix<double, 3, 6> B = Eigen::Matrix<double, 3, 6>::Zero();
  for (int i = 0; i < 3; ++i) {
    B(0, 2 * i) = g(i, 0);
    B(2, 2 * i) = g(i, 1);
    B(1, 2 * i + 1) = g(i, 1);
    B(2, 2 * i + 1) = g(i, 0);
  }
  return basis.area() * B.transpose() * mat.voigt() * B;
}

SparseMatrix assemble_element_part(const CRSpace& space, const MaterialModel& mat)
{
  const Mesh& mesh = space.mesh();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(36 * mesh.num_triangles());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const int ti = static_cast<int>(t);
    const auto Ke = element_stiffness(mesh.corners(ti), mat);
    const auto dofs = space.element_dofs(ti);
    for (int a = 0; a < 6; ++a) {
      if (dofs[a] < 0)
        continue;
      for (int b = 0; b < 6; ++b)
        if (dofs[b] >= 0)
          triplets.emplace_back(dofs[a], dofs[b], Ke(a, b));
    }
  }
  SparseMatrix K(space.n_dofs_free(), space.n_dofs_free());
  K.setFromTriplets(triplets.begin(), triplets.end());
  return K;
}

SparseMatrix assemble_jump_penalty(const CRSpace& space, const MaterialModel& mat, double rho)
{
  const Mesh& mesh = space.mesh();
  const auto sets = edge_sets(mesh);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(144 * sets.stabilized.size());

  struct Entry {
    int dof;
    int component;
    double sign;
    int triangle;
    int local;
  };

  for (int e : sets.stabilized) {
    const Edge& edge = mesh.edges()[e];
    const auto q = gauss2(mesh.vertices()[edge.vertices[0]], mesh.vertices()[edge.vertices[1]]);
    const double coef = 2.0 * rho * mat.mu() / edge.length * q.weight;

    std::vector<Entry> entries;
    std::array<std::array<Eigen::Vector3d, 2>, 2> psi{};
    const int sides = edge.is_boundary() ? 1 : 2;
    for (int s = 0; s < sides; ++s) {
      const int t = edge.triangles[s];
      const LocalBasis basis(mesh.corners(t));
      psi[s] = {basis.values(q.points[0]), basis.values(q.points[1])};
      const auto dofs = space.element_dofs(t);
      for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 2; ++c)
          if (dofs[2 * i + c] >= 0)
            entries.push_back({dofs[2 * i + c], c, s == 0 ? 1.0 : -1.0, s, i});
    }

    for (const auto& a : entries)
      for (const auto& b : entries) {
        if (a.component != b.component)
          continue;
        double v = 0.0;
        for (int g = 0; g < 2; ++g)
          v += a.sign * psi[a.triangle][g](a.local) * b.sign * psi[b.triangle][g](b.local);
        triplets.emplace_back(a.dof, b.dof, coef * v);
      }
  }
  SparseMatrix P(space.n_dofs_free(), space.n_dofs_free());
  P.setFromTriplets(triplets.begin(), triplets.end());
  return P;
}

DiscreteSystem assemble_stiffness(std::shared_ptr<const CRSpace> space, const MaterialModel& mat,
                                  double rho)
{
  if (!(rho > 0.0))
    throw InvalidInput("assemble_stiffness: rho must be positive");
  DiscreteSystem sys;
  sys.material = mat;
  sys.rho = rho;
  sys.stiffness = assemble_element_part(*space, mat) + assemble_jump_penalty(*space, mat, rho);
  sys.stiffness.makeCompressed();
  const auto& edges = space->mesh().edges();
  for (std::size_t i = 0; i < space->contact_edges().size(); ++i) {
    const int ci = static_cast<int>(i);
    sys.contact.push_back({space->tangential_dof(ci), edges[space->contact_edges()[i]].length});
  }
  sys.space = std::move(space);
  return sys;
}

//-----------------------------------------------------------------------------
Eigen::VectorXd assemble_load(const CRSpace& space, const LoadSpec& loads, double t)
{
  const Mesh& mesh = space.mesh();
  Eigen::VectorXd F = Eigen::VectorXd::Zero(space.n_dofs_free());

  if (!loads.body_force.is_zero()) {
    const double s = time_factor(loads.body_profile, t);
    for (std::size_t ti = 0; ti < mesh.num_triangles(); ++ti) {
      const int tri = static_cast<int>(ti);
      const double w = mesh.area(tri) / 3.0;
      const auto& te = mesh.triangle_edges(tri);
      const auto dofs = space.element_dofs(tri);
      for (int i = 0; i < 3; ++i) {
        // psi_i is 1 at its own midpoint and 0 at the other two
        const Eigen::Vector2d f = loads.body_force(mesh.edges()[te[i]].midpoint);
        for (int c = 0; c < 2; ++c)
          if (dofs[2 * i + c] >= 0)
            F(dofs[2 * i + c]) += s * w * f(c);
      }
    }
  }

  for (const auto& traction : loads.tractions) {
    const double s = time_factor(traction.profile, t);
    for (const auto& edge : mesh.edges()) {
      if (edge.label != BoundaryLabel::Neumann || edge.side != traction.side)
        continue;
      const int tri = edge.triangles[0];
      const LocalBasis basis(mesh.corners(tri));
      const auto dofs = space.element_dofs(tri);
      const auto q = gauss2(mesh.vertices()[edge.vertices[0]], mesh.vertices()[edge.vertices[1]]);
      for (const Point& p : q.points) {
        const Eigen::Vector3d psi = basis.values(p);
        const Eigen::Vector2d g = traction.value(p);
        for (int i = 0; i < 3; ++i)
          for (int c = 0; c < 2; ++c)
            if (dofs[2 * i + c] >= 0)
              F(dofs[2 * i + c]) += s * q.weight * g(c) * psi(i);
      }
    }
  }
  return F;
}

double friction_value(const CRSpace& space, double friction_bound, const CRFunction& v)
{
  const auto& edges = space.mesh().edges();
  double j = 0.0;
  for (std::size_t i = 0; i < space.contact_edges().size(); ++i) {
    const int ci = static_cast<int>(i);
    j += edges[space.contact_edges()[i]].length
         * std::abs(v.coefficients()(space.tangential_dof(ci)));
  }
  return friction_bound * j;
}

Eigen::VectorXd friction_rhs(const CRSpace& space, double friction_bound,
                             const FrictionState& state)
{
  if (state.lambda.size() != space.contact_edges().size())
    throw InvalidInput("friction_rhs: one multiplier per contact edge expected");
  Eigen::VectorXd r = Eigen::VectorXd::Zero(space.n_dofs_free());
  const auto& edges = space.mesh().edges();
  for (std::size_t i = 0; i < state.lambda.size(); ++i) {
    const double l = state.lambda[i];
    if (!(std::abs(l) <= 1.0))
      throw InvalidInput("friction_rhs: multiplier outside [-1, 1]");
    r(space.tangential_dof(static_cast<int>(i)))
        += friction_bound * edges[space.contact_edges()[i]].length * l;
  }
  return r;
}

} // namespace crtresca
