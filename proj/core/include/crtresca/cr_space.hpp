// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include "crtresca/mesh.hpp"

#include <Eigen/Core>

#include <array>
#include <functional>
#include <memory>
#include <vector>

namespace crtresca {

/// Two-point Gauss rule on the segment [a, b]; each point carries weight length/2.
struct EdgeQuadrature {
  std::array<Point, 2> points;
  double weight = 0.0;
};
EdgeQuadrature gauss2(Point a, Point b);

/// P1 nonconforming shape functions on one triangle. Function `i` belongs to
/// the edge opposite vertex `i`: psi_i = 1 - 2 * lambda_i.
class LocalBasis {
public:
  /// Throws InvalidInput for a degenerate triangle.
  explicit LocalBasis(const std::array<Point, 3>& corners);

  double area() const { return area_; }
  Eigen::Vector3d barycentric(Point p) const;
  Eigen::Vector3d values(Point p) const;
  /// Row i holds grad psi_i (constant on the triangle).
  const Eigen::Matrix<double, 3, 2>& gradients() const { return gradients_; }

private:
  std::array<Point, 3> corners_;
  double area_ = 0.0;
  Eigen::Matrix<double, 3, 2> lambda_gradients_;
  Eigen::Matrix<double, 3, 2> gradients_;
};

LocalBasis local_basis(const std::array<Point, 3>& corners);

/// Degree-of-freedom layout of one edge. Components are indexed 0 = x, 1 = y.
struct EdgeDofs {
  /// Free-system index per component, -1 when the component is constrained.
  std::array<int, 2> dof{-1, -1};
  bool dirichlet = false;
  /// Contact edges only: the eliminated (normal) component.
  int normal_component = -1;
  /// Contact edges only: position in CRSpace::contact_edges().
  int contact_index = -1;

  bool is_contact() const { return normal_component >= 0; }
  int tangential_component() const { return 1 - normal_component; }
};

/// Vector-valued Crouzeix-Raviart space over a mesh: two components per
/// edge midpoint, none on Dirichlet edges, and the normal component removed
/// on contact edges.
class CRSpace {
public:
  /// Throws InvalidInput if a boundary edge is unclassified.
  explicit CRSpace(std::shared_ptr<const Mesh> mesh);

  const Mesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh>& mesh_ptr() const { return mesh_; }

  const EdgeDofs& edge_dofs(int e) const { return dofs_[e]; }

  /// 2 x (#edges - #Dirichlet edges); contact normals are counted.
  int n_dofs_reported() const { return n_reported_; }
  /// Size of the unknown vector after eliminating contact normals.
  int n_dofs_free() const { return n_free_; }

  const std::vector<int>& contact_edges() const { return contact_edges_; }
  int tangential_dof(int contact_index) const;

  /// Free indices of the six local unknowns (edge i, component c) -> 2*i + c,
  /// -1 where constrained.
  std::array<int, 6> element_dofs(int t) const;

private:
  std::shared_ptr<const Mesh> mesh_;
  std::vector<EdgeDofs> dofs_;
  std::vector<int> contact_edges_;
  int n_reported_ = 0;
  int n_free_ = 0;
};

std::shared_ptr<const CRSpace> build_space(std::shared_ptr<const Mesh> mesh);

/// Element of a CRSpace, stored as its free coefficients.
class CRFunction {
public:
  explicit CRFunction(std::shared_ptr<const CRSpace> space);
  CRFunction(std::shared_ptr<const CRSpace> space, Eigen::VectorXd coefficients);

  const CRSpace& space() const { return *space_; }
  const std::shared_ptr<const CRSpace>& space_ptr() const { return space_; }

  const Eigen::VectorXd& coefficients() const { return coeffs_; }
  Eigen::VectorXd& coefficients() { return coeffs_; }

  /// Value at the midpoint of edge e (zero in constrained components).
  Eigen::Vector2d edge_value(int e) const;
  /// Restriction to triangle t evaluated at p.
  Eigen::Vector2d value(int t, Point p) const;
  /// grad(i, j) = d u_i / d x_j on triangle t.
  Eigen::Matrix2d gradient(int t) const;

  CRFunction& operator+=(const CRFunction& other);
  CRFunction& operator-=(const CRFunction& other);
  CRFunction& operator*=(double s);

  friend CRFunction operator+(CRFunction a, const CRFunction& b) { return a += b; }
  friend CRFunction operator-(CRFunction a, const CRFunction& b) { return a -= b; }
  friend CRFunction operator*(double s, CRFunction a) { return a *= s; }

private:
  void require_same_space(const CRFunction& other) const;

  std::shared_ptr<const CRSpace> space_;
  Eigen::VectorXd coeffs_;
};

using VectorField = std::function<Eigen::Vector2d(Point)>;

/// Edge-mean interpolation. Dirichlet edges are skipped and the normal
/// component is dropped on contact edges.
CRFunction interpolate_cr(const VectorField& v, std::shared_ptr<const CRSpace> space);

/// Transfer to a space on the uniform refinement of `coarse`'s mesh. Each fine
/// midpoint value is the coarse field evaluated in the parent triangle of the
/// adjacent fine triangles, averaged when the parents differ.
/// Throws InvalidInput if the meshes are not nested.
CRFunction prolongate(const CRFunction& coarse, std::shared_ptr<const CRSpace> fine_space);

} // namespace crtresca
