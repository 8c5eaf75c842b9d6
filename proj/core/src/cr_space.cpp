// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/cr_space.hpp"

#include "crtresca/errors.hpp"

#include <cmath>
#include <limits>

namespace crtresca {

EdgeQuadrature gauss2(Point a, Point b)
{
  const double s = 0.5 / std::sqrt(3.0);
  const double cx = 0.5 * (a.x + b.x), cy = 0.5 * (a.y + b.y);
  const double dx = b.x - a.x, dy = b.y - a.y;
  return {{Point{cx - s * dx, cy - s * dy}, Point{cx + s * dx, cy + s * dy}},
          0.5 * std::hypot(dx, dy)};
}

//-----------------------------------------------------------------------------
LocalBasis::LocalBasis(const std::array<Point, 3>& corners) : corners_(corners)
{
  const auto& [a, b, c] = corners;
  const double twice_area = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  const double scale = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                 std::abs(c.y - a.y)});
  if (!(std::abs(twice_area) > 1e-14 * scale * scale))
    throw InvalidInput("local_basis: degenerate triangle");
  area_ = 0.5 * std::abs(twice_area);

  for (int i = 0; i < 3; ++i) {
    const Point& pj = corners[(i + 1) % 3];
    const Point& pk = corners[(i + 2) % 3];
    lambda_gradients_(i, 0) = (pj.y - pk.y) / twice_area;
    lambda_gradients_(i, 1) = (pk.x - pj.x) / twice_area;
  }
  gradients_ = -2.0 * lambda_gradients_;
}

Eigen::Vector3d LocalBasis::barycentric(Point p) const
{
  Eigen::Vector3d lam;
  for (int i = 0; i < 3; ++i) {
    // lambda_i vanishes on the opposite edge, which passes through corner i+1
    const Point& pj = corners_[(i + 1) % 3];
    lam(i) = lambda_gradients_(i, 0) * (p.x - pj.x) + lambda_gradients_(i, 1) * (p.y - pj.y);
  }
  return lam;
}

Eigen::Vector3d LocalBasis::values(Point p) const
{
  return Eigen::Vector3d::Ones() - 2.0 * barycentric(p);
}

LocalBasis local_basis(const std::array<Point, 3>& corners) { return LocalBasis(corners); }

//-----------------------------------------------------------------------------
CRSpace::CRSpace(std::shared_ptr<const Mesh> mesh) : mesh_(std::move(mesh))
{
  if (!mesh_)
    throw InvalidInput("CRSpace: null mesh");
  const auto& edges = mesh_->edges();
  dofs_.resize(edges.size());

  int next = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    EdgeDofs& d = dofs_[e];
    if (edge.is_boundary() && edge.label == BoundaryLabel::Interior)
      throw InvalidInput("CRSpace: unclassified boundary edge");
    if (edge.label == BoundaryLabel::Dirichlet) {
      d.dirichlet = true;
      continue;
    }
    n_reported_ += 2;
    if (edge.label == BoundaryLabel::Contact) {
      if (!edge.side)
        throw InvalidInput("CRSpace: contact edge without a side");
      d.normal_component = (*edge.side == Side::Bottom || *edge.side == Side::Top) ? 1 : 0;
      d.contact_index = static_cast<int>(contact_edges_.size());
      contact_edges_.push_back(static_cast<int>(e));
      d.dof[d.tangential_component()] = next++;
    }
    else {
      d.dof[0] = next++;
      d.dof[1] = next++;
    }
  }
  n_free_ = next;
}

int CRSpace::tangential_dof(int contact_index) const
{
  const EdgeDofs& d = dofs_[contact_edges_[contact_index]];
  return d.dof[d.tangential_component()];
}

std::array<int, 6> CRSpace::element_dofs(int t) const
{
  std::array<int, 6> out{};
  const auto& te = mesh_->triangle_edges(t);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 2; ++c)
      out[2 * i + c] = dofs_[te[i]].dof[c];
  return out;
}

std::shared_ptr<const CRSpace> build_space(std::shared_ptr<const Mesh> mesh)
{
  return std::make_shared<const CRSpace>(std::move(mesh));
}

//-----------------------------------------------------------------------------
CRFunction::CRFunction(std::shared_ptr<const CRSpace> space)
    : space_(std::move(space)), coeffs_(Eigen::VectorXd::Zero(space_->n_dofs_free()))
{
}

CRFunction::CRFunction(std::shared_ptr<const CRSpace> space, Eigen::VectorXd coefficients)
    : space_(std::move(space)), coeffs_(std::move(coefficients))
{
  if (coeffs_.size() != space_->n_dofs_free())
    throw InvalidInput("CRFunction: coefficient vector has the wrong size");
}

Eigen::Vector2d CRFunction::edge_value(int e) const
{
  const auto& d = space_->edge_dofs(e);
  Eigen::Vector2d v;
  for (int c = 0; c < 2; ++c)
    v(c) = d.dof[c] >= 0 ? coeffs_(d.dof[c]) : 0.0;
  return v;
}

Eigen::Vector2d CRFunction::value(int t, Point p) const
{
  const LocalBasis basis(space_->mesh().corners(t));
  const Eigen::Vector3d psi = basis.values(p);
  const auto& te = space_->mesh().triangle_edges(t);
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
  for (int i = 0; i < 3; ++i)
    v += psi(i) * edge_value(te[i]);
  return v;
}

Eigen::Matrix2d CRFunction::gradient(int t) const
{
  const LocalBasis basis(space_->mesh().corners(t));
  const auto& te = space_->mesh().triangle_edges(t);
  Eigen::Matrix2d g = Eigen::Matrix2d::Zero();
  for (int i = 0; i < 3; ++i)
    g += edge_value(te[i]) * basis.gradients().row(i);
  return g;
}

void CRFunction::require_same_space(const CRFunction& other) const
{
  if (space_ != other.space_)
    throw InvalidInput("CRFunction: operands live in different spaces");
}

CRFunction& CRFunction::operator+=(const CRFunction& other)
{
  require_same_space(other);
  coeffs_ += other.coeffs_;
  return *this;
}

CRFunction& CRFunction::operator-=(const CRFunction& other)
{
  require_same_space(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

CRFunction& CRFunction::operator*=(double s)
{
  coeffs_ *= s;
  return *this;
}

//-----------------------------------------------------------------------------
CRFunction interpolate_cr(const VectorField& v, std::shared_ptr<const CRSpace> space)
{
  CRFunction out(space);
  const auto& edges = space->mesh().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& d = space->edge_dofs(static_cast<int>(e));
    if (d.dirichlet)
      continue;
    const Edge& edge = edges[e];
    const auto q = gauss2(space->mesh().vertices()[edge.vertices[0]],
                          space->mesh().vertices()[edge.vertices[1]]);
    const Eigen::Vector2d mean = 0.5 * (v(q.points[0]) + v(q.points[1]));
    for (int c = 0; c < 2; ++c)
      if (d.dof[c] >= 0)
        out.coefficients()(d.dof[c]) = mean(c);
  }
  return out;
}

namespace {

bool inside(const LocalBasis& basis, Point p)
{
  const Eigen::Vector3d lam = basis.barycentric(p);
  return lam.minCoeff() > -1e-10;
}

} // namespace

CRFunction prolongate(const CRFunction& coarse, std::shared_ptr<const CRSpace> fine_space)
{
  const Mesh& cm = coarse.space().mesh();
  const Mesh& fm = fine_space->mesh();
  if (!fm.has_parents() || fm.level() != cm.level() + 1
      || fm.num_triangles() != 4 * cm.num_triangles())
    throw InvalidInput("prolongate: fine mesh is not the uniform refinement of the coarse mesh");
  for (std::size_t t = 0; t < fm.num_triangles(); ++t) {
    const auto [a, b, c] = fm.corners(static_cast<int>(t));
    const Point centroid{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
    if (!inside(LocalBasis(cm.corners(fm.parent_map()[t])), centroid))
      throw InvalidInput("prolongate: fine triangle lies outside its recorded parent");
  }

  CRFunction fine(fine_space);
  const auto& edges = fm.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& d = fine_space->edge_dofs(static_cast<int>(e));
    if (d.dirichlet)
      continue;
    const Edge& edge = edges[e];
    const int p0 = fm.parent_map()[edge.triangles[0]];
    Eigen::Vector2d v = coarse.value(p0, edge.midpoint);
    if (edge.triangles[1] >= 0) {
      const int p1 = fm.parent_map()[edge.triangles[1]];
      if (p1 != p0)
        v = 0.5 * (v + coarse.value(p1, edge.midpoint));
    }
    for (int c = 0; c < 2; ++c)
      if (d.dof[c] >= 0)
        fine.coefficients()(d.dof[c]) = v(c);
  }
  return fine;
}

} // namespace crtresca
