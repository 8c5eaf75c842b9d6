// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#include "crtresca/mesh.hpp"

#include "crtresca/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace crtresca {

namespace {

constexpr std::array<Side, 4> kSides{Side::Bottom, Side::Right, Side::Top, Side::Left};

double side_coordinate(Side side, Point p)
{
  return (side == Side::Bottom || side == Side::Top) ? p.x : p.y;
}

std::pair<double, double> side_range(const Domain& d, Side side)
{
  if (side == Side::Bottom || side == Side::Top)
    return {d.x_min, d.x_max};
  return {d.y_min, d.y_max};
}

std::pair<int, int> edge_key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

double distance(Point a, Point b) { return std::hypot(b.x - a.x, b.y - a.y); }

} // namespace

std::string_view to_string(BoundaryLabel label)
{
  switch (label) {
  case BoundaryLabel::Interior: return "interior";
  case BoundaryLabel::Dirichlet: return "dirichlet";
  case BoundaryLabel::Neumann: return "neumann";
  case BoundaryLabel::Contact: return "contact";
  }
  return "unknown";
}

std::string_view to_string(Side side)
{
  switch (side) {
  case Side::Bottom: return "bottom";
  case Side::Right: return "right";
  case Side::Top: return "top";
  case Side::Left: return "left";
  }
  return "unknown";
}

std::optional<BoundaryLabel> parse_boundary_label(std::string_view text)
{
  for (auto label : {BoundaryLabel::Dirichlet, BoundaryLabel::Neumann, BoundaryLabel::Contact})
    if (text == to_string(label))
      return label;
  return std::nullopt;
}

std::optional<Side> parse_side(std::string_view text)
{
  for (auto side : kSides)
    if (text == to_string(side))
      return side;
  return std::nullopt;
}

//-----------------------------------------------------------------------------
void Domain::validate() const
{
  if (!(x_min < x_max) || !(y_min < y_max))
    throw InvalidInput("domain: empty rectangle");

  const double tol = 1e-12 * diameter();
  double dirichlet_length = 0.0;
  for (auto side : kSides) {
    std::vector<std::pair<double, double>> intervals;
    const auto [lo, hi] = side_range(*this, side);
    for (const auto& seg : boundary) {
      if (seg.side != side)
        continue;
      if (seg.label == BoundaryLabel::Interior)
        throw InvalidInput("domain: boundary segment labeled interior");
      if (!(seg.from < seg.to))
        throw InvalidInput("domain: boundary segment on " + std::string(to_string(side))
                           + " has from >= to");
      if (seg.from < lo - tol || seg.to > hi + tol)
        throw InvalidInput("domain: boundary segment on " + std::string(to_string(side))
                           + " leaves the side");
      intervals.emplace_back(seg.from, seg.to);
      if (seg.label == BoundaryLabel::Dirichlet)
        dirichlet_length += seg.to - seg.from;
    }
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 1; i < intervals.size(); ++i)
      if (intervals[i].first < intervals[i - 1].second - tol)
        throw InvalidInput("domain: overlapping boundary segments on "
                           + std::string(to_string(side)));
  }
  if (!(dirichlet_length > 0.0))
    throw InvalidInput("domain: Dirichlet boundary must have positive length");
}

double Domain::diameter() const { return std::hypot(x_max - x_min, y_max - y_min); }

std::optional<Side> Domain::side_of(Point p) const
{
  if (p.y == y_min)
    return Side::Bottom;
  if (p.x == x_max)
    return Side::Right;
  if (p.y == y_max)
    return Side::Top;
  if (p.x == x_min)
    return Side::Left;
  return std::nullopt;
}

std::optional<BoundaryLabel> Domain::label_at(Side side, Point p) const
{
  const double s = side_coordinate(side, p);
  for (const auto& seg : boundary)
    if (seg.side == side && seg.from <= s && s <= seg.to)
      return seg.label;
  return std::nullopt;
}

Domain Domain::rectangle(double x_min, double x_max, double y_min, double y_max,
                         BoundaryLabel bottom, BoundaryLabel right, BoundaryLabel top,
                         BoundaryLabel left)
{
  Domain d{x_min, x_max, y_min, y_max, {}};
  d.boundary = {{Side::Bottom, x_min, x_max, bottom},
                {Side::Right, y_min, y_max, right},
                {Side::Top, x_min, x_max, top},
                {Side::Left, y_min, y_max, left}};
  return d;
}

//-----------------------------------------------------------------------------
std::array<Point, 3> Mesh::corners(int t) const
{
  const auto& tri = triangles_[t];
  return {vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]};
}

double Mesh::signed_area(int t) const
{
  const auto [a, b, c] = corners(t);
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double Mesh::diameter(int t) const
{
  const auto [a, b, c] = corners(t);
  return std::max({distance(a, b), distance(b, c), distance(c, a)});
}

double Mesh::mesh_size() const
{
  double h = 0.0;
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    h = std::max(h, diameter(static_cast<int>(t)));
  return h;
}

void Mesh::write(std::ostream& out) const
{
  std::ostringstream buffer;
  buffer.precision(17);
  for (const auto& v : vertices_)
    buffer << "v " << v.x << ' ' << v.y << '\n';
  for (const auto& t : triangles_)
    buffer << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  for (const auto& e : edges_)
    buffer << "e " << e.vertices[0] << ' ' << e.vertices[1] << ' ' << to_string(e.label) << '\n';
  out << buffer.str();
}

template <typename Labeler>
void Mesh::build_edges(Labeler&& boundary_label)
{
  std::map<std::pair<int, int>, int> index;
  edges_.clear();
  triangle_edges_.assign(triangles_.size(), {-1, -1, -1});

  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (int i = 0; i < 3; ++i) {
      const int a = tri[(i + 1) % 3];
      const int b = tri[(i + 2) % 3];
      auto [it, inserted] = index.try_emplace(edge_key(a, b), static_cast<int>(edges_.size()));
      if (inserted) {
        Edge e;
        e.vertices = {a, b};
        e.triangles = {static_cast<int>(t), -1};
        const Point pa = vertices_[a];
        const Point pb = vertices_[b];
        e.midpoint = {0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)};
        e.length = distance(pa, pb);
        edges_.push_back(e);
      }
      else {
        Edge& e = edges_[it->second];
        if (e.triangles[1] >= 0)
          throw InvalidInput("mesh: edge shared by more than two triangles");
        e.triangles[1] = static_cast<int>(t);
      }
      triangle_edges_[t][i] = it->second;
    }
  }

  for (auto& e : edges_) {
    if (!e.is_boundary())
      continue;
    const auto [label, side] = boundary_label(e);
    e.label = label;
    e.side = side;
  }
}

//-----------------------------------------------------------------------------
Mesh generate_structured(const Domain& domain, int n)
{
  if (n < 1)
    throw InvalidInput("generate_structured: n must be at least 1");
  domain.validate();

  Mesh mesh;
  mesh.domain_ = domain;

  const auto coordinate = [n](double lo, double hi, int i) {
    return i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
  };
  mesh.vertices_.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      mesh.vertices_.push_back(
          {coordinate(domain.x_min, domain.x_max, i), coordinate(domain.y_min, domain.y_max, j)});

  const auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  mesh.triangles_.reserve(static_cast<std::size_t>(2 * n * n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j), v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
      mesh.triangles_.push_back({v00, v10, v11});
      mesh.triangles_.push_back({v00, v11, v01});
    }

  mesh.build_edges([&domain](const Edge& e) {
    const auto side = domain.side_of(e.midpoint);
    const auto label = side ? domain.label_at(*side, e.midpoint) : std::nullopt;
    if (!label) {
      std::ostringstream msg;
      msg << "generate_structured: boundary edge at (" << e.midpoint.x << ", " << e.midpoint.y
          << ") is not covered by any boundary segment";
      throw InvalidInput(msg.str());
    }
    return std::pair{*label, side};
  });
  return mesh;
}

Mesh refine_uniform(const Mesh& coarse)
{
  Mesh fine;
  fine.domain_ = coarse.domain_;
  fine.level_ = coarse.level_ + 1;

  const int nv = static_cast<int>(coarse.vertices_.size());
  fine.vertices_ = coarse.vertices_;
  fine.vertices_.reserve(coarse.vertices_.size() + coarse.edges_.size());
  for (const auto& e : coarse.edges_) {
    const Point a = coarse.vertices_[e.vertices[0]];
    const Point b = coarse.vertices_[e.vertices[1]];
    fine.vertices_.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
  }

  fine.triangles_.reserve(4 * coarse.triangles_.size());
  fine.parents_.reserve(4 * coarse.triangles_.size());
  for (std::size_t t = 0; t < coarse.triangles_.size(); ++t) {
    const auto [a, b, c] = coarse.triangles_[t];
    const auto& te = coarse.triangle_edges_[t];
    const int m_bc = nv + te[0];
    const int m_ca = nv + te[1];
    const int m_ab = nv + te[2];
    fine.triangles_.push_back({a, m_ab, m_ca});
    fine.triangles_.push_back({m_ab, b, m_bc});
    fine.triangles_.push_back({m_ca, m_bc, c});
    fine.triangles_.push_back({m_bc, m_ca, m_ab});
    for (int k = 0; k < 4; ++k)
      fine.parents_.push_back(static_cast<int>(t));
  }

  std::map<std::pair<int, int>, const Edge*> halves;
  for (std::size_t e = 0; e < coarse.edges_.size(); ++e) {
    const Edge& edge = coarse.edges_[e];
    if (!edge.is_boundary())
      continue;
    const int m = nv + static_cast<int>(e);
    halves[edge_key(edge.vertices[0], m)] = &edge;
    halves[edge_key(m, edge.vertices[1])] = &edge;
  }

  fine.build_edges([&halves](const Edge& e) {
    const auto it = halves.find(edge_key(e.vertices[0], e.vertices[1]));
    if (it == halves.end())
      throw InvalidInput("refine_uniform: boundary edge without a coarse parent edge");
    return std::pair{it->second->label, it->second->side};
  });
  return fine;
}

EdgeSets edge_sets(const Mesh& mesh)
{
  EdgeSets sets;
  const auto& edges = mesh.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int e = static_cast<int>(i);
    switch (edges[i].label) {
    case BoundaryLabel::Interior:
      sets.interior.push_back(e);
      sets.stabilized.push_back(e);
      break;
    case BoundaryLabel::Dirichlet:
      sets.dirichlet.push_back(e);
      sets.stabilized.push_back(e);
      break;
    case BoundaryLabel::Neumann: sets.neumann.push_back(e); break;
    case BoundaryLabel::Contact: sets.contact.push_back(e); break;
    }
  }
  return sets;
}

} // namespace crtresca
