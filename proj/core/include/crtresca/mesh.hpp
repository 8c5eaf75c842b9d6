// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The crtresca Authors

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace crtresca {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class BoundaryLabel : std::uint8_t { Interior, Dirichlet, Neumann, Contact };

/// Sides of an axis-aligned rectangle.
enum class Side : std::uint8_t { Bottom, Right, Top, Left };

std::string_view to_string(BoundaryLabel label);
std::string_view to_string(Side side);
std::optional<BoundaryLabel> parse_boundary_label(std::string_view text);
std::optional<Side> parse_side(std::string_view text);

/// A labeled interval on one side of the rectangle. `from`/`to` are the
/// coordinates along the side (x for Bottom/Top, y for Left/Right).
struct BoundarySegment {
  Side side = Side::Bottom;
  double from = 0.0;
  double to = 0.0;
  BoundaryLabel label = BoundaryLabel::Neumann;
};

/// Axis-aligned rectangle with labeled boundary segments.
struct Domain {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  std::vector<BoundarySegment> boundary;

  /// Throws InvalidInput on an empty box, overlapping segments on one side,
  /// segments outside the side, or a Dirichlet part of zero length.
  void validate() const;

  double diameter() const;

  /// Label of the boundary point `p` lying on `side`, if any segment covers it.
  std::optional<BoundaryLabel> label_at(Side side, Point p) const;

  /// Side containing `p` (exact comparison against the box bounds).
  std::optional<Side> side_of(Point p) const;

  /// Convenience: label each whole side.
  static Domain rectangle(double x_min, double x_max, double y_min, double y_max,
                          BoundaryLabel bottom, BoundaryLabel right, BoundaryLabel top,
                          BoundaryLabel left);
};

struct Edge {
  std::array<int, 2> vertices{-1, -1};
  /// Adjacent triangles; `triangles[1] == -1` on the boundary.
  std::array<int, 2> triangles{-1, -1};
  Point midpoint;
  double length = 0.0;
  BoundaryLabel label = BoundaryLabel::Interior;
  std::optional<Side> side;

  bool is_boundary() const { return triangles[1] < 0; }
};

/// Disjoint partition of the edge indices plus the stabilization set
/// (interior edges together with Dirichlet edges).
struct EdgeSets {
  std::vector<int> interior;
  std::vector<int> dirichlet;
  std::vector<int> neumann;
  std::vector<int> contact;
  std::vector<int> stabilized;
};

/// Conforming triangulation of a rectangle. Immutable after construction.
///
/// Local edge `i` of a triangle is the edge opposite its local vertex `i`.
class Mesh {
public:
  const Domain& domain() const { return domain_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::array<int, 3>& triangle_edges(int t) const { return triangle_edges_[t]; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_triangles() const { return triangles_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  /// Number of uniform refinements applied to the structured base mesh.
  int level() const { return level_; }

  /// Coarse triangle each triangle was cut from; empty unless produced by
  /// refine_uniform.
  const std::vector<int>& parent_map() const { return parents_; }
  bool has_parents() const { return !parents_.empty(); }

  std::array<Point, 3> corners(int t) const;
  double signed_area(int t) const;
  double area(int t) const { return signed_area(t); }
  double diameter(int t) const;
  /// max over triangles of the diameter
  double mesh_size() const;

  /// Plain-text dump: `v x y`, `t i j k`, `e i j label`.
  void write(std::ostream& out) const;

private:
  friend Mesh generate_structured(const Domain& domain, int n);
  friend Mesh refine_uniform(const Mesh& mesh);

  Mesh() = default;

  template <typename Labeler>
  void build_edges(Labeler&& boundary_label);

  Domain domain_;
  std::vector<Point> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<Edge> edges_;
  int level_ = 0;
  std::vector<int> parents_;
};

/// n-by-n grid of squares, each split along its lower-left to upper-right
/// diagonal. Throws InvalidInput for n < 1 or an unlabeled boundary edge.
Mesh generate_structured(const Domain& domain, int n);

/// Red refinement: every triangle is cut into four by its edge midpoints.
/// Boundary labels are inherited from the parent edges.
Mesh refine_uniform(const Mesh& mesh);

EdgeSets edge_sets(const Mesh& mesh);

} // namespace crtresca
