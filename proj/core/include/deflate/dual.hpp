// Copyright 2026 The deflate-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deflate/polygon.hpp"
#include "deflate/triangulation.hpp"

namespace deflate {

enum class NodeKind { Triangle, Terminal };

/// Direction of a dual edge relative to its stored endpoints (a, b).
enum class Direction { None, AtoB, BtoA };

struct DualNode {
  NodeKind kind = NodeKind::Triangle;
  /// Free-form name, used by fixtures ("a", "t3", ...). May be empty.
  std::string label;

  friend bool operator==(const DualNode&, const DualNode&) = default;
};

struct DualEdge {
  int a = 0;
  int b = 0;
  Direction dir = Direction::None;

  friend bool operator==(const DualEdge&, const DualEdge&) = default;
};

/// Correspondence between a dual and the triangulation it was built from.
struct DualBinding {
  int vertex_count = 0;
  /// Per node: the triangle for triangle nodes.
  std::vector<std::array<int, 3>> triangle;
  /// Per node: the polygon edge for terminal nodes, -1 for triangle nodes.
  std::vector<int> polygon_edge;

  friend bool operator==(const DualBinding&, const DualBinding&) = default;
};

/// Plane tree with triangle nodes (degree 3) and terminal nodes (degree 1).
/// `rotation(x)` lists the edges at x counter-clockwise.
///
/// Terminals are numbered by walking the outer face counter-clockwise from
/// the terminal with the smallest id: the k-th terminal met stands for polygon
/// edge k. build_dual produces ids that already follow this numbering.
class DualTree {
 public:
  DualTree() = default;
  /// Throws BadDegrees when the structure is not a plane tree with the
  /// required degrees, or when a terminal edge carries a direction.
  DualTree(std::vector<DualNode> nodes, std::vector<DualEdge> edges,
           std::vector<std::vector<int>> rotation);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const DualNode& node(int x) const { return nodes_[static_cast<std::size_t>(x)]; }
  const DualEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<DualNode>& nodes() const { return nodes_; }
  const std::vector<DualEdge>& edges() const { return edges_; }
  const std::vector<int>& rotation(int x) const { return rotation_[static_cast<std::size_t>(x)]; }

  bool is_triangle(int x) const { return node(x).kind == NodeKind::Triangle; }
  bool is_terminal(int x) const { return node(x).kind == NodeKind::Terminal; }
  bool is_terminal_edge(int e) const { return is_terminal(edge(e).a) || is_terminal(edge(e).b); }
  int other_end(int e, int x) const { return edge(e).a == x ? edge(e).b : edge(e).a; }
  /// Neighbours of x in counter-clockwise order.
  std::vector<int> neighbors(int x) const;
  std::optional<int> edge_between(int x, int y) const;

  /// True iff the edge joining x and y is directed x -> y.
  bool points(int x, int y) const;
  void set_direction(int e, Direction dir);
  /// Directs the edge joining x and y as x -> y.
  void direct(int x, int y);

  /// Non-terminal edges without a direction, in id order.
  std::vector<int> undirected_inner_edges() const;
  int triangle_count() const;

  /// Terminal nodes in outer-walk order; entry k stands for polygon edge k.
  std::vector<int> terminal_order() const;
  /// Inverse of terminal_order for terminals, -1 for triangle nodes.
  std::vector<int> terminal_index() const;

  const std::optional<DualBinding>& binding() const { return binding_; }
  void set_binding(DualBinding binding) { binding_ = std::move(binding); }

  /// Structure and directions only; labels and binding are ignored.
  bool same_structure(const DualTree& other) const;

 private:
  std::vector<DualNode> nodes_;
  std::vector<DualEdge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::optional<DualBinding> binding_;
};

/// Undirected dual of a triangulation, bound to it. Triangle t becomes node t;
/// polygon edge k becomes node (triangle count + k).
DualTree build_dual(const Triangulation& tri);

/// build_dual plus the right-reflex directions. Throws DegenerateQuadrilateral
/// when a vertex of an adjacent-triangle union is straight.
DualTree direct_dual(const Polygon& poly, const Triangulation& tri);

/// Directed dual of the unique triangulation of a deflated polygon. Throws
/// NotDeflated.
DualTree deflated_dual(const Polygon& poly);

/// The visibility path starting with (a, b). Throws UndirectedEdgeOnPath.
std::vector<int> trace_visibility_path(const DualTree& dual, int a, int b);

/// One path per terminal; path k runs from the terminal of edge k-1 to the
/// terminal of edge k, i.e. it is the fan about polygon vertex k.
std::vector<std::vector<int>> maximal_outer_paths(const DualTree& dual);

/// First outer path with >= 4 nodes whose first and last edges are both
/// directed forward. Throws UndirectedNonTerminalEdge.
std::optional<std::vector<int>> find_illegal_path(const DualTree& dual);

/// Vertex-edge visibility as determined by a fully directed dual.
bool dual_vertex_edge_visible(const DualTree& dual, int u, int g);
/// Vertex-vertex visibility: the fans of u and v share a node.
bool dual_vertex_vertex_visible(const DualTree& dual, int u, int v);

/// Offset k such that terminal i of `a` corresponds to terminal (i + k) mod n
/// of `b` under a plane isomorphism preserving directions, or nullopt.
std::optional<int> plane_isomorphism(const DualTree& a, const DualTree& b);
inline bool plane_isomorphic(const DualTree& a, const DualTree& b) {
  return plane_isomorphism(a, b).has_value();
}

/// Dual JSON (nodes / edges / rotation). Optional "label" per node.
DualTree parse_dual(std::string_view document);
std::string serialize_dual(const DualTree& dual);

}  // namespace deflate
