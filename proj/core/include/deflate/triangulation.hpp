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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deflate/polygon.hpp"

namespace deflate {

/// Unordered vertex pair, stored with first < second.
using EdgeKey = std::pair<int, int>;

inline EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

/// A triangulation of an n-gon, purely combinatorial: it refers to vertices
/// by index. Triangles are counter-clockwise triples (i < j < k) because the
/// owning polygon is counter-clockwise.
struct Triangulation {
  int vertex_count = 0;
  std::vector<EdgeKey> diagonals;
  std::vector<std::array<int, 3>> triangles;

  /// Builds the triangle list from n-3 pairwise non-crossing diagonals.
  static Triangulation from_diagonals(int n, std::vector<EdgeKey> diagonals);

  bool is_polygon_edge(int a, int b) const;
  bool is_diagonal(int a, int b) const;
  bool has_edge(int a, int b) const { return is_polygon_edge(a, b) || is_diagonal(a, b); }

  /// Triangles containing the vertex, in index order.
  std::vector<int> triangles_at(int vertex) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Every triangulation of the polygon, ordered lexicographically by diagonal
/// set. Throws CollinearTriple on degenerate input.
std::vector<Triangulation> enumerate_triangulations(const Polygon& poly);

struct Ear {
  int triangle;
  int helix;
  EdgeKey diagonal;

  friend bool operator==(const Ear&, const Ear&) = default;
};

/// All ears in triangle order. A lone triangle throws SingleTriangle.
std::vector<Ear> find_ears(const Triangulation& tri);

struct EarRemoval {
  Polygon polygon;
  Triangulation triangulation;
  /// original_index[i] is the vertex of the input polygon that became vertex i.
  std::vector<int> original_index;
};

EarRemoval remove_ear(const Polygon& poly, const Triangulation& tri, const Ear& ear);

/// {"diagonals": [[i, j], ...]}
std::string serialize_triangulation(const Triangulation& tri);
Triangulation parse_triangulation(std::string_view document, int vertex_count);

}  // namespace deflate
