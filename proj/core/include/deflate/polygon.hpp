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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deflate/geometry.hpp"

namespace deflate {

/// Twice the signed area of a closed ring (positive for counter-clockwise).
Scalar signed_area2(std::span<const Point> ring);

/// First pair of edges (i < j) violating simplicity, or nullopt for a simple
/// ring. Edge i joins ring[i] and ring[i + 1 mod n].
std::optional<std::pair<int, int>> find_self_intersection(std::span<const Point> ring);

/// A simple polygon stored counter-clockwise. Vertex i is `vertex(i)`; edge i
/// joins vertex i and vertex i + 1 (mod n).
class Polygon {
 public:
  /// Validates the ring and reverses it if it is listed clockwise. Throws
  /// TooFewVertices, DuplicateVertex or NotSimple (detail = edge pair).
  explicit Polygon(std::vector<Point> ring);

  /// Like the constructor but refuses to reorder: a clockwise ring throws
  /// InvalidArgument. Used where vertex indices must be kept.
  static Polygon from_ccw_ring(std::vector<Point> ring);

  int size() const { return static_cast<int>(vertices_.size()); }
  const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  Segment edge(int i) const { return {vertex(i), vertex(next(i))}; }
  int next(int i) const { return i + 1 == size() ? 0 : i + 1; }
  int prev(int i) const { return i == 0 ? size() - 1 : i - 1; }
  bool adjacent(int u, int v) const { return next(u) == v || next(v) == u; }
  /// True iff vertex u is an endpoint of edge e.
  bool incident(int u, int e) const { return u == e || u == next(e); }

  Scalar area2() const { return signed_area2(vertices_); }

  /// Rotated so that the lexicographically least vertex comes first.
  Polygon canonical() const;
  bool same_shape(const Polygon& other) const { return canonical() == other.canonical(); }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  struct Trusted {};
  Polygon(Trusted, std::vector<Point> ring) : vertices_(std::move(ring)) {}

  std::vector<Point> vertices_;
};

enum class Location { Inside, Boundary, Outside };

Location locate(const Polygon& poly, const Point& p);

/// First i with vertices i-1, i, i+1 collinear.
std::optional<int> find_collinear_triple(const Polygon& poly);
/// Throws CollinearTriple when find_collinear_triple finds one.
void require_no_collinear_triple(const Polygon& poly);

/// Vertices where the boundary makes a right turn.
std::vector<int> reflex_vertices(const Polygon& poly);

struct GrazingWitness {
  int u;
  int v;
  /// Boundary point met by the open segment uv.
  Point hit;
};

struct GeneralPositionReport {
  bool general_position = true;
  std::optional<GrazingWitness> witness;
};

/// Checks that the open segment joining every visible pair of non-adjacent
/// vertices avoids the boundary.
GeneralPositionReport is_general_position(const Polygon& poly);

/// Polygon JSON: {"vertices": [["x","y"], ...]} with rational text values.
Polygon parse_polygon(std::string_view document);
std::string serialize_polygon(const Polygon& poly);

}  // namespace deflate
