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
#include <utility>
#include <vector>

#include "deflate/polygon.hpp"
#include "deflate/triangulation.hpp"

namespace deflate {

/// True iff the closed segment ab lies in the closed polygon. Works for any
/// two points, not only vertices.
bool segment_in_closed_polygon(const Polygon& poly, const Point& a, const Point& b);

bool vertices_visible(const Polygon& poly, int u, int v);

/// A point in the relative interior of edge e that u sees, or nullopt when
/// u and e are not visible. Seeing only an endpoint of e does not count; an
/// edge incident to u is always visible (the witness is u).
std::optional<Point> vertex_sees_edge(const Polygon& poly, int u, int e);

/// Candidate witness points on edge e for vertex u: the endpoints of e and
/// the points where lines through u and the other vertices meet e, sorted
/// along e. Visibility of e from u can only change at these points.
std::vector<Point> edge_candidates(const Polygon& poly, int u, int e);

class VisibilityGraph {
 public:
  explicit VisibilityGraph(int n);

  int size() const { return n_; }
  bool sees(int u, int v) const { return vv_[idx(u, v)]; }
  bool sees_edge(int u, int e) const { return ve_[idx(u, e)]; }
  void set_vv(int u, int v, bool value);
  void set_ve(int u, int e, bool value) { ve_[idx(u, e)] = value; }

  /// Visible pairs (u < v) in lexicographic order, boundary edges included.
  std::vector<EdgeKey> vv_pairs() const;

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_;
  std::vector<bool> vv_;
  std::vector<bool> ve_;
};

VisibilityGraph visibility_graph(const Polygon& poly);
/// Vertex-vertex part only; cheaper when ve is not needed.
VisibilityGraph vertex_visibility_graph(const Polygon& poly);

struct DeflationReport {
  bool deflated = true;
  /// Two visible pairs whose open segments cross.
  std::optional<std::pair<EdgeKey, EdgeKey>> crossing;
};

DeflationReport is_deflated(const Polygon& poly);
/// Same, reusing a vertex visibility graph of `poly`.
DeflationReport is_deflated(const Polygon& poly, const VisibilityGraph& vv);
/// Number of properly crossing visible pairs.
int count_visibility_crossings(const Polygon& poly);

struct InducedSequence {
  int source;
  EdgeKey entry;
  /// Triangulation edges crossed by the witness segment, nearest to the
  /// source first; starts with `entry` and ends with the terminal edge.
  std::vector<EdgeKey> chain;
  /// Polygon edge index seen through `entry`.
  int terminal;
};

/// Throws NotDeflated if the polygon is not deflated and InvalidArgument if
/// `entry` is not opposite `u` in a triangle of `tri`.
InducedSequence induced_sequence(const Polygon& poly, const Triangulation& tri, int u,
                                 EdgeKey entry);

/// Polygon edges u sees through the open segment `through` (any segment of
/// the plane). Used to check uniqueness on deflated polygons.
std::vector<int> edges_seen_through(const Polygon& poly, int u, const Segment& through);

}  // namespace deflate
