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

#include <cstdint>
#include <optional>

#include "deflate/dual.hpp"
#include "deflate/polygon.hpp"

namespace deflate {

struct RealizeOptions {
  /// Triangle node placed first; defaults to the smallest triangle id.
  std::optional<int> root;
  /// When nonzero, helix directions and ear radii are drawn at random (from
  /// this seed) inside their admissible ranges instead of the central choice.
  std::uint64_t jitter_seed = 0;
};

/// Coordinates of a deflated polygon whose directed dual is `dual`. Vertex k
/// of the result is the start of the edge of the k-th terminal (see
/// DualTree::terminal_order). Throws BadDegrees, UndirectedNonTerminalEdge,
/// IllegalPath (detail = the path) or RadiusSearchFailed.
Polygon realize(const DualTree& dual, const RealizeOptions& options = {});

namespace detail {

/// Where to put the free vertex of a triangle glued onto boundary edge
/// (anchor, far) so that the anchor becomes reflex in the union with the
/// triangle behind the edge. `apex` is the third vertex of that triangle and
/// `fan_end` is the anchor's other boundary neighbour. `anchor_is_tail` tells
/// whether anchor -> far runs counter-clockwise along the boundary.
struct HelixWedge {
  /// Lower bound ray: the union's angle at the anchor is exactly pi.
  Vector low;
  /// Upper bound ray: either the straight continuation of far -> anchor or
  /// the direction of fan_end, whichever comes first.
  Vector high;
  bool anchor_is_tail;
};

/// Throws RadiusSearchFailed when the fan at the anchor already spans pi or
/// more (no admissible direction).
HelixWedge helix_wedge(const Point& anchor, const Point& far, const Point& apex,
                       const Point& fan_end, bool anchor_is_tail);

/// A direction strictly inside the wedge: low/|low|_1 * wl + high/|high|_1 * wh
/// with positive weights, rounded to a dyadic vector that is still inside.
Vector wedge_direction(const HelixWedge& wedge, const Scalar& low_weight = 1,
                       const Scalar& high_weight = 1);

/// True iff direction d lies strictly inside the wedge.
bool wedge_contains(const HelixWedge& wedge, const Vector& d);

/// Fan angle (excluding the glued-to triangle) at the anchor is below pi.
bool fan_below_pi(const Point& anchor, const Point& apex, const Point& fan_end,
                  bool anchor_is_tail);

}  // namespace detail

}  // namespace deflate
