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

#include "deflate/realize.hpp"

#include <algorithm>
#include <random>

#include "deflate/error.hpp"
#include "deflate/visibility.hpp"

namespace deflate {

namespace detail {

bool fan_below_pi(const Point& anchor, const Point& apex, const Point& fan_end, bool anchor_is_tail) {
  if (apex == fan_end) return true;
  return anchor_is_tail ? orient(anchor, apex, fan_end) == Turn::Left
                        : orient(anchor, fan_end, apex) == Turn::Left;
}

HelixWedge helix_wedge(const Point& anchor, const Point& far, const Point& apex,
                       const Point& fan_end, bool anchor_is_tail) {
  if (!fan_below_pi(anchor, apex, fan_end, anchor_is_tail)) {
    throw Error(ErrorCode::RadiusSearchFailed, "fan at the anchor spans pi or more");
  }
  // Interior angle at the anchor before the new triangle is glued on.
  const bool reflex = anchor_is_tail ? orient(fan_end, anchor, far) == Turn::Right
                                     : orient(far, anchor, fan_end) == Turn::Right;
  return {anchor - apex, reflex ? fan_end - anchor : anchor - far, anchor_is_tail};
}

bool wedge_contains(const HelixWedge& wedge, const Vector& d) {
  const int side = cross(wedge.low, wedge.high).sign();
  if (side == 0) return false;
  return cross(wedge.low, d).sign() == side && cross(d, wedge.high).sign() == side;
}

Vector wedge_direction(const HelixWedge& wedge, const Scalar& low_weight, const Scalar& high_weight) {
  const Vector exact = (low_weight / l1_norm(wedge.low)) * wedge.low +
                       (high_weight / l1_norm(wedge.high)) * wedge.high;
  Scalar scale(1);
  for (int bits = 0; bits <= 64; ++bits) {
    const Vector snapped{(exact.x * scale).floor() / scale, (exact.y * scale).floor() / scale};
    if (wedge_contains(wedge, snapped)) return snapped;
    scale *= Scalar(2);
  }
  return exact;
}

}  // namespace detail

namespace {

struct RingEntry {
  Point point;
  /// Dual edge across the boundary edge that starts here.
  int dual_edge;
  /// Triangle node on the inner side of that boundary edge.
  int inside;
  /// Vertex of `inside` opposite the boundary edge.
  Point apex;
};

Scalar min_sq_distance_to_far_edges(const std::vector<Point>& ring, std::size_t u) {
  const std::size_t n = ring.size();
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (i == u || j == u) continue;
    const Scalar d = squared_distance(ring[u], {ring[i], ring[j]});
    if (!best || d < *best) best = d;
  }
  return best.value_or(Scalar(1));
}

class Builder {
 public:
  Builder(const DualTree& dual, const RealizeOptions& options)
      : dual_(dual), rng_(options.jitter_seed), jitter_(options.jitter_seed != 0) {}

  std::vector<RingEntry> run(int root) {
    const auto& rot = dual_.rotation(root);
    const Point corners[3] = {{Scalar(0), Scalar(0)}, {Scalar(4), Scalar(0)}, {Scalar(1), Scalar(2)}};
    for (int s = 0; s < 3; ++s) {
      ring_.push_back({corners[s], rot[static_cast<std::size_t>(s)], root, corners[(s + 2) % 3]});
    }
    for (int s = 0; s < 3; ++s) grow(rot[static_cast<std::size_t>(s)], root);
    return ring_;
  }

 private:
  void grow(int edge, int from) {
    const int child = dual_.other_end(edge, from);
    if (!dual_.is_triangle(child)) return;
    attach(edge, from, child);
    const auto& rot = dual_.rotation(child);
    const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), edge) - rot.begin());
    grow(rot[(pos + 1) % 3], child);
    grow(rot[(pos + 2) % 3], child);
  }

  void attach(int edge, int parent, int child) {
    const std::size_t n = ring_.size();
    const auto it = std::find_if(ring_.begin(), ring_.end(), [&](const RingEntry& e) { return e.dual_edge == edge; });
    const std::size_t i = static_cast<std::size_t>(it - ring_.begin());
    const std::size_t j = (i + 1) % n;
    const Point p = ring_[i].point;
    const Point q = ring_[j].point;
    const Point apex = ring_[i].apex;
    // The reflex endpoint of the shared edge lies on the right when crossing
    // from the source of the directed edge to its target; with the parent
    // inside the boundary edge p -> q, that is p for parent -> child.
    const bool anchor_is_tail = dual_.points(parent, child);
    const Point& anchor = anchor_is_tail ? p : q;
    const Point& far = anchor_is_tail ? q : p;
    const Point& fan_end = anchor_is_tail ? ring_[(i + n - 1) % n].point : ring_[(j + 1) % n].point;
    const auto wedge = detail::helix_wedge(anchor, far, apex, fan_end, anchor_is_tail);

    Scalar low_w(1), high_w(1);
    int extra_halvings = 0;
    if (jitter_) {
      std::uniform_int_distribution<int> w(1, 7);
      low_w = Scalar(w(rng_));
      high_w = Scalar(w(rng_));
      extra_halvings = std::uniform_int_distribution<int>(0, 3)(rng_);
    }
    const Vector dir = detail::wedge_direction(wedge, low_w, high_w);

    std::vector<Point> pts;
    for (const auto& e : ring_) pts.push_back(e.point);
    const std::size_t anchor_index = anchor_is_tail ? i : j;
    const Scalar limit = min_sq_distance_to_far_edges(pts, anchor_index) / Scalar(4);
    const Scalar len2 = dot(dir, dir);
    Scalar r(1);
    while (r * r * len2 > limit) r /= Scalar(2);
    while (r * r * len2 * Scalar(4) <= limit) r *= Scalar(2);
    for (int k = 0; k < extra_halvings; ++k) r /= Scalar(2);

    const auto& rot = dual_.rotation(child);
    const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), edge) - rot.begin());
    for (int attempt = 0; attempt < 64; ++attempt, r /= Scalar(2)) {
      const Point v = anchor + r * dir;
      std::vector<RingEntry> next = ring_;
      next[i] = {p, rot[(pos + 1) % 3], child, q};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, RingEntry{v, rot[(pos + 2) % 3], child, p});
      std::vector<Point> ring;
      for (const auto& e : next) ring.push_back(e.point);
      if (find_self_intersection(ring) || signed_area2(ring).sign() <= 0) continue;
      if (!is_deflated(Polygon::from_ccw_ring(ring)).deflated) continue;
      ring_ = std::move(next);
      return;
    }
    throw Error(ErrorCode::RadiusSearchFailed, "no ear radius keeps the polygon deflated", {child});
  }

  const DualTree& dual_;
  std::vector<RingEntry> ring_;
  std::mt19937_64 rng_;
  bool jitter_;
};

}  // namespace

Polygon realize(const DualTree& dual, const RealizeOptions& options) {
  if (auto path = find_illegal_path(dual)) {
    throw Error(ErrorCode::IllegalPath, "dual has an illegal path", *path);
  }
  int root = -1;
  if (options.root) {
    root = *options.root;
    if (root < 0 || root >= dual.node_count() || !dual.is_triangle(root)) {
      throw Error(ErrorCode::InvalidArgument, "root must be a triangle node", {root});
    }
  } else {
    for (int x = 0; x < dual.node_count() && root < 0; ++x) {
      if (dual.is_triangle(x)) root = x;
    }
  }
  auto ring = Builder(dual, options).run(root);

  // Start the ring at the edge of the first terminal in outer-walk order.
  const int first = dual.terminal_order().front();
  const auto start = std::find_if(ring.begin(), ring.end(), [&](const RingEntry& e) {
    return dual.other_end(e.dual_edge, e.inside) == first;
  });
  std::rotate(ring.begin(), start, ring.end());
  std::vector<Point> pts;
  for (const auto& e : ring) pts.push_back(e.point);
  return Polygon::from_ccw_ring(std::move(pts));
}

}  // namespace deflate
