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

#include "deflate/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "deflate/error.hpp"
#include "deflate/visibility.hpp"
#include "json_util.hpp"

namespace deflate {

Scalar signed_area2(std::span<const Point> ring) {
  Scalar sum;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(ring[i], ring[(i + 1) % n]);
  }
  return sum;
}

std::optional<std::pair<int, int>> find_self_intersection(std::span<const Point> ring) {
  const int n = static_cast<int>(ring.size());
  auto at = [&](int i) -> const Point& { return ring[static_cast<std::size_t>(i % n)]; };
  for (int i = 0; i < n; ++i) {
    const Segment si{at(i), at(i + 1)};
    for (int j = i + 1; j < n; ++j) {
      const Segment sj{at(j), at(j + 1)};
      if (j == i + 1 || (i == 0 && j == n - 1)) {
        // Adjacent edges may only meet at their shared vertex.
        const bool forward = j == i + 1;
        const Point& shared = forward ? at(j) : at(i);
        const Point& p = forward ? at(i) : at(i + 1);
        const Point& r = forward ? at(j + 1) : at(j);
        if (orient(p, shared, r) == Turn::Collinear && dot(p - shared, r - shared).sign() > 0) {
          return std::pair{i, j};
        }
        continue;
      }
      if (segments_intersect(si, sj, IntersectMode::Any)) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

namespace {

void validate_ring(const std::vector<Point>& ring) {
  if (ring.size() < 3) {
    throw Error(ErrorCode::TooFewVertices, "a polygon needs at least 3 vertices");
  }
  std::vector<int> order(ring.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ring[static_cast<std::size_t>(a)] < ring[static_cast<std::size_t>(b)];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (ring[static_cast<std::size_t>(order[k - 1])] == ring[static_cast<std::size_t>(order[k])]) {
      const int a = std::min(order[k - 1], order[k]);
      const int b = std::max(order[k - 1], order[k]);
      throw Error(ErrorCode::DuplicateVertex,
                  "vertices " + std::to_string(a) + " and " + std::to_string(b) + " coincide",
                  {a, b});
    }
  }
  if (auto bad = find_self_intersection(ring)) {
    throw Error(ErrorCode::NotSimple,
                "edges " + std::to_string(bad->first) + " and " + std::to_string(bad->second) +
                    " intersect",
                {bad->first, bad->second});
  }
}

}  // namespace

Polygon::Polygon(std::vector<Point> ring) : vertices_(std::move(ring)) {
  validate_ring(vertices_);
  if (signed_area2(vertices_).sign() < 0) {
    std::reverse(vertices_.begin() + 1, vertices_.end());
  }
}

Polygon Polygon::from_ccw_ring(std::vector<Point> ring) {
  validate_ring(ring);
  if (signed_area2(ring).sign() < 0) {
    throw Error(ErrorCode::InvalidArgument, "ring is clockwise");
  }
  return Polygon(Trusted{}, std::move(ring));
}

Polygon Polygon::canonical() const {
  auto least = std::min_element(vertices_.begin(), vertices_.end());
  std::vector<Point> rotated(least, vertices_.end());
  rotated.insert(rotated.end(), vertices_.begin(), least);
  return Polygon(Trusted{}, std::move(rotated));
}

Location locate(const Polygon& poly, const Point& p) {
  int winding = 0;
  for (int i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    if (on_segment(p, e)) return Location::Boundary;
    if (e.a.y <= p.y) {
      if (e.b.y > p.y && orient(e.a, e.b, p) == Turn::Left) ++winding;
    } else if (e.b.y <= p.y && orient(e.a, e.b, p) == Turn::Right) {
      --winding;
    }
  }
  return winding != 0 ? Location::Inside : Location::Outside;
}

std::optional<int> find_collinear_triple(const Polygon& poly) {
  for (int i = 0; i < poly.size(); ++i) {
    if (orient(poly.vertex(poly.prev(i)), poly.vertex(i), poly.vertex(poly.next(i))) ==
        Turn::Collinear) {
      return i;
    }
  }
  return std::nullopt;
}

void require_no_collinear_triple(const Polygon& poly) {
  if (auto i = find_collinear_triple(poly)) {
    throw Error(ErrorCode::CollinearTriple,
                "vertex " + std::to_string(*i) + " is collinear with its neighbours", {*i});
  }
}

std::vector<int> reflex_vertices(const Polygon& poly) {
  require_no_collinear_triple(poly);
  std::vector<int> out;
  for (int i = 0; i < poly.size(); ++i) {
    if (orient(poly.vertex(poly.prev(i)), poly.vertex(i), poly.vertex(poly.next(i))) == Turn::Right) {
      out.push_back(i);
    }
  }
  return out;
}

GeneralPositionReport is_general_position(const Polygon& poly) {
  const int n = poly.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (poly.adjacent(u, v) || !vertices_visible(poly, u, v)) continue;
      const Segment s{poly.vertex(u), poly.vertex(v)};
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (on_segment(poly.vertex(w), s)) {
          return {false, GrazingWitness{u, v, poly.vertex(w)}};
        }
      }
    }
  }
  return {};
}

Polygon parse_polygon(std::string_view document) {
  const auto j = json_util::parse(document);
  return Polygon(json_util::ring_from(json_util::member(j, "vertices")));
}

std::string serialize_polygon(const Polygon& poly) {
  json_util::json j;
  j["vertices"] = json_util::ring_to(poly.vertices());
  return json_util::dump(j);
}

}  // namespace deflate
