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

#include "deflate/visibility.hpp"

#include <algorithm>

#include "deflate/error.hpp"

namespace deflate {
namespace {

// Parameter of p along a -> b; p is assumed to lie on that line.
Scalar param_along(const Point& a, const Point& b, const Point& p) {
  const Vector d = b - a;
  return dot(p - a, d) / dot(d, d);
}

bool strictly_inside_segment(const Point& p, const Segment& s) {
  return p != s.a && p != s.b && on_segment(p, s);
}

// The open segments share a point.
bool open_segments_meet(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t, IntersectMode::Proper)) return true;
  if (strictly_inside_segment(s.a, t) || strictly_inside_segment(s.b, t) ||
      strictly_inside_segment(t.a, s) || strictly_inside_segment(t.b, s)) {
    return true;
  }
  // Identical segments.
  return (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
}

// The segment s meets the open segment t; touching only an endpoint of t
// does not count.
bool passes_through(const Segment& s, const Segment& t) {
  if (segments_intersect(s, t, IntersectMode::Proper)) return true;
  if (strictly_inside_segment(s.a, t) || strictly_inside_segment(s.b, t)) return true;
  const bool collinear = orient(t.a, t.b, s.a) == Turn::Collinear &&
                         orient(t.a, t.b, s.b) == Turn::Collinear;
  if (collinear && (strictly_inside_segment(t.a, s) || strictly_inside_segment(t.b, s))) {
    return true;
  }
  return (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
}

// Points interior to a run of consecutive candidates: midpoints between
// neighbours, which avoid every line through u and another vertex.
std::vector<Point> candidate_midpoints(const std::vector<Point>& cands) {
  std::vector<Point> mids;
  for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
    mids.push_back(lerp(cands[i], cands[i + 1], Scalar(1, 2)));
  }
  return mids;
}

}  // namespace

bool segment_in_closed_polygon(const Polygon& poly, const Point& a, const Point& b) {
  if (a == b) return locate(poly, a) != Location::Outside;
  const Segment s{a, b};
  std::vector<Scalar> ts{Scalar(0), Scalar(1)};
  for (int i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    if (segments_intersect(s, e, IntersectMode::Proper)) return false;
    if (on_segment(e.a, s)) ts.push_back(param_along(a, b, e.a));
    if (on_segment(e.b, s)) ts.push_back(param_along(a, b, e.b));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  // Between consecutive contacts the open piece misses the boundary, so one
  // interior sample decides the whole piece.
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    const Point mid = lerp(a, b, (ts[k] + ts[k + 1]) / Scalar(2));
    if (locate(poly, mid) == Location::Outside) return false;
  }
  return true;
}

bool vertices_visible(const Polygon& poly, int u, int v) {
  if (u == v || poly.adjacent(u, v)) return true;
  return segment_in_closed_polygon(poly, poly.vertex(u), poly.vertex(v));
}

std::vector<Point> edge_candidates(const Polygon& poly, int u, int e) {
  const Segment edge = poly.edge(e);
  const Point& origin = poly.vertex(u);
  std::vector<std::pair<Scalar, Point>> found{{Scalar(0), edge.a}, {Scalar(1), edge.b}};
  for (int w = 0; w < poly.size(); ++w) {
    if (w == u) continue;
    auto params = line_intersection_params(Segment{origin, poly.vertex(w)}, edge);
    if (!params) continue;
    const Scalar& s = params->second;
    if (s.sign() < 0 || s > Scalar(1)) continue;
    found.emplace_back(s, lerp(edge.a, edge.b, s));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Point> out;
  for (auto& [s, p] : found) {
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Point> vertex_sees_edge(const Polygon& poly, int u, int e) {
  if (poly.incident(u, e)) return poly.vertex(u);
  const Point& origin = poly.vertex(u);
  // The visible part of e is a union of closed intervals with ends at
  // candidate points, so interior candidates and midpoints between
  // neighbours find any interior point u sees.
  const auto cands = edge_candidates(poly, u, e);
  std::vector<Point> probes = candidate_midpoints(cands);
  probes.insert(probes.end(), cands.begin() + 1, cands.end() - 1);
  for (const Point& p : probes) {
    if (segment_in_closed_polygon(poly, origin, p)) return p;
  }
  return std::nullopt;
}

VisibilityGraph::VisibilityGraph(int n)
    : n_(n),
      vv_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false),
      ve_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false) {}

void VisibilityGraph::set_vv(int u, int v, bool value) {
  vv_[idx(u, v)] = value;
  vv_[idx(v, u)] = value;
}

std::vector<EdgeKey> VisibilityGraph::vv_pairs() const {
  std::vector<EdgeKey> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (sees(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VisibilityGraph vertex_visibility_graph(const Polygon& poly) {
  const int n = poly.size();
  VisibilityGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_vv(u, v, vertices_visible(poly, u, v));
  }
  return g;
}

VisibilityGraph visibility_graph(const Polygon& poly) {
  VisibilityGraph g = vertex_visibility_graph(poly);
  const int n = poly.size();
  for (int u = 0; u < n; ++u) {
    for (int e = 0; e < n; ++e) g.set_ve(u, e, vertex_sees_edge(poly, u, e).has_value());
  }
  return g;
}

DeflationReport is_deflated(const Polygon& poly) {
  return is_deflated(poly, vertex_visibility_graph(poly));
}

DeflationReport is_deflated(const Polygon& poly, const VisibilityGraph& g) {
  std::vector<EdgeKey> inner;
  for (const auto& [u, v] : g.vv_pairs()) {
    if (!poly.adjacent(u, v)) inner.emplace_back(u, v);
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const Segment si{poly.vertex(inner[i].first), poly.vertex(inner[i].second)};
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const Segment sj{poly.vertex(inner[j].first), poly.vertex(inner[j].second)};
      if (open_segments_meet(si, sj)) return {false, std::pair{inner[i], inner[j]}};
    }
  }
  return {};
}

int count_visibility_crossings(const Polygon& poly) {
  const VisibilityGraph g = vertex_visibility_graph(poly);
  const auto pairs = g.vv_pairs();
  int count = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Segment si{poly.vertex(pairs[i].first), poly.vertex(pairs[i].second)};
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Segment sj{poly.vertex(pairs[j].first), poly.vertex(pairs[j].second)};
      if (segments_intersect(si, sj, IntersectMode::Proper)) ++count;
    }
  }
  return count;
}

namespace {

// A witness point on edge g that u sees through the open segment `through`.
std::optional<Point> witness_through(const Polygon& poly, int u, int g, const Segment& through) {
  const Point& origin = poly.vertex(u);
  const auto cands = edge_candidates(poly, u, g);
  std::vector<Point> probes = candidate_midpoints(cands);
  probes.insert(probes.end(), cands.begin(), cands.end());
  for (const Point& p : probes) {
    if (p == origin) continue;
    if (!passes_through(Segment{origin, p}, through)) continue;
    if (segment_in_closed_polygon(poly, origin, p)) return p;
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> edges_seen_through(const Polygon& poly, int u, const Segment& through) {
  std::vector<int> out;
  for (int g = 0; g < poly.size(); ++g) {
    if (poly.incident(u, g)) continue;
    if (witness_through(poly, u, g, through)) out.push_back(g);
  }
  return out;
}

InducedSequence induced_sequence(const Polygon& poly, const Triangulation& tri, int u,
                                 EdgeKey entry) {
  entry = edge_key(entry.first, entry.second);
  const bool opposite = std::any_of(tri.triangles.begin(), tri.triangles.end(), [&](const auto& t) {
    auto has = [&](int x) { return t[0] == x || t[1] == x || t[2] == x; };
    return has(u) && has(entry.first) && has(entry.second) && u != entry.first && u != entry.second;
  });
  if (!opposite) {
    throw Error(ErrorCode::InvalidArgument, "entry edge is not opposite the source vertex");
  }
  if (auto rep = is_deflated(poly); !rep.deflated) {
    throw Error(ErrorCode::NotDeflated, "induced sequences need a deflated polygon");
  }

  InducedSequence seq{u, entry, {}, -1};
  const int n = poly.size();
  if (tri.is_polygon_edge(entry.first, entry.second)) {
    seq.chain.push_back(entry);
    seq.terminal = (entry.second == entry.first + 1) ? entry.first : entry.second;
    return seq;
  }

  const Segment through{poly.vertex(entry.first), poly.vertex(entry.second)};
  std::optional<Point> target;
  for (int g = 0; g < n; ++g) {
    if (poly.incident(u, g)) continue;
    if (auto p = witness_through(poly, u, g, through)) {
      if (seq.terminal >= 0) {
        throw Error(ErrorCode::NotDeflated, "vertex sees more than one edge through the entry");
      }
      seq.terminal = g;
      target = *p;
    }
  }
  if (!target) throw Error(ErrorCode::NotDeflated, "vertex sees no edge through the entry");

  const Point& origin = poly.vertex(u);
  const Segment ray{origin, *target};
  std::vector<std::pair<Scalar, EdgeKey>> hits;
  for (const auto& d : tri.diagonals) {
    const Segment ds{poly.vertex(d.first), poly.vertex(d.second)};
    if (!segments_intersect(ray, ds, IntersectMode::Proper)) continue;
    hits.emplace_back(line_intersection_params(ray, ds)->first, d);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& [t, d] : hits) seq.chain.push_back(d);
  seq.chain.push_back(edge_key(seq.terminal, poly.next(seq.terminal)));
  return seq;
}

}  // namespace deflate
