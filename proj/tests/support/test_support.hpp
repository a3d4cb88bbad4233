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

// Shared helpers for the test suites: polygon generators, fixture loading and
// brute-force oracles that avoid the library's own visibility code.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deflate/geometry.hpp"
#include "deflate/polygon.hpp"

#ifndef DEFLATE_KIT_FIXTURE_DIR
#define DEFLATE_KIT_FIXTURE_DIR "fixtures"
#endif

namespace deflate::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(DEFLATE_KIT_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture(const std::string& name) { return read_file(fixture_path(name)); }

inline Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

inline Polygon make_polygon(std::initializer_list<std::pair<long, long>> coords) {
  std::vector<Point> ring;
  for (auto [x, y] : coords) ring.push_back(pt(x, y));
  return Polygon(std::move(ring));
}

/// Convex n-gon in strictly convex position (points on a parabola).
inline Polygon convex_polygon(int n) {
  std::vector<Point> ring;
  for (int i = 0; i < n; ++i) ring.push_back(pt(i, static_cast<long>(i) * i));
  return Polygon(std::move(ring));
}

inline bool ring_is_simple(const std::vector<Point>& ring) {
  return !find_self_intersection(ring).has_value();
}

/// Random simple polygon on an integer grid, untangled by 2-opt moves. No
/// three vertices are collinear.
inline Polygon random_polygon(std::mt19937_64& rng, int n, long grid = 40) {
  std::uniform_int_distribution<long> coord(0, grid);
  while (true) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point p = pt(coord(rng), coord(rng));
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        if (pts[i] == p) ok = false;
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
          if (orient(pts[i], pts[j], p) == Turn::Collinear) ok = false;
        }
      }
      if (ok) pts.push_back(p);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    for (int guard = 0; guard < 10000; ++guard) {
      auto hit = find_self_intersection(pts);
      if (!hit) return Polygon(pts);
      auto [i, j] = *hit;
      std::reverse(pts.begin() + i + 1, pts.begin() + j + 1);
    }
  }
}

/// Point-in-closed-polygon by counting crossings of a horizontal ray, kept
/// separate from the library's winding-number routine.
inline bool oracle_in_closed(const Polygon& poly, const Point& p) {
  const int n = poly.size();
  bool inside = false;
  for (int i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex((i + 1) % n);
    if (orient(a, b, p) == Turn::Collinear && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
      return true;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      const Scalar x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

/// Solves p + t (q - p) = a + s (b - a) and reports whether both parameters
/// lie strictly inside (0, 1).
inline bool oracle_crosses(const Point& p, const Point& q, const Point& a, const Point& b) {
  const Point d = q - p;
  const Point e = b - a;
  const Scalar den = d.x * e.y - d.y * e.x;
  if (den.sign() == 0) return false;
  const Point w = a - p;
  const Scalar t = (w.x * e.y - w.y * e.x) / den;
  const Scalar s = (w.x * d.y - w.y * d.x) / den;
  return Scalar(0) < t && t < Scalar(1) && Scalar(0) < s && s < Scalar(1);
}

/// Closed segment pq inside the closed polygon: no transversal crossing with
/// an edge, and every sample point inside.
inline bool oracle_segment_inside(const Polygon& poly, const Point& p, const Point& q, int samples = 96) {
  const int n = poly.size();
  for (int i = 0; i < n; ++i) {
    if (oracle_crosses(p, q, poly.vertex(i), poly.vertex((i + 1) % n))) return false;
  }
  for (int k = 0; k <= samples; ++k) {
    const Scalar t(k, samples);
    if (!oracle_in_closed(poly, p + t * (q - p))) return false;
  }
  return true;
}

inline bool oracle_vv(const Polygon& poly, int u, int v) {
  return oracle_segment_inside(poly, poly.vertex(u), poly.vertex(v));
}

/// u sees some sampled point of edge e.
// Interior points of the edge only; an incident edge is always visible.
inline bool oracle_ve(const Polygon& poly, int u, int e, int samples = 48) {
  if (poly.incident(u, e)) return true;
  const Point& a = poly.vertex(e);
  const Point& b = poly.vertex((e + 1) % poly.size());
  for (int k = 1; k < samples; ++k) {
    const Scalar t(k, samples);
    if (oracle_segment_inside(poly, poly.vertex(u), a + t * (b - a), 64)) return true;
  }
  return false;
}

}  // namespace deflate::testing
