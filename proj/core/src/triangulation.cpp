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

#include "deflate/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deflate/error.hpp"
#include "deflate/visibility.hpp"
#include "json_util.hpp"

namespace deflate {

Triangulation Triangulation::from_diagonals(int n, std::vector<EdgeKey> diagonals) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "triangulation needs at least 3 vertices");
  for (auto& d : diagonals) {
    d = edge_key(d.first, d.second);
    const bool adjacent = d.second == d.first + 1 || (d.first == 0 && d.second == n - 1);
    if (d.first < 0 || d.second >= n || d.first == d.second || adjacent) {
      throw Error(ErrorCode::InvalidArgument, "bad diagonal", {d.first, d.second});
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw Error(ErrorCode::InvalidArgument, "a triangulation of an n-gon has n-3 diagonals");
  }
  // Two chords (a,b), (c,d) of a convex position cycle cross iff they interleave.
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      const auto [a, b] = diagonals[i];
      const auto [c, d] = diagonals[j];
      const bool c_in = a < c && c < b;
      const bool d_in = a < d && d < b;
      if (c != a && c != b && d != a && d != b && c_in != d_in) {
        throw Error(ErrorCode::InvalidArgument, "diagonals cross", {a, b, c, d});
      }
    }
  }

  Triangulation tri;
  tri.vertex_count = n;
  tri.diagonals = std::move(diagonals);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  };
  for (int i = 0; i < n; ++i) link(i, (i + 1) % n);
  for (const auto& [a, b] : tri.diagonals) link(a, b);
  auto linked = [&](int a, int b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  // In a maximal outerplanar graph every 3-cycle bounds a face.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!linked(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (linked(i, k) && linked(j, k)) tri.triangles.push_back({i, j, k});
      }
    }
  }
  if (static_cast<int>(tri.triangles.size()) != n - 2) {
    throw Error(ErrorCode::InvalidArgument, "diagonals do not form a triangulation");
  }
  return tri;
}

bool Triangulation::is_polygon_edge(int a, int b) const {
  const auto [lo, hi] = edge_key(a, b);
  return hi == lo + 1 || (lo == 0 && hi == vertex_count - 1);
}

bool Triangulation::is_diagonal(int a, int b) const {
  return std::binary_search(diagonals.begin(), diagonals.end(), edge_key(a, b));
}

std::vector<int> Triangulation::triangles_at(int vertex) const {
  std::vector<int> out;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& tr = triangles[t];
    if (tr[0] == vertex || tr[1] == vertex || tr[2] == vertex) out.push_back(static_cast<int>(t));
  }
  return out;
}

namespace {

using DiagonalSet = std::vector<EdgeKey>;

class Enumerator {
 public:
  explicit Enumerator(const Polygon& poly) : n_(poly.size()) {
    const auto un = static_cast<std::size_t>(n_);
    chord_.assign(un, std::vector<bool>(un, false));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) chord_[at(i)][at(j)] = chord_[at(j)][at(i)] = usable(poly, i, j);
    }
  }

  std::vector<DiagonalSet> run() { return solve(0, n_ - 1); }

 private:
  static std::size_t at(int i) { return static_cast<std::size_t>(i); }

  static bool usable(const Polygon& poly, int i, int j) {
    if (poly.adjacent(i, j)) return true;
    const Segment s{poly.vertex(i), poly.vertex(j)};
    for (int w = 0; w < poly.size(); ++w) {
      if (w != i && w != j && on_segment(poly.vertex(w), s)) return false;
    }
    return segment_in_closed_polygon(poly, s.a, s.b);
  }

  // Triangulations of the sub-polygon i, i+1, ..., j closed by chord (i, j).
  const std::vector<DiagonalSet>& solve(int i, int j) {
    const auto key = std::pair{i, j};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<DiagonalSet> out;
    if (j == i + 1) {
      out.emplace_back();
    } else {
      for (int k = i + 1; k < j; ++k) {
        if (!chord_[at(i)][at(k)] || !chord_[at(k)][at(j)]) continue;
        const auto left = solve(i, k);
        const auto right = solve(k, j);
        for (const auto& l : left) {
          for (const auto& r : right) {
            DiagonalSet d = l;
            d.insert(d.end(), r.begin(), r.end());
            if (k > i + 1) d.emplace_back(i, k);
            if (j > k + 1) d.emplace_back(k, j);
            out.push_back(std::move(d));
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  int n_;
  std::vector<std::vector<bool>> chord_;
  std::map<std::pair<int, int>, std::vector<DiagonalSet>> memo_;
};

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const Polygon& poly) {
  require_no_collinear_triple(poly);
  auto sets = Enumerator(poly).run();
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Triangulation> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Triangulation::from_diagonals(poly.size(), std::move(s)));
  return out;
}

std::vector<Ear> find_ears(const Triangulation& tri) {
  if (tri.triangles.size() < 2) {
    throw Error(ErrorCode::SingleTriangle, "a lone triangle has no distinguished helix");
  }
  std::vector<Ear> ears;
  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto& tr = tri.triangles[t];
    int diagonals = 0;
    Ear ear{static_cast<int>(t), -1, {}};
    for (int s = 0; s < 3; ++s) {
      const int a = tr[static_cast<std::size_t>(s)];
      const int b = tr[static_cast<std::size_t>((s + 1) % 3)];
      if (tri.is_diagonal(a, b)) {
        ++diagonals;
        ear.diagonal = edge_key(a, b);
        ear.helix = tr[static_cast<std::size_t>((s + 2) % 3)];
      }
    }
    if (diagonals == 1) ears.push_back(ear);
  }
  return ears;
}

EarRemoval remove_ear(const Polygon& poly, const Triangulation& tri, const Ear& ear) {
  if (tri.triangles.size() < 2) {
    throw Error(ErrorCode::SingleTriangle, "cannot remove the only triangle");
  }
  const int n = poly.size();
  std::vector<int> original;
  std::vector<int> renumber(static_cast<std::size_t>(n), -1);
  std::vector<Point> ring;
  for (int i = 0; i < n; ++i) {
    if (i == ear.helix) continue;
    renumber[static_cast<std::size_t>(i)] = static_cast<int>(original.size());
    original.push_back(i);
    ring.push_back(poly.vertex(i));
  }
  std::vector<EdgeKey> diagonals;
  for (const auto& d : tri.diagonals) {
    if (d == ear.diagonal) continue;
    diagonals.push_back(edge_key(renumber[static_cast<std::size_t>(d.first)],
                                 renumber[static_cast<std::size_t>(d.second)]));
  }
  return {Polygon::from_ccw_ring(std::move(ring)),
          Triangulation::from_diagonals(n - 1, std::move(diagonals)), std::move(original)};
}

std::string serialize_triangulation(const Triangulation& tri) {
  json_util::json arr = json_util::json::array();
  for (const auto& [a, b] : tri.diagonals) arr.push_back({a, b});
  return json_util::dump({{"diagonals", arr}});
}

Triangulation parse_triangulation(std::string_view document, int vertex_count) {
  const auto doc = json_util::parse(document);
  const auto& arr = json_util::member(doc, "diagonals");
  if (!arr.is_array()) throw Error(ErrorCode::MalformedDocument, "diagonals must be an array");
  std::vector<EdgeKey> diagonals;
  for (const auto& d : arr) {
    if (!d.is_array() || d.size() != 2) {
      throw Error(ErrorCode::MalformedDocument, "diagonal must be a pair");
    }
    diagonals.emplace_back(json_util::int_from(d[0], "vertex"), json_util::int_from(d[1], "vertex"));
  }
  try {
    return Triangulation::from_diagonals(vertex_count, std::move(diagonals));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
}

}  // namespace deflate
