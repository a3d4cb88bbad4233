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


// Randomized search for polygons with prescribed deflatability structure.
// Used to reconstruct the bundled figure fixtures; prints polygon JSON.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "deflate/deflatability.hpp"
#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/visibility.hpp"

namespace {

using namespace deflate;

std::optional<std::string> read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Polygon random_polygon(std::mt19937_64& rng, int n, long grid) {
  std::uniform_int_distribution<long> coord(0, grid);
  while (true) {
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Point p{Scalar(coord(rng)), Scalar(coord(rng))};
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
      const auto hit = find_self_intersection(pts);
      if (!hit) return Polygon(pts);
      std::reverse(pts.begin() + hit->first + 1, pts.begin() + hit->second + 1);
    }
  }
}

// Every triangulation leaves exactly `open` inner dual edges undirected and
// exactly one completion per triangulation avoids illegal paths.
bool single_candidate_shape(const Certificate& cert, int open) {
  for (std::size_t t = 0; t < cert.triangulations.size(); ++t) {
    int legal = 0;
    int total = 0;
    for (const auto& v : cert.verdicts) {
      if (v.triangulation != static_cast<int>(t)) continue;
      ++total;
      if (v.kind != CandidateVerdict::Kind::IllegalPath) ++legal;
      if (static_cast<int>(v.completion.size()) != open) return false;
    }
    if (total != (1 << open) || legal != 1) return false;
  }
  return true;
}

int vv_distance(const std::vector<EdgeKey>& a, const std::vector<EdgeKey>& b, int n);

int search_nondeflatable(int n, long grid, std::uint64_t seed, int iterations, int triangulations,
                         int open, int min_reflex, const std::vector<Polygon>& avoid) {
  std::mt19937_64 rng(seed);
  for (int it = 0; it < iterations; ++it) {
    const Polygon p = random_polygon(rng, n, grid);
    if (static_cast<int>(reflex_vertices(p).size()) < min_reflex) continue;
    if (!is_general_position(p).general_position || is_deflated(p).deflated) continue;
    if (triangulations > 0 && static_cast<int>(enumerate_triangulations(p).size()) != triangulations) continue;
    const Certificate cert = certify(p);
    if (cert.kind != CertificateKind::NonDeflatable) continue;
    const auto vv = vertex_visibility_graph(p).vv_pairs();
    if (std::any_of(avoid.begin(), avoid.end(), [&](const Polygon& q) {
          return q.size() == n && vv_distance(vv, vertex_visibility_graph(q).vv_pairs(), n) == 0;
        })) {
      continue;
    }
    if (open >= 0 && !single_candidate_shape(cert, open)) continue;
    std::cerr << "iteration " << it << ": " << cert.triangulations.size() << " triangulations, "
              << cert.verdicts.size() << " candidates\n";
    std::cout << serialize_polygon(p);
    return 0;
  }
  std::cerr << "nothing found\n";
  return 1;
}

// Distance between vertex visibility graphs, minimized over the boundary
// order bijections (rotations and reflections).
int vv_distance(const std::vector<EdgeKey>& a, const std::vector<EdgeKey>& b, int n) {
  int best = -1;
  for (int flip = 0; flip < 2; ++flip) {
    for (int r = 0; r < n; ++r) {
      std::vector<EdgeKey> mapped;
      for (auto [u, v] : a) {
        const int x = flip ? (r - u + n) % n : (u + r) % n;
        const int y = flip ? (r - v + n) % n : (v + r) % n;
        mapped.push_back(edge_key(x, y));
      }
      std::sort(mapped.begin(), mapped.end());
      std::vector<EdgeKey> diff;
      std::set_symmetric_difference(mapped.begin(), mapped.end(), b.begin(), b.end(),
                                    std::back_inserter(diff));
      const int d = static_cast<int>(diff.size());
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

// Random walk towards a deflatable polygon with the vertex visibilities of
// `base`. The walk starts at the base itself, or at a realization of its
// first illegal-path-free candidate dual, and keeps moves that do not
// increase the visibility distance.
int search_same_vv(const Polygon& base, long radius, bool from_candidate, std::uint64_t seed,
                   int iterations) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(-radius, radius);
  const auto target = vertex_visibility_graph(base).vv_pairs();
  Polygon start = base;
  if (from_candidate) {
    const Certificate cert = certify(base);
    for (std::size_t i = 0; i < cert.verdicts.size(); ++i) {
      if (cert.verdicts[i].kind == CandidateVerdict::Kind::IllegalPath) continue;
      start = realize(enumerate_candidate_duals(base)[i].dual);
      break;
    }
  }
  std::vector<Point> ring = start.vertices();
  const int n = static_cast<int>(ring.size());
  Scalar lo = ring[0].x, hi = ring[0].x;
  for (const auto& v : ring) {
    lo = std::min({lo, v.x, v.y});
    hi = std::max({hi, v.x, v.y});
  }
  const Scalar unit = (hi - lo) / Scalar(256);
  int score = vv_distance(vertex_visibility_graph(start).vv_pairs(), target, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int it = 0; it < iterations; ++it) {
    std::vector<Point> next = ring;
    const int i = pick(rng);
    next[i] = {next[i].x + unit * Scalar(step(rng)), next[i].y + unit * Scalar(step(rng))};
    if (find_self_intersection(next) || signed_area2(next).sign() <= 0) continue;
    const Polygon p = Polygon::from_ccw_ring(next);
    if (!is_general_position(p).general_position) continue;
    const int d = vv_distance(vertex_visibility_graph(p).vv_pairs(), target, n);
    if (d > score) continue;
    ring = std::move(next);
    score = d;
    if (d > 0 || certify(p).kind != CertificateKind::CompatibleFound) continue;
    std::cerr << "iteration " << it << "\n";
    std::cout << serialize_polygon(p);
    return 0;
  }
  std::cerr << "nothing found, distance " << score << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized fixture search"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  int iterations = 100000;
  app.add_option("--seed", seed);
  app.add_option("--iterations", iterations);

  int n = 7;
  long grid = 40;
  int triangulations = 0;
  int open = -1;
  int min_reflex = 0;
  auto* nd = app.add_subcommand("nondeflatable", "random n-gons certified NonDeflatable");
  nd->add_option("--n", n);
  nd->add_option("--grid", grid);
  nd->add_option("--triangulations", triangulations, "required triangulation count");
  nd->add_option("--open-edges", open, "required undirected edges per triangulation");
  nd->add_option("--min-reflex", min_reflex);
  std::vector<std::string> avoid_paths;
  nd->add_option("--avoid-vv", avoid_paths, "skip polygons whose vertex visibilities match these");

  std::string base_path;
  long radius = 4;
  bool from_candidate = false;
  auto* sv = app.add_subcommand("same-vv", "deflatable polygon with the vertex visibilities of base");
  sv->add_option("base", base_path)->required();
  sv->add_option("--radius", radius, "step bound in 1/256 of the bounding box");
  sv->add_flag("--from-candidate", from_candidate);

  CLI11_PARSE(app, argc, argv);
  try {
    if (nd->parsed()) {
      std::vector<Polygon> avoid;
      for (const auto& path : avoid_paths) {
        const auto text = read_text(path);
        if (!text) return 66;
        avoid.push_back(parse_polygon(*text));
      }
      return search_nondeflatable(n, grid, seed, iterations, triangulations, open, min_reflex, avoid);
    }
    const auto text = read_text(base_path);
    if (!text) return 66;
    return search_same_vv(parse_polygon(*text), radius, from_candidate, seed, iterations);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
