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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "deflate/error.hpp"
#include "deflate/triangulation.hpp"
#include "deflate/visibility.hpp"
#include "test_support.hpp"

namespace deflate {
namespace {

using testing::make_polygon;

// Every set of n-3 pairwise non-crossing diagonals, found by brute force over
// subsets of the chords the sampling oracle accepts.
std::set<std::vector<EdgeKey>> brute_force_triangulations(const Polygon& p) {
  const int n = p.size();
  std::vector<EdgeKey> chords;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!p.adjacent(u, v) && testing::oracle_vv(p, u, v)) chords.emplace_back(u, v);
    }
  }
  std::set<std::vector<EdgeKey>> out;
  std::vector<EdgeKey> pick;
  auto crosses = [&](EdgeKey a, EdgeKey b) {
    return segments_intersect({p.vertex(a.first), p.vertex(a.second)},
                              {p.vertex(b.first), p.vertex(b.second)}, IntersectMode::Proper);
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == n - 3) {
      out.insert(pick);
      return;
    }
    for (std::size_t i = from; i < chords.size(); ++i) {
      bool ok = true;
      for (const auto& q : pick) ok = ok && !crosses(q, chords[i]);
      if (!ok) continue;
      pick.push_back(chords[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Scalar triangle_area2(const Polygon& p, const std::array<int, 3>& t) {
  return cross(p.vertex(t[1]) - p.vertex(t[0]), p.vertex(t[2]) - p.vertex(t[0]));
}

TEST(Triangulation, ConvexCountsAreCatalanNumbers) {
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(enumerate_triangulations(testing::convex_polygon(n)).size(), catalan[static_cast<std::size_t>(n - 2)]) << n;
  }
}

TEST(Triangulation, NonConvexQuadrilateralHasOne) {
  const auto tris = enumerate_triangulations(make_polygon({{0, 0}, {4, 0}, {1, 1}, {0, 4}}));
  ASSERT_EQ(tris.size(), 1u);
  EXPECT_EQ(tris[0].diagonals, (std::vector<EdgeKey>{{0, 2}}));
}

TEST(Triangulation, MatchesBruteForceOnRandomPolygons) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_polygon(rng, 5 + trial % 4);
    const auto tris = enumerate_triangulations(p);
    std::set<std::vector<EdgeKey>> got;
    for (const auto& t : tris) got.insert(t.diagonals);
    EXPECT_EQ(got.size(), tris.size());
    EXPECT_EQ(got, brute_force_triangulations(p)) << trial;
  }
}

TEST(Triangulation, OrderIsLexicographic) {
  const auto tris = enumerate_triangulations(testing::convex_polygon(7));
  for (std::size_t i = 1; i < tris.size(); ++i) EXPECT_LT(tris[i - 1].diagonals, tris[i].diagonals);
}

TEST(Triangulation, TrianglesAreCounterClockwiseAndTileThePolygon) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_polygon(rng, 9);
    const auto vis = vertex_visibility_graph(p);
    for (const auto& t : enumerate_triangulations(p)) {
      ASSERT_EQ(t.triangles.size(), 7u);
      ASSERT_EQ(t.diagonals.size(), 6u);
      Scalar total;
      for (const auto& tr : t.triangles) {
        EXPECT_GT(triangle_area2(p, tr), Scalar(0));
        total += triangle_area2(p, tr);
      }
      EXPECT_EQ(total, p.area2());
      for (const auto& [a, b] : t.diagonals) EXPECT_TRUE(vis.sees(a, b));
    }
  }
}

TEST(Triangulation, RejectsCollinearVertices) {
  try {
    enumerate_triangulations(make_polygon({{0, 0}, {2, 0}, {4, 0}, {2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CollinearTriple);
  }
}

TEST(Triangulation, FromDiagonalsValidates) {
  EXPECT_THROW(Triangulation::from_diagonals(5, {{0, 2}}), Error);
  EXPECT_THROW(Triangulation::from_diagonals(5, {{0, 2}, {1, 3}}), Error);
  EXPECT_THROW(Triangulation::from_diagonals(5, {{0, 1}, {0, 3}}), Error);
  const auto t = Triangulation::from_diagonals(5, {{3, 0}, {0, 2}});
  EXPECT_EQ(t.diagonals, (std::vector<EdgeKey>{{0, 2}, {0, 3}}));
  EXPECT_EQ(t.triangles, (std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}));
  EXPECT_TRUE(t.is_polygon_edge(4, 0));
  EXPECT_TRUE(t.is_diagonal(3, 0));
  EXPECT_FALSE(t.is_diagonal(1, 3));
  EXPECT_EQ(t.triangles_at(3), (std::vector<int>{1, 2}));
}

TEST(Ears, QuadrilateralHasTwoEars) {
  const auto t = Triangulation::from_diagonals(4, {{0, 2}});
  const auto ears = find_ears(t);
  ASSERT_EQ(ears.size(), 2u);
  EXPECT_EQ(ears[0].helix, 1);
  EXPECT_EQ(ears[1].helix, 3);
  EXPECT_EQ(ears[0].diagonal, (EdgeKey{0, 2}));
}

TEST(Ears, FanHasTwoEars) {
  const auto t = Triangulation::from_diagonals(6, {{0, 2}, {0, 3}, {0, 4}});
  const auto ears = find_ears(t);
  ASSERT_EQ(ears.size(), 2u);
  EXPECT_EQ(ears[0].helix, 1);
  EXPECT_EQ(ears[1].helix, 5);
}

TEST(Ears, EveryTriangulationHasTwo) {
  for (const auto& t : enumerate_triangulations(testing::convex_polygon(8))) {
    const auto ears = find_ears(t);
    EXPECT_GE(ears.size(), 2u);
    for (const auto& e : ears) {
      // The helix lies in no other triangle.
      EXPECT_EQ(t.triangles_at(e.helix).size(), 1u);
    }
  }
}

TEST(Ears, LoneTriangleSignals) {
  const auto t = Triangulation::from_diagonals(3, {});
  try {
    find_ears(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingleTriangle);
  }
}

TEST(Ears, RemovalShrinksThePolygon) {
  const auto quad = testing::convex_polygon(4);
  const auto qt = Triangulation::from_diagonals(4, {{0, 2}});
  const auto r = remove_ear(quad, qt, find_ears(qt)[0]);
  EXPECT_EQ(r.polygon.size(), 3);
  EXPECT_EQ(r.original_index, (std::vector<int>{0, 2, 3}));
  EXPECT_TRUE(r.triangulation.diagonals.empty());

  const auto hex = testing::convex_polygon(6);
  const auto fan = Triangulation::from_diagonals(6, {{0, 2}, {0, 3}, {0, 4}});
  const auto rf = remove_ear(hex, fan, find_ears(fan)[1]);
  EXPECT_EQ(rf.triangulation.diagonals, (std::vector<EdgeKey>{{0, 2}, {0, 3}}));
  EXPECT_EQ(rf.polygon.vertex(4), hex.vertex(4));
}

TEST(Triangulation, JsonRoundTrip) {
  const auto t = Triangulation::from_diagonals(6, {{0, 2}, {2, 4}, {0, 4}});
  EXPECT_EQ(parse_triangulation(serialize_triangulation(t), 6), t);
  EXPECT_THROW(parse_triangulation(R"({"diagonals": [[0, 2]]})", 6), Error);
  EXPECT_THROW(parse_triangulation(R"({"diagonals": 3})", 6), Error);
}

}  // namespace
}  // namespace deflate
