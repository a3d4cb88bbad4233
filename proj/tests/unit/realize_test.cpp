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


#include <random>

#include <gtest/gtest.h>

#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/visibility.hpp"
#include "random_dual.hpp"
#include "test_support.hpp"

namespace deflate {
namespace {

using testing::pt;

void expect_round_trip(const DualTree& dual, const Polygon& poly) {
  ASSERT_TRUE(is_deflated(poly).deflated);
  const DualTree back = deflated_dual(poly);
  const auto k = plane_isomorphism(dual, back);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(*k, 0);
}

TEST(Realize, SingleTriangle) {
  const DualTree d = build_dual(Triangulation::from_diagonals(3, {}));
  const Polygon p = realize(d);
  EXPECT_EQ(p.size(), 3);
  expect_round_trip(d, p);
}

TEST(Realize, QuadrilateralBothDirections) {
  for (Direction dir : {Direction::AtoB, Direction::BtoA}) {
    DualTree d = build_dual(Triangulation::from_diagonals(4, {{0, 2}}));
    d.set_direction(d.undirected_inner_edges().at(0), dir);
    const Polygon p = realize(d);
    expect_round_trip(d, p);
    EXPECT_EQ(reflex_vertices(p).size(), 1u);
  }
}

TEST(Realize, RejectsUndirectedEdge) {
  const DualTree d = build_dual(Triangulation::from_diagonals(4, {{0, 2}}));
  try {
    realize(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndirectedNonTerminalEdge);
  }
}

TEST(Realize, RejectsIllegalPath) {
  // Fan about vertex 0 of a hexagon, every edge pointing away from the
  // triangle at edge 0.
  DualTree d = build_dual(Triangulation::from_diagonals(6, {{0, 2}, {0, 3}, {0, 4}}));
  const auto paths = maximal_outer_paths(d);
  const auto& fan = paths[0];
  for (std::size_t i = 1; i + 2 < fan.size(); ++i) d.direct(fan[i], fan[i + 1]);
  ASSERT_TRUE(find_illegal_path(d).has_value());
  try {
    realize(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalPath);
    EXPECT_FALSE(e.detail().empty());
  }
}

TEST(Realize, RandomDualsRoundTrip) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 4 + iter % 8;
    const DualTree d = testing::random_directed_dual(rng, n);
    const Polygon p = realize(d);
    ASSERT_EQ(p.size(), n);
    expect_round_trip(d, p);
  }
}

TEST(Realize, JitterKeepsDual) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const DualTree d = testing::random_directed_dual(rng, 5 + iter % 5);
    RealizeOptions opt;
    opt.jitter_seed = 1000 + static_cast<std::uint64_t>(iter);
    const Polygon p = realize(d, opt);
    expect_round_trip(d, p);
  }
}

TEST(Realize, EveryRootWorks) {
  std::mt19937_64 rng(3);
  const DualTree d = testing::random_directed_dual(rng, 8);
  for (int r = 0; r < d.triangle_count(); ++r) {
    RealizeOptions opt;
    opt.root = r;
    expect_round_trip(d, realize(d, opt));
  }
}

TEST(HelixWedge, ContainsOnlyStrictInterior) {
  // Anchor (0,0) at the tail of edge (0,0)->(4,0) with triangle apex (1,2);
  // the first fan end leaves the anchor convex, the second makes it reflex.
  for (const Point& fan_end : {pt(-2, 1), pt(-1, -1)}) {
    const auto w = detail::helix_wedge(pt(0, 0), pt(4, 0), pt(1, 2), fan_end, true);
    const Vector d = detail::wedge_direction(w);
    EXPECT_TRUE(detail::wedge_contains(w, d));
    EXPECT_FALSE(detail::wedge_contains(w, w.low));
    EXPECT_FALSE(detail::wedge_contains(w, w.high));
    EXPECT_FALSE(detail::wedge_contains(w, -d));
  }
}

TEST(HelixWedge, FanAtPiFails) {
  EXPECT_FALSE(detail::fan_below_pi(pt(0, 0), pt(1, 2), pt(-1, -2), true));
  EXPECT_THROW(detail::helix_wedge(pt(0, 0), pt(4, 0), pt(1, 2), pt(-1, -2), true), Error);
}

}  // namespace
}  // namespace deflate
