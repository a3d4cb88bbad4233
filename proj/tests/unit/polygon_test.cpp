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

#include "deflate/error.hpp"
#include "deflate/polygon.hpp"
#include "test_support.hpp"

namespace deflate {
namespace {

using testing::make_polygon;
using testing::pt;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

TEST(Polygon, KeepsCounterClockwiseInput) {
  const auto sq = make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  EXPECT_EQ(sq.vertex(1), pt(4, 0));
  EXPECT_EQ(sq.area2(), Scalar(32));
}

TEST(Polygon, ReversesClockwiseInputKeepingFirstVertex) {
  const auto cw = make_polygon({{0, 0}, {0, 4}, {4, 4}, {4, 0}});
  EXPECT_EQ(cw, make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
  EXPECT_THROW(Polygon::from_ccw_ring({pt(0, 0), pt(0, 4), pt(4, 4), pt(4, 0)}), Error);
}

TEST(Polygon, RejectsBadRings) {
  EXPECT_EQ(code_of([] { make_polygon({{0, 0}, {1, 0}}); }), ErrorCode::TooFewVertices);
  EXPECT_EQ(code_of([] { make_polygon({{0, 0}, {2, 0}, {0, 0}, {0, 2}}); }), ErrorCode::DuplicateVertex);
  try {
    make_polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSimple);
    EXPECT_EQ(e.detail(), (std::vector<int>{0, 2}));
  }
  // Fold-back along a line, and a vertex touching a non-adjacent edge.
  EXPECT_EQ(code_of([] { make_polygon({{0, 0}, {4, 0}, {2, 0}, {2, 3}}); }), ErrorCode::NotSimple);
  EXPECT_EQ(code_of([] { make_polygon({{0, 0}, {4, 0}, {4, 4}, {2, 0}, {0, 4}}); }), ErrorCode::NotSimple);
}

TEST(Polygon, ReversingTheRingNegatesArea) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_polygon(rng, 8);
    auto ring = p.vertices();
    EXPECT_GT(signed_area2(ring), Scalar(0));
    std::reverse(ring.begin(), ring.end());
    EXPECT_EQ(signed_area2(ring), -p.area2());
  }
}

TEST(Polygon, CanonicalFormIgnoresRotation) {
  const auto p = make_polygon({{3, 1}, {5, 5}, {0, 4}, {1, 0}});
  const auto q = make_polygon({{0, 4}, {1, 0}, {3, 1}, {5, 5}});
  EXPECT_NE(p, q);
  EXPECT_TRUE(p.same_shape(q));
  EXPECT_EQ(p.canonical().vertex(0), pt(0, 4));
}

TEST(Polygon, LocatesPoints) {
  const auto p = make_polygon({{0, 0}, {4, 0}, {1, 1}, {0, 4}});
  EXPECT_EQ(locate(p, pt(0, 0)), Location::Boundary);
  EXPECT_EQ(locate(p, pt(2, 0)), Location::Boundary);
  EXPECT_EQ(locate(p, {Scalar(1, 2), Scalar(1, 2)}), Location::Inside);
  EXPECT_EQ(locate(p, pt(2, 2)), Location::Outside);
  EXPECT_EQ(locate(p, pt(-1, 2)), Location::Outside);
}

TEST(Polygon, ReflexVertices) {
  EXPECT_TRUE(reflex_vertices(make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}})).empty());
  EXPECT_EQ(reflex_vertices(make_polygon({{0, 0}, {4, 0}, {1, 1}, {0, 4}})), std::vector<int>{2});
  const auto star = make_polygon({{0, 0}, {4, 0}, {2, 1}, {4, 4}, {0, 4}, {1, 2}});
  EXPECT_EQ(reflex_vertices(star), (std::vector<int>{2, 5}));
  EXPECT_EQ(code_of([] { reflex_vertices(make_polygon({{0, 0}, {2, 0}, {4, 0}, {0, 4}})); }),
            ErrorCode::CollinearTriple);
}

TEST(Polygon, ReflexSetMatchesProbeOracle) {
  // A vertex is reflex iff a point just past it along the inward bisector of
  // its neighbours' chord lies outside; probe with the crossing-count oracle.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_polygon(rng, 9);
    const auto reflex = reflex_vertices(p);
    for (int i = 0; i < p.size(); ++i) {
      const Point& a = p.vertex(p.prev(i));
      const Point& b = p.vertex(i);
      const Point& c = p.vertex(p.next(i));
      const Point mid = lerp(a, c, Scalar(1, 2));
      // Tiny step from b towards the midpoint of its neighbours.
      const Point probe = b + Scalar(1, 1000000) * (mid - b);
      const bool is_reflex = std::find(reflex.begin(), reflex.end(), i) != reflex.end();
      EXPECT_EQ(!testing::oracle_in_closed(p, probe), is_reflex) << trial << " " << i;
    }
  }
}

TEST(Polygon, GeneralPosition) {
  EXPECT_TRUE(is_general_position(make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}})).general_position);
  EXPECT_TRUE(is_general_position(make_polygon({{0, 0}, {4, 0}, {1, 3}})).general_position);
  const auto r = is_general_position(make_polygon({{0, 0}, {4, 0}, {2, 2}, {4, 4}, {0, 4}}));
  ASSERT_FALSE(r.general_position);
  EXPECT_EQ(r.witness->u, 0);
  EXPECT_EQ(r.witness->v, 3);
  EXPECT_EQ(r.witness->hit, pt(2, 2));
}

TEST(Polygon, JsonRoundTrip) {
  const auto p = parse_polygon(R"({"vertices": [["0","0"], ["1/2","-3"], ["5","7/3"]]})");
  EXPECT_EQ(p.vertex(1), (Point{Scalar(1, 2), Scalar(-3)}));
  EXPECT_EQ(parse_polygon(serialize_polygon(p)), p);
  EXPECT_EQ(code_of([] { parse_polygon("{"); }), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of([] { parse_polygon(R"({"vertices": [["0"]]})"); }), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of([] { parse_polygon(R"({"points": []})"); }), ErrorCode::MalformedDocument);
}

}  // namespace
}  // namespace deflate
