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

#include "deflate/error.hpp"
#include "deflate/geometry.hpp"
#include "test_support.hpp"

namespace deflate {
namespace {

using testing::pt;

TEST(Scalar, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-0/5").str(), "0");
  EXPECT_EQ(Scalar::parse("+12").str(), "12");
  EXPECT_EQ(Scalar::parse("-7/1").str(), "-7");
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1/-2", "--1"}) {
    try {
      Scalar::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedDocument) << bad;
    }
  }
}

TEST(Scalar, ArithmeticIsExact) {
  const Scalar third(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(Scalar(7, 2).floor(), Scalar(3));
  EXPECT_EQ(Scalar(-7, 2).floor(), Scalar(-4));
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
}

TEST(Orient, ClassifiesTurns) {
  EXPECT_EQ(orient(pt(0, 0), pt(1, 0), pt(0, 1)), Turn::Left);
  EXPECT_EQ(orient(pt(0, 0), pt(1, 0), pt(0, -1)), Turn::Right);
  EXPECT_EQ(orient(pt(0, 0), pt(1, 1), pt(5, 5)), Turn::Collinear);
}

TEST(Orient, SurvivesNearDegenerateInput) {
  // A double-precision determinant calls this collinear; the exact one does not.
  const Point a{Scalar::parse("1/3"), Scalar::parse("1/3")};
  const Point b{Scalar::parse("2/3"), Scalar::parse("2/3")};
  const Point c{Scalar::parse("1"), Scalar::parse("1000000000000000001/1000000000000000000")};
  EXPECT_EQ(orient(a, b, c), Turn::Left);
  const Point d{Scalar(1), Scalar(1)};
  EXPECT_EQ(orient(a, b, d), Turn::Collinear);
}

TEST(Segments, ProperAndTouchingIntersections) {
  const Segment s{pt(0, 0), pt(4, 4)};
  EXPECT_TRUE(segments_intersect(s, {pt(0, 4), pt(4, 0)}, IntersectMode::Proper));
  // Shared endpoint: touches but does not cross.
  EXPECT_FALSE(segments_intersect(s, {pt(4, 4), pt(8, 0)}, IntersectMode::Proper));
  EXPECT_TRUE(segments_intersect(s, {pt(4, 4), pt(8, 0)}, IntersectMode::Any));
  // T-junction.
  EXPECT_FALSE(segments_intersect(s, {pt(2, 2), pt(2, 0)}, IntersectMode::Proper));
  EXPECT_TRUE(segments_intersect(s, {pt(2, 2), pt(2, 0)}, IntersectMode::Any));
  // Collinear overlap and disjoint collinear pieces.
  EXPECT_TRUE(segments_intersect(s, {pt(1, 1), pt(6, 6)}, IntersectMode::Any));
  EXPECT_FALSE(segments_intersect(s, {pt(1, 1), pt(6, 6)}, IntersectMode::Proper));
  EXPECT_FALSE(segments_intersect(s, {pt(5, 5), pt(6, 6)}, IntersectMode::Any));
}

TEST(Segments, IntersectionParameters) {
  const auto params = line_intersection_params({pt(0, 0), pt(4, 0)}, {pt(1, -1), pt(1, 3)});
  ASSERT_TRUE(params);
  EXPECT_EQ(params->first, Scalar(1, 4));
  EXPECT_EQ(params->second, Scalar(1, 4));
  EXPECT_FALSE(line_intersection_params({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 1)}));
}

TEST(Segments, SquaredDistance) {
  EXPECT_EQ(squared_distance(pt(1, 3), {pt(0, 0), pt(4, 0)}), Scalar(9));
  EXPECT_EQ(squared_distance(pt(-3, 4), {pt(0, 0), pt(4, 0)}), Scalar(25));
}

TEST(Vectors, NormsAndProducts) {
  EXPECT_EQ(l1_norm(pt(-3, 4)), Scalar(7));
  EXPECT_EQ(cross(pt(1, 0), pt(0, 1)), Scalar(1));
  EXPECT_EQ(dot(pt(2, 3), pt(4, -1)), Scalar(5));
  EXPECT_EQ(lerp(pt(0, 0), pt(4, 2), Scalar(1, 2)), pt(2, 1));
}

}  // namespace
}  // namespace deflate
