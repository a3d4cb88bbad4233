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

#include <iosfwd>
#include <optional>

#include "deflate/scalar.hpp"

namespace deflate {

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic (x, then y).
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  Point& operator+=(const Point& o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(const Point& o) { x -= o.x; y -= o.y; return *this; }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
  Point operator-() const { return {-x, -y}; }
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Points double as displacement vectors.
using Vector = Point;

enum class Turn { Left, Right, Collinear };

Scalar cross(const Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
/// |x| + |y|; a rational stand-in for length when only direction matters.
Scalar l1_norm(const Vector& v);

/// Sign of det(q - p, r - p).
Turn orient(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

enum class IntersectMode {
  /// Interiors cross transversally at one point interior to both.
  Proper,
  /// The closed segments share at least one point.
  Any,
};

bool segments_intersect(const Segment& s1, const Segment& s2, IntersectMode mode);

/// True iff p lies on the closed segment.
bool on_segment(const Point& p, const Segment& s);

/// Intersection of the supporting lines of two non-parallel segments, as
/// parameters (t, u) with point = s1.a + t (s1.b - s1.a) = s2.a + u (s2.b - s2.a).
std::optional<std::pair<Scalar, Scalar>> line_intersection_params(const Segment& s1,
                                                                  const Segment& s2);

Point lerp(const Point& a, const Point& b, const Scalar& t);

/// Squared Euclidean distance from p to the closed segment.
Scalar squared_distance(const Point& p, const Segment& s);

}  // namespace deflate
