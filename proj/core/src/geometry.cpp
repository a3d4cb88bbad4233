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

#include "deflate/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace deflate {

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

Scalar cross(const Vector& a, const Vector& b) { return a.x * b.y - a.y * b.x; }
Scalar dot(const Vector& a, const Vector& b) { return a.x * b.x + a.y * b.y; }
Scalar l1_norm(const Vector& v) { return v.x.abs() + v.y.abs(); }

namespace {

// Sign of the orientation determinant from double approximations, or 0 when
// the rounding error could flip it.
int filtered_orient(const Point& p, const Point& q, const Point& r) {
  const double px = p.x.approx(), py = p.y.approx();
  const double qx = q.x.approx(), qy = q.y.approx();
  const double rx = r.x.approx(), ry = r.y.approx();
  const double m = std::max({std::abs(px), std::abs(py), std::abs(qx), std::abs(qy),
                             std::abs(rx), std::abs(ry)});
  if (!(m > 1e-60 && m < 1e60)) return 0;
  const double det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  const double bound = 512.0 * std::numeric_limits<double>::epsilon() * m * m;
  if (det > bound) return 1;
  if (det < -bound) return -1;
  return 0;
}

}  // namespace

Turn orient(const Point& p, const Point& q, const Point& r) {
  int s = filtered_orient(p, q, r);
  if (s == 0) {
    if (p == q || q == r || p == r) return Turn::Collinear;
    s = cross(q - p, r - p).sign();
  }
  return s > 0 ? Turn::Left : (s < 0 ? Turn::Right : Turn::Collinear);
}

bool on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != Turn::Collinear) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

bool segments_intersect(const Segment& s1, const Segment& s2, IntersectMode mode) {
  const Turn o1 = orient(s1.a, s1.b, s2.a);
  const Turn o2 = orient(s1.a, s1.b, s2.b);
  const Turn o3 = orient(s2.a, s2.b, s1.a);
  const Turn o4 = orient(s2.a, s2.b, s1.b);
  const bool proper = o1 != Turn::Collinear && o2 != Turn::Collinear && o3 != Turn::Collinear &&
                      o4 != Turn::Collinear && o1 != o2 && o3 != o4;
  if (mode == IntersectMode::Proper) return proper;
  if (proper) return true;
  return on_segment(s2.a, s1) || on_segment(s2.b, s1) || on_segment(s1.a, s2) ||
         on_segment(s1.b, s2);
}

std::optional<std::pair<Scalar, Scalar>> line_intersection_params(const Segment& s1,
                                                                  const Segment& s2) {
  const Vector d1 = s1.b - s1.a;
  const Vector d2 = s2.b - s2.a;
  const Scalar den = cross(d1, d2);
  if (den.sign() == 0) return std::nullopt;
  const Vector w = s2.a - s1.a;
  return std::pair{cross(w, d2) / den, cross(w, d1) / den};
}

Point lerp(const Point& a, const Point& b, const Scalar& t) { return a + t * (b - a); }

Scalar squared_distance(const Point& p, const Segment& s) {
  const Vector d = s.b - s.a;
  const Scalar len2 = dot(d, d);
  Scalar t = dot(p - s.a, d) / len2;
  if (t.sign() < 0) t = 0;
  if (t > Scalar(1)) t = 1;
  const Vector off = p - lerp(s.a, s.b, t);
  return dot(off, off);
}

}  // namespace deflate
