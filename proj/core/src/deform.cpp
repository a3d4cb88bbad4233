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

#include "deflate/deform.hpp"

#include <algorithm>

#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/triangulation.hpp"
#include "deflate/visibility.hpp"
#include "json_util.hpp"

namespace deflate {

namespace {

using Ring = std::vector<Point>;
using Keyframes = std::vector<Ring>;

std::size_t at(int i) { return static_cast<std::size_t>(i); }

Vector rot90(const Vector& v) { return {-v.y, v.x}; }

Ring lerp_ring(const Ring& a, const Ring& b, const Scalar& t) {
  Ring out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(lerp(a[i], b[i], t));
  return out;
}

void push_distinct(Keyframes& keys, Ring ring) {
  if (keys.empty() || keys.back() != ring) keys.push_back(std::move(ring));
}

// Sample times strictly inside one linear phase.
std::vector<Scalar> inner_samples(int per_phase) {
  std::vector<Scalar> out;
  for (int j = 1; j < per_phase; ++j) out.emplace_back(j, per_phase);
  return out;
}

// Translate, square up, rotate-and-scale, then release the third corner.
// Every intermediate triangle is counter-clockwise.
Keyframes morph_triangle(const Ring& from, const Ring& to) {
  Keyframes keys{from};
  const Vector shift = to[0] - from[0];
  push_distinct(keys, {to[0], from[1] + shift, from[2] + shift});
  const Vector b0 = from[1] - from[0];
  const Vector b1 = to[1] - to[0];
  push_distinct(keys, {to[0], to[0] + b0, to[0] + rot90(b0)});
  if (cross(b0, b1).sign() == 0 && dot(b0, b1).sign() < 0) {
    push_distinct(keys, {to[0], to[0] + rot90(b0), to[0] + rot90(rot90(b0))});
  }
  push_distinct(keys, {to[0], to[0] + b1, to[0] + rot90(b1)});
  push_distinct(keys, to);
  return keys;
}

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const Turn t = orient(a, b, p);
  return t != Turn::Collinear && orient(b, c, p) == t && orient(c, a, p) == t;
}

class Morpher {
 public:
  explicit Morpher(int per_phase) : per_phase_(per_phase), samples_(inner_samples(per_phase)) {}

  Keyframes run(const Ring& from, const Ring& to, const Triangulation& tri) {
    if (from.size() == 3) return morph_triangle(from, to);

    const Ear ear = find_ears(tri).front();
    const Polygon pf = Polygon::from_ccw_ring(from);
    const Polygon pt = Polygon::from_ccw_ring(to);
    const auto cut_from = remove_ear(pf, tri, ear);
    const auto cut_to = remove_ear(pt, tri, ear);
    const Keyframes sub = run(cut_from.polygon.vertices(), cut_to.polygon.vertices(), cut_from.triangulation);

    const int v = ear.helix;
    const auto [x, y] = ear.diagonal;
    int s = -1;
    for (const auto& tr : tri.triangles) {
      const bool has_x = std::find(tr.begin(), tr.end(), x) != tr.end();
      const bool has_y = std::find(tr.begin(), tr.end(), y) != tr.end();
      const bool has_v = std::find(tr.begin(), tr.end(), v) != tr.end();
      if (has_x && has_y && !has_v) {
        for (int c : tr) {
          if (c != x && c != y) s = c;
        }
      }
    }
    // The reflex endpoint of the shared edge is the anchor.
    const int u = strictly_inside_triangle(from[at(x)], from[at(v)], from[at(s)], from[at(y)]) ? x : y;
    const int w = u == x ? y : x;

    std::vector<int> to_sub(from.size(), -1);
    for (std::size_t i = 0; i < cut_from.original_index.size(); ++i) {
      to_sub[at(cut_from.original_index[i])] = static_cast<int>(i);
    }
    const int m = static_cast<int>(cut_from.original_index.size());
    Level level;
    level.helix = v;
    level.u = to_sub[at(u)];
    level.w = to_sub[at(w)];
    level.s = to_sub[at(s)];
    level.anchor_is_tail = (level.u + 1) % m == level.w;
    level.fan_end = level.anchor_is_tail ? (level.u + m - 1) % m : (level.u + 1) % m;
    return lift(level, from, to, sub);
  }

 private:
  struct Level {
    int helix;
    int u, w, s, fan_end;
    bool anchor_is_tail;
  };

  detail::HelixWedge wedge_at(const Level& lv, const Ring& sub) const {
    return detail::helix_wedge(sub[at(lv.u)], sub[at(lv.w)], sub[at(lv.s)], sub[at(lv.fan_end)],
                               lv.anchor_is_tail);
  }

  static Ring insert_helix(const Ring& sub, int helix, const Point& p) {
    Ring out = sub;
    out.insert(out.begin() + helix, p);
    return out;
  }

  struct Bias {
    Scalar low;
    Scalar high;
  };

  // Offset of the carried helix: a fixed positive combination of the wedge
  // rays. Both rays move linearly while the sub-polygon moves linearly, so
  // the offset stays inside the wedge between keyframes as well.
  Vector carried(const Level& lv, const Ring& sub, const Bias& bias) const {
    const auto w = wedge_at(lv, sub);
    return bias.low * w.low + bias.high * w.high;
  }

  Keyframes lift(const Level& lv, const Ring& from, const Ring& to, const Keyframes& sub) {
    std::vector<Ring> probes;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      probes.push_back(sub[k]);
      if (k + 1 < sub.size()) {
        for (const auto& t : samples_) probes.push_back(lerp_ring(sub[k], sub[k + 1], t));
      }
    }
    // Initial radius from the clearance of the anchor over the whole motion.
    std::optional<Scalar> clearance;
    for (const auto& r : probes) {
      const std::size_t n = r.size();
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        if (i == at(lv.u) || j == at(lv.u)) continue;
        const Scalar d = squared_distance(r[at(lv.u)], {r[i], r[j]});
        if (!clearance || d < *clearance) clearance = d;
      }
    }
    const Scalar limit = clearance.value_or(Scalar(1)) / Scalar(4);

    for (const Bias& bias : {Bias{1, 1}, Bias{3, 1}, Bias{1, 3}, Bias{7, 1}, Bias{1, 7}}) {
      Scalar reach(0);
      for (const auto& r : sub) {
        const Vector c = carried(lv, r, bias);
        reach = std::max(reach, dot(c, c));
      }
      Scalar radius(1);
      while (radius * radius * reach > limit) radius /= Scalar(2);
      for (int attempt = 0; attempt < 64; ++attempt, radius /= Scalar(2)) {
        Keyframes keys = build(lv, from, to, sub, bias, radius);
        if (valid(lv, keys)) return keys;
      }
    }
    throw Error(ErrorCode::RadiusSearchFailed, "no ear radius keeps every frame valid", {lv.helix});
  }

  Keyframes build(const Level& lv, const Ring& from, const Ring& to, const Keyframes& sub,
                  const Bias& bias, const Scalar& radius) const {
    auto held = [&](const Ring& r) { return r[at(lv.u)] + radius * carried(lv, r, bias); };
    // Slide the helix along its edge towards the anchor until it is no
    // farther than the carried position.
    auto approach = [&](const Ring& whole, const Ring& r) {
      const Point& anchor = r[at(lv.u)];
      const Vector out = whole[at(lv.helix)] - anchor;
      const Vector c = radius * carried(lv, r, bias);
      Scalar f(1);
      while (f * f * dot(out, out) > dot(c, c)) f /= Scalar(2);
      return anchor + f * out;
    };
    Keyframes keys{from};
    push_distinct(keys, insert_helix(sub.front(), lv.helix, approach(from, sub.front())));
    for (const auto& r : sub) push_distinct(keys, insert_helix(r, lv.helix, held(r)));
    push_distinct(keys, insert_helix(sub.back(), lv.helix, approach(to, sub.back())));
    push_distinct(keys, to);
    return keys;
  }

  // The helix sees only its two neighbours, its edges cross nothing, and the
  // anchor stays reflex in the union with the neighbouring triangle.
  bool valid(const Level& lv, const Keyframes& keys) const {
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (!valid_frame(lv, keys[k])) return false;
      if (k + 1 == keys.size()) break;
      for (const auto& t : samples_) {
        if (!valid_frame(lv, lerp_ring(keys[k], keys[k + 1], t))) return false;
      }
    }
    return true;
  }

  bool valid_frame(const Level& lv, const Ring& ring) const {
    const int n = static_cast<int>(ring.size());
    const int h = lv.helix;
    const int hp = (h + n - 1) % n;
    const int hn = (h + 1) % n;
    for (const Segment& mine : {Segment{ring[at(hp)], ring[at(h)]}, Segment{ring[at(h)], ring[at(hn)]}}) {
      for (int e = 0; e < n; ++e) {
        const int f = (e + 1) % n;
        if (e == hp || e == h) continue;
        const Segment other{ring[at(e)], ring[at(f)]};
        if (segments_intersect(mine, other, IntersectMode::Any)) {
          // Only the shared corner of adjacent edges may touch.
          const bool adjacent = mine.a == other.b || mine.b == other.a;
          if (!adjacent || segments_intersect(mine, other, IntersectMode::Proper) ||
              on_segment(mine.a == other.b ? other.a : other.b, mine) ||
              on_segment(mine.a == other.b ? mine.b : mine.a, other)) {
            return false;
          }
        }
      }
    }
    if (signed_area2(ring).sign() <= 0) return false;
    const Polygon poly = Polygon::from_ccw_ring(ring);
    for (int o = 0; o < n; ++o) {
      if (o == h || o == hp || o == hn) continue;
      if (vertices_visible(poly, h, o)) return false;
    }
    Ring sub = ring;
    const Point helix = sub[at(h)];
    sub.erase(sub.begin() + h);
    return detail::wedge_contains(wedge_at(lv, sub), helix - sub[at(lv.u)]);
  }

  int per_phase_;
  std::vector<Scalar> samples_;
};

Trajectory sample(const Keyframes& keys, int per_phase) {
  std::vector<Ring> rings;
  for (std::size_t k = 0; k + 1 < keys.size(); ++k) {
    for (int j = 0; j < per_phase; ++j) rings.push_back(lerp_ring(keys[k], keys[k + 1], Scalar(j, per_phase)));
  }
  rings.push_back(keys.back());
  if (rings.size() == 1) rings.push_back(keys.back());
  Trajectory traj;
  const long last = static_cast<long>(rings.size()) - 1;
  for (long i = 0; i <= last; ++i) traj.frames.push_back({Scalar(i, last), std::move(rings[static_cast<std::size_t>(i)])});
  return traj;
}

}  // namespace

Trajectory deform_same_dual(const Polygon& from, const Polygon& to, const DeformOptions& options) {
  if (options.frames_per_phase < 1) {
    throw Error(ErrorCode::InvalidArgument, "frames_per_phase must be positive");
  }
  const DualTree dual_from = deflated_dual(from);
  const DualTree dual_to = deflated_dual(to);
  const auto offset = plane_isomorphism(dual_from, dual_to);
  if (!offset) throw Error(ErrorCode::DualMismatch, "the polygons have different directed duals");

  const int n = from.size();
  Ring target;
  for (int i = 0; i < n; ++i) target.push_back(to.vertex((i + *offset) % n));
  const Triangulation tri = enumerate_triangulations(from).front();
  if (enumerate_triangulations(Polygon::from_ccw_ring(target)).front() != tri) {
    throw Error(ErrorCode::DualMismatch, "triangulations do not correspond");
  }
  if (from.vertices() == target) return sample({from.vertices()}, options.frames_per_phase);
  Morpher morpher(options.frames_per_phase);
  return sample(morpher.run(from.vertices(), target, tri), options.frames_per_phase);
}

MonotonicityReport check_monotonic(const Trajectory& traj, MonotonicityMode mode) {
  if (traj.frames.size() < 2) throw Error(ErrorCode::InvalidArgument, "a trajectory needs two frames");
  std::vector<VisibilityGraph> graphs;
  std::vector<Polygon> polys;
  for (std::size_t f = 0; f < traj.frames.size(); ++f) {
    const auto& ring = traj.frames[f].vertices;
    const int fi = static_cast<int>(f);
    if (ring.size() < 3) throw Error(ErrorCode::NonSimpleFrame, "frame has too few vertices", {fi, -1, -1});
    if (auto hit = find_self_intersection(ring)) {
      throw Error(ErrorCode::NonSimpleFrame, "frame is not simple", {fi, hit->first, hit->second});
    }
    if (signed_area2(ring).sign() <= 0) {
      throw Error(ErrorCode::NonSimpleFrame, "frame is not counter-clockwise", {fi, -1, -1});
    }
    polys.push_back(Polygon::from_ccw_ring(ring));
    graphs.push_back(vertex_visibility_graph(polys.back()));
  }
  MonotonicityReport report;
  for (std::size_t f = 1; f < graphs.size(); ++f) {
    for (const auto& [u, v] : graphs[f].vv_pairs()) {
      if (!graphs[f - 1].sees(u, v)) {
        report.violations.push_back({MonotonicityViolation::Kind::VertexVertex, static_cast<int>(f - 1),
                                     static_cast<int>(f), u, v});
      }
    }
  }
  if (mode == MonotonicityMode::VVandVE && is_general_position(polys.front()).general_position &&
      is_general_position(polys.back()).general_position) {
    const auto first = visibility_graph(polys.front());
    const auto last = visibility_graph(polys.back());
    const int n = polys.front().size();
    for (int u = 0; u < n; ++u) {
      for (int e = 0; e < n; ++e) {
        if (last.sees_edge(u, e) && !first.sees_edge(u, e)) {
          report.violations.push_back({MonotonicityViolation::Kind::VertexEdge, 0,
                                       static_cast<int>(polys.size() - 1), u, e});
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

FrameAudit audit_frames(const Trajectory& traj, const DualTree& expected) {
  FrameAudit audit;
  for (std::size_t f = 0; f < traj.frames.size(); ++f) {
    auto fail = [&](std::string why) {
      audit.ok = false;
      audit.first_bad_frame = static_cast<int>(f);
      audit.reason = std::move(why);
      return audit;
    };
    const auto& ring = traj.frames[f].vertices;
    if (find_self_intersection(ring) || signed_area2(ring).sign() <= 0) return fail("frame is not simple");
    const Polygon poly = Polygon::from_ccw_ring(ring);
    std::optional<DualTree> dual;
    try {
      dual = deflated_dual(poly);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDeflated && e.code() != ErrorCode::CollinearTriple) throw;
      return fail("frame is not deflated");
    }
    if (plane_isomorphism(*dual, expected) != 0) return fail("frame has a different directed dual");
  }
  return audit;
}

RefinedDeformation deform_refined(const Polygon& from, const Polygon& to, int cap) {
  RefinedDeformation out;
  for (int per_phase = 16;; per_phase *= 2) {
    out.trajectory = deform_same_dual(from, to, {per_phase});
    out.frames_per_phase = per_phase;
    out.report = check_monotonic(out.trajectory, MonotonicityMode::VV);
    if (out.report.ok || per_phase * 2 > cap) return out;
  }
}

std::string serialize_trajectory(const Trajectory& traj) {
  using json_util::json;
  json frames = json::array();
  for (const auto& f : traj.frames) frames.push_back({{"t", f.t.str()}, {"vertices", json_util::ring_to(f.vertices)}});
  return json_util::dump({{"frames", frames}});
}

Trajectory parse_trajectory(std::string_view document) {
  const auto doc = json_util::parse(document);
  const auto& frames = json_util::member(doc, "frames");
  if (!frames.is_array() || frames.empty()) {
    throw Error(ErrorCode::MalformedDocument, "frames must be a non-empty array");
  }
  Trajectory traj;
  for (const auto& jf : frames) {
    Trajectory::Frame f{json_util::scalar_from(json_util::member(jf, "t")),
                        json_util::ring_from(json_util::member(jf, "vertices"))};
    if (!traj.frames.empty()) {
      if (f.t <= traj.frames.back().t) throw Error(ErrorCode::MalformedDocument, "frame times must increase");
      if (f.vertices.size() != traj.frames.back().vertices.size()) {
        throw Error(ErrorCode::MalformedDocument, "frames must have the same vertex count");
      }
    }
    traj.frames.push_back(std::move(f));
  }
  if (traj.frames.front().t != Scalar(0) || traj.frames.back().t != Scalar(1)) {
    throw Error(ErrorCode::MalformedDocument, "frame times must run from 0 to 1");
  }
  return traj;
}

}  // namespace deflate
