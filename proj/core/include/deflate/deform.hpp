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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deflate/dual.hpp"
#include "deflate/polygon.hpp"

namespace deflate {

/// Time-stamped frames; vertex i of every frame is the same moving vertex.
struct Trajectory {
  struct Frame {
    Scalar t;
    std::vector<Point> vertices;

    friend bool operator==(const Frame&, const Frame&) = default;
  };

  std::vector<Frame> frames;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct DeformOptions {
  /// Samples per linear motion phase (>= 1).
  int frames_per_phase = 16;
};

/// Monotonic deformation between two deflated polygons with the same
/// directed dual. The first frame is `from`; the last is `to` with its
/// vertices cyclically renumbered to match `from` under the dual
/// isomorphism. Throws NotDeflated, DualMismatch or RadiusSearchFailed.
Trajectory deform_same_dual(const Polygon& from, const Polygon& to,
                            const DeformOptions& options = {});

enum class MonotonicityMode { VV, VVandVE };

struct MonotonicityViolation {
  enum class Kind { VertexVertex, VertexEdge };
  Kind kind = Kind::VertexVertex;
  int earlier = 0;
  int later = 0;
  /// Vertex pair (u, v), or vertex u and edge v for VertexEdge.
  int u = 0;
  int v = 0;

  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

struct MonotonicityReport {
  bool ok = true;
  std::vector<MonotonicityViolation> violations;
};

/// Checks vv(later) within vv(earlier) for consecutive frames, and in VVandVE
/// mode ve(last) within ve(first). Every frame is re-verified: a non-simple
/// or clockwise frame throws NonSimpleFrame (detail = frame, edge, edge).
MonotonicityReport check_monotonic(const Trajectory& traj, MonotonicityMode mode);

struct FrameAudit {
  bool ok = true;
  /// First frame that is not deflated or whose directed dual differs.
  std::optional<int> first_bad_frame;
  std::string reason;
};

/// Every frame is deflated and its directed dual is plane-isomorphic to
/// `expected`.
FrameAudit audit_frames(const Trajectory& traj, const DualTree& expected);

struct RefinedDeformation {
  Trajectory trajectory;
  int frames_per_phase = 0;
  MonotonicityReport report;
};

/// Runs deform_same_dual at 16 frames per phase and doubles (up to `cap`)
/// while check_monotonic reports violations.
RefinedDeformation deform_refined(const Polygon& from, const Polygon& to, int cap = 1024);

/// {"frames":[{"t":"0","vertices":[["x","y"],...]}, ...]}
std::string serialize_trajectory(const Trajectory& traj);
Trajectory parse_trajectory(std::string_view document);

}  // namespace deflate
