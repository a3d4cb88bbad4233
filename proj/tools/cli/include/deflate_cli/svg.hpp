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

#include "deflate/deform.hpp"
#include "deflate/dual.hpp"
#include "deflate/polygon.hpp"
#include "deflate/triangulation.hpp"

namespace deflate::cli {

struct SvgOptions {
  /// Diagonals drawn dashed.
  std::optional<Triangulation> triangulation;
  /// Segments between visible non-adjacent vertices; crossing ones in red.
  bool show_vv = false;
  bool vertex_labels = true;
};

// Coordinates are printed with six decimals. The output is for display only.
std::string render_svg(const Polygon& poly, const SvgOptions& options = {});
/// Triangle nodes as disks, terminals as tees, directed edges with arrows.
std::string render_svg(const DualTree& dual);
/// Every frame outlined; the first and last solid, the rest faded.
std::string render_svg(const Trajectory& traj);

std::string format_fixed(double value);

}  // namespace deflate::cli
