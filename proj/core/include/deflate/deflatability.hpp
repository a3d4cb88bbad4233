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
#include <vector>

#include "deflate/dual.hpp"
#include "deflate/polygon.hpp"
#include "deflate/triangulation.hpp"
#include "deflate/visibility.hpp"

namespace deflate {

/// A triangulation of P with its directed dual, every undirected
/// non-terminal edge completed one way.
struct CandidateDual {
  int triangulation = 0;
  /// Edges that were undirected in direct_dual, with the direction chosen.
  std::vector<std::pair<int, Direction>> completion;
  DualTree dual;
};

/// Per triangulation (lexicographic order), 2^k completions in binary
/// counting order over the undirected edges (bit clear = AtoB).
std::vector<CandidateDual> enumerate_candidate_duals(const Polygon& poly,
                                                     const std::vector<Triangulation>& tris);
std::vector<CandidateDual> enumerate_candidate_duals(const Polygon& poly);

struct CompatibilityResult {
  bool ok = true;
  /// Set on failure: the dual makes (vertex, edge) visible although P does
  /// not (or the vertex pair, when `vertex_vertex`).
  int vertex = -1;
  int edge = -1;
  bool vertex_vertex = false;
};

/// Compares the visibilities a fully directed, illegal-path-free candidate
/// dual forces against P's own. `geometric` may carry P's precomputed
/// visibility graph.
CompatibilityResult check_compatibility(const Polygon& poly, const DualTree& candidate,
                                        const VisibilityGraph* geometric = nullptr);

enum class CertificateKind { NonDeflatable, CompatibleFound };

struct CandidateVerdict {
  enum class Kind { IllegalPath, VisibilityExcess, Compatible };
  Kind kind = Kind::Compatible;
  int triangulation = 0;
  std::vector<std::pair<int, Direction>> completion;
  std::vector<int> path;
  int vertex = -1;
  int edge = -1;
  bool vertex_vertex = false;
};

struct Certificate {
  CertificateKind kind = CertificateKind::NonDeflatable;
  Polygon polygon;
  std::vector<Triangulation> triangulations;
  std::vector<CandidateVerdict> verdicts;
  /// Index into `verdicts` of the first compatible candidate.
  std::optional<int> witness;
  std::optional<DualTree> witness_dual;
  /// realize() applied to the witness dual.
  std::optional<Polygon> realized;
};

/// Exhaustive compatible-directed-dual search. Throws NotGeneralPosition.
/// Candidates are checked in parallel (DEFLATE_KIT_THREADS caps the worker
/// count) and merged in enumeration order.
Certificate certify(const Polygon& poly);

std::string to_string(CertificateKind kind);
std::string serialize_certificate(const Certificate& cert);

}  // namespace deflate
