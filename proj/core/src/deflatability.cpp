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


#include "deflate/deflatability.hpp"

#include <cstdint>

#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "json_util.hpp"
#include "parallel.hpp"

namespace deflate {
namespace {

std::string direction_text(Direction d) {
  switch (d) {
    case Direction::AtoB: return "ab";
    case Direction::BtoA: return "ba";
    case Direction::None: break;
  }
  return "none";
}

std::string verdict_text(CandidateVerdict::Kind k) {
  switch (k) {
    case CandidateVerdict::Kind::IllegalPath: return "illegal-path";
    case CandidateVerdict::Kind::VisibilityExcess: return "visibility-excess";
    case CandidateVerdict::Kind::Compatible: break;
  }
  return "compatible";
}

}  // namespace

std::vector<CandidateDual> enumerate_candidate_duals(const Polygon& poly,
                                                     const std::vector<Triangulation>& tris) {
  std::vector<CandidateDual> out;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const DualTree base = direct_dual(poly, tris[t]);
    const std::vector<int> open = base.undirected_inner_edges();
    if (open.size() > 20) {
      throw Error(ErrorCode::InvalidArgument, "too many undirected edges to enumerate");
    }
    const std::uint32_t total = 1u << open.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      CandidateDual c{static_cast<int>(t), {}, base};
      for (std::size_t j = 0; j < open.size(); ++j) {
        const Direction d = ((mask >> j) & 1u) ? Direction::BtoA : Direction::AtoB;
        c.dual.set_direction(open[j], d);
        c.completion.emplace_back(open[j], d);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CandidateDual> enumerate_candidate_duals(const Polygon& poly) {
  return enumerate_candidate_duals(poly, enumerate_triangulations(poly));
}

CompatibilityResult check_compatibility(const Polygon& poly, const DualTree& candidate,
                                        const VisibilityGraph* geometric) {
  std::optional<VisibilityGraph> own;
  if (geometric == nullptr) {
    own = visibility_graph(poly);
    geometric = &*own;
  }
  const int n = poly.size();
  for (int u = 0; u < n; ++u) {
    for (int g = 0; g < n; ++g) {
      if (dual_vertex_edge_visible(candidate, u, g) && !geometric->sees_edge(u, g)) {
        return {false, u, g, false};
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (dual_vertex_vertex_visible(candidate, u, v) && !geometric->sees(u, v)) {
        return {false, u, v, true};
      }
    }
  }
  return {};
}

Certificate certify(const Polygon& poly) {
  if (auto gp = is_general_position(poly); !gp.general_position) {
    std::vector<int> detail;
    if (gp.witness) detail = {gp.witness->u, gp.witness->v};
    throw Error(ErrorCode::NotGeneralPosition, "polygon is not in general position", detail);
  }
  Certificate cert{CertificateKind::NonDeflatable, poly, enumerate_triangulations(poly), {},
                   std::nullopt, std::nullopt, std::nullopt};
  const std::vector<CandidateDual> candidates = enumerate_candidate_duals(poly, cert.triangulations);
  const VisibilityGraph geometric = visibility_graph(poly);

  cert.verdicts.resize(candidates.size());
  parallel::for_each_index(candidates.size(), [&](std::size_t i) {
    const CandidateDual& c = candidates[i];
    CandidateVerdict v;
    v.triangulation = c.triangulation;
    v.completion = c.completion;
    if (auto path = find_illegal_path(c.dual)) {
      v.kind = CandidateVerdict::Kind::IllegalPath;
      v.path = *path;
    } else if (auto res = check_compatibility(poly, c.dual, &geometric); !res.ok) {
      v.kind = CandidateVerdict::Kind::VisibilityExcess;
      v.vertex = res.vertex;
      v.edge = res.edge;
      v.vertex_vertex = res.vertex_vertex;
    }
    cert.verdicts[i] = std::move(v);
  });

  for (std::size_t i = 0; i < cert.verdicts.size(); ++i) {
    if (cert.verdicts[i].kind != CandidateVerdict::Kind::Compatible) continue;
    cert.kind = CertificateKind::CompatibleFound;
    cert.witness = static_cast<int>(i);
    cert.witness_dual = candidates[i].dual;
    cert.realized = realize(candidates[i].dual);
    break;
  }
  return cert;
}

std::string to_string(CertificateKind kind) {
  return kind == CertificateKind::CompatibleFound ? "CompatibleFound" : "NonDeflatable";
}

std::string serialize_certificate(const Certificate& cert) {
  using json_util::json;
  json doc;
  doc["kind"] = to_string(cert.kind);
  doc["polygon"] = {{"vertices", json_util::ring_to(cert.polygon.vertices())}};
  json tris = json::array();
  for (const auto& t : cert.triangulations) {
    json diags = json::array();
    for (const auto& [a, b] : t.diagonals) diags.push_back({a, b});
    tris.push_back({{"diagonals", diags}});
  }
  doc["triangulations"] = tris;
  json verdicts = json::array();
  for (const auto& v : cert.verdicts) {
    json entry{{"triangulation", v.triangulation}, {"verdict", verdict_text(v.kind)}};
    json completion = json::array();
    for (const auto& [e, d] : v.completion) completion.push_back({e, direction_text(d)});
    entry["completion"] = completion;
    if (v.kind == CandidateVerdict::Kind::IllegalPath) entry["path"] = v.path;
    if (v.kind == CandidateVerdict::Kind::VisibilityExcess) {
      entry["relation"] = v.vertex_vertex ? "vv" : "ve";
      entry["vertex"] = v.vertex;
      entry[v.vertex_vertex ? "other_vertex" : "edge"] = v.edge;
    }
    verdicts.push_back(entry);
  }
  doc["candidates"] = verdicts;
  doc["witness"] = cert.witness ? json(*cert.witness) : json(nullptr);
  if (cert.witness_dual) doc["witness_dual"] = json_util::parse(serialize_dual(*cert.witness_dual));
  if (cert.realized) doc["realized"] = {{"vertices", json_util::ring_to(cert.realized->vertices())}};
  return json_util::dump(doc);
}

}  // namespace deflate
