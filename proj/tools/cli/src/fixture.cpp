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


#include "deflate_cli/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "deflate/deflatability.hpp"
#include "deflate/dual.hpp"
#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/visibility.hpp"

namespace deflate::cli {
namespace {

using nlohmann::json;

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Point> raw_ring(const json& doc) {
  std::vector<Point> ring;
  const auto it = doc.find("vertices");
  if (it == doc.end() || !it->is_array()) {
    throw Error(ErrorCode::MalformedDocument, "missing vertices array");
  }
  for (const auto& v : *it) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
      throw Error(ErrorCode::MalformedDocument, "vertex must be a pair of strings");
    }
    ring.push_back({Scalar::parse(v[0].get<std::string>()), Scalar::parse(v[1].get<std::string>())});
  }
  return ring;
}

int map_vertex(int i, int r, bool flip, int n) { return flip ? ((r - i) % n + n) % n : (i + r) % n; }

std::vector<EdgeKey> map_pairs(const std::vector<EdgeKey>& pairs, int r, bool flip, int n) {
  std::vector<EdgeKey> out;
  for (auto [u, v] : pairs) out.push_back(edge_key(map_vertex(u, r, flip, n), map_vertex(v, r, flip, n)));
  std::sort(out.begin(), out.end());
  return out;
}

// Orbits of the triangulations under the boundary symmetries that fix the
// vertex visibility graph.
int triangulation_orbits(const Polygon& poly, const std::vector<Triangulation>& tris) {
  const int n = poly.size();
  const auto vv = vertex_visibility_graph(poly).vv_pairs();
  std::set<std::vector<EdgeKey>> keys;
  for (const auto& t : tris) {
    std::vector<EdgeKey> best = t.diagonals;
    for (int flip = 0; flip < 2; ++flip) {
      for (int r = 0; r < n; ++r) {
        if (map_pairs(vv, r, flip != 0, n) != vv) continue;
        best = std::min(best, map_pairs(t.diagonals, r, flip != 0, n));
      }
    }
    keys.insert(best);
  }
  return static_cast<int>(keys.size());
}

// A single value when every entry agrees, the whole list otherwise.
json collapse(const std::vector<int>& values) {
  if (!values.empty() && std::all_of(values.begin(), values.end(), [&](int v) { return v == values[0]; })) {
    return values[0];
  }
  return values;
}

json labels_of(const DualTree& dual, const std::vector<int>& path) {
  json out = json::array();
  for (int x : path) {
    const auto& label = dual.node(x).label;
    out.push_back(label.empty() ? json(x) : json(label));
  }
  return out;
}

std::optional<int> node_by_label(const DualTree& dual, const std::string& label) {
  for (int x = 0; x < dual.node_count(); ++x) {
    if (dual.node(x).label == label) return x;
  }
  return std::nullopt;
}

class Verifier {
 public:
  Verifier(const json& doc, std::filesystem::path dir) : doc_(doc), dir_(std::move(dir)) {}

  FixtureReport run() {
    report_.name = doc_.value("name", std::string());
    const auto it = doc_.find("expect");
    if (it == doc_.end()) return report_;
    if (!it->is_object()) throw Error(ErrorCode::MalformedDocument, "expect must be an object");
    const bool is_dual = doc_.contains("nodes");
    for (const auto& [key, expected] : it->items()) {
      json actual;
      try {
        actual = is_dual ? dual_property(key, expected) : polygon_property(key, expected);
      } catch (const Error& e) {
        actual = std::string("error: ") + e.what();
      }
      report_.checks.push_back({key, actual == expected, expected.dump(), actual.dump()});
    }
    return report_;
  }

 private:
  const Polygon& polygon() {
    if (!polygon_) polygon_ = Polygon(raw_ring(doc_));
    return *polygon_;
  }

  const DualTree& dual() {
    if (!dual_) dual_ = parse_dual(doc_.dump());
    return *dual_;
  }

  const Certificate& certificate() {
    if (!cert_) cert_ = certify(polygon());
    return *cert_;
  }

  std::vector<int> legal_verdicts() {
    std::vector<int> out;
    const auto& verdicts = certificate().verdicts;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (verdicts[i].kind != CandidateVerdict::Kind::IllegalPath) out.push_back(static_cast<int>(i));
    }
    return out;
  }

  json polygon_property(const std::string& key, const json& expected) {
    if (key == "simple") {
      try {
        polygon();
        return true;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotSimple) return false;
        throw;
      }
    }
    if (key == "counter_clockwise") return signed_area2(raw_ring(doc_)).sign() > 0;
    if (key == "general_position") return is_general_position(polygon()).general_position;
    if (key == "deflated") return is_deflated(polygon()).deflated;
    if (key == "triangulations") return enumerate_triangulations(polygon()).size();
    if (key == "triangulations_up_to_symmetry") {
      return triangulation_orbits(polygon(), enumerate_triangulations(polygon()));
    }
    if (key == "undirected_edges_per_triangulation") {
      std::vector<int> counts;
      for (const auto& t : enumerate_triangulations(polygon())) {
        counts.push_back(static_cast<int>(direct_dual(polygon(), t).undirected_inner_edges().size()));
      }
      return collapse(counts);
    }
    if (key == "legal_candidates_per_triangulation") {
      std::vector<int> counts(certificate().triangulations.size(), 0);
      for (int i : legal_verdicts()) ++counts[static_cast<std::size_t>(certificate().verdicts[static_cast<std::size_t>(i)].triangulation)];
      return collapse(counts);
    }
    if (key == "legal_candidates_rejected_by") {
      std::set<std::string> reasons;
      for (int i : legal_verdicts()) {
        const auto& v = certificate().verdicts[static_cast<std::size_t>(i)];
        if (v.kind == CandidateVerdict::Kind::Compatible) {
          reasons.insert("none");
        } else {
          reasons.insert(v.vertex_vertex ? "vertex-vertex" : "vertex-edge");
        }
      }
      if (reasons.size() == 1) return *reasons.begin();
      return json(std::vector<std::string>(reasons.begin(), reasons.end()));
    }
    if (key == "legal_candidates_realize") {
      const auto candidates = enumerate_candidate_duals(polygon(), certificate().triangulations);
      for (int i : legal_verdicts()) {
        const DualTree& cand = candidates[static_cast<std::size_t>(i)].dual;
        const Polygon realized = realize(cand);
        if (!is_deflated(realized).deflated || !plane_isomorphic(deflated_dual(realized), cand)) return false;
      }
      return true;
    }
    if (key == "certificate") return to_string(certificate().kind);
    if (key == "certificate_triangulations") {
      std::set<int> seen;
      for (const auto& v : certificate().verdicts) seen.insert(v.triangulation);
      return seen.size();
    }
    if (key == "same_vv_as") {
      if (!expected.is_string()) return "expected a file name";
      const Polygon other(raw_ring(json::parse(read_text(dir_ / expected.get<std::string>()))));
      if (other.size() != polygon().size()) return "vertex counts differ";
      const bool same = same_vertex_visibility(vertex_visibility_graph(polygon()).vv_pairs(),
                                               vertex_visibility_graph(other).vv_pairs(), polygon().size());
      return same ? expected : json("different vertex visibilities");
    }
    if (key == "directed_dual") {
      if (!expected.is_string()) return "expected a file name";
      const DualTree other = parse_dual(read_text(dir_ / expected.get<std::string>()));
      return plane_isomorphic(deflated_dual(polygon()), other) ? expected : json("not plane-isomorphic");
    }
    if (key == "induced_sequence") {
      const auto tris = enumerate_triangulations(polygon());
      if (tris.size() != 1) return "polygon has several triangulations";
      const int u = expected.at("vertex").get<int>();
      const auto entry = expected.at("entry").get<std::pair<int, int>>();
      const auto seq = induced_sequence(polygon(), tris[0], u, entry);
      json chain = json::array();
      for (auto [a, b] : seq.chain) chain.push_back({a, b});
      return {{"vertex", u}, {"entry", {entry.first, entry.second}}, {"chain", chain}};
    }
    return "unknown property";
  }

  json dual_property(const std::string& key, const json& expected) {
    if (key == "illegal_path") {
      const auto path = find_illegal_path(dual());
      return path ? labels_of(dual(), *path) : json(nullptr);
    }
    if (key == "realizable") {
      try {
        const Polygon realized = realize(dual());
        return is_deflated(realized).deflated && plane_isomorphic(deflated_dual(realized), dual());
      } catch (const Error& e) {
        if (e.code() == ErrorCode::IllegalPath || e.code() == ErrorCode::UndirectedNonTerminalEdge) return false;
        throw;
      }
    }
    if (key == "visibility_path") {
      const auto from = expected.at("from").get<std::vector<std::string>>();
      if (from.size() != 2) return "from needs two labels";
      const auto a = node_by_label(dual(), from[0]);
      const auto b = node_by_label(dual(), from[1]);
      if (!a || !b) return "unknown label";
      return {{"from", from}, {"labels", labels_of(dual(), trace_visibility_path(dual(), *a, *b))}};
    }
    if (key == "maximal_outer_paths") {
      json out = json::array();
      for (const auto& path : maximal_outer_paths(dual())) out.push_back(labels_of(dual(), path));
      return out;
    }
    return "unknown property";
  }

  const json& doc_;
  std::filesystem::path dir_;
  FixtureReport report_;
  std::optional<Polygon> polygon_;
  std::optional<DualTree> dual_;
  std::optional<Certificate> cert_;
};

}  // namespace

bool FixtureReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const FixtureCheck& c) { return c.ok; });
}

FixtureReport verify_fixture(const json& doc, const std::filesystem::path& dir) {
  return Verifier(doc, dir).run();
}

FixtureReport verify_fixture_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  FixtureReport report = verify_fixture(doc, path.parent_path());
  if (report.name.empty()) report.name = path.stem().string();
  return report;
}

bool same_vertex_visibility(const std::vector<std::pair<int, int>>& a,
                            const std::vector<std::pair<int, int>>& b, int n) {
  std::vector<EdgeKey> target = b;
  std::sort(target.begin(), target.end());
  for (int flip = 0; flip < 2; ++flip) {
    for (int r = 0; r < n; ++r) {
      if (map_pairs(a, r, flip != 0, n) == target) return true;
    }
  }
  return false;
}

}  // namespace deflate::cli
