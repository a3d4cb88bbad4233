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


// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "deflate/deflatability.hpp"
#include "deflate/deform.hpp"
#include "deflate/dual.hpp"
#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/smallpoly.hpp"
#include "deflate/visibility.hpp"
#include "deflate_cli/fixture.hpp"
#include "test_support.hpp"

namespace {

using namespace deflate;

// Pinned limits.
constexpr double kFig8Seconds = 5.0;
constexpr double kHeptNonSeconds = 30.0;
constexpr double kHexSeconds = 600.0;
constexpr int kCorpusSize = 500;
constexpr int kDeformPairs = 100;
constexpr int kDoublingCap = 1024;
constexpr int kMaxTriangleNodes = 6;
constexpr std::uint64_t kCorpusSeed = 20260417;
constexpr std::uint64_t kDeformSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
  // JSON documents produced along the way, compared by criterion 10.
  std::string transcript;
};

Polygon fixture_polygon(const std::string& name) { return parse_polygon(testing::fixture(name)); }
DualTree fixture_dual(const std::string& name) { return parse_dual(testing::fixture(name)); }

bool fixture_holds(const std::string& name, std::string& why) {
  const auto report = cli::verify_fixture_file(testing::fixture_path(name));
  for (const auto& c : report.checks) {
    if (!c.ok) {
      why = name + " " + c.property + " expected " + c.expected + " got " + c.actual;
      return false;
    }
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Every candidate of every triangulation appears in the rejection list.
bool exhaustive(const Certificate& cert) {
  std::size_t expected = 0;
  for (const auto& t : cert.triangulations) {
    expected += std::size_t{1} << direct_dual(cert.polygon, t).undirected_inner_edges().size();
  }
  return cert.verdicts.size() == expected;
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  if (!fixture_holds("fig8.json", why)) return {false, why, ""};
  const Certificate cert = certify(fixture_polygon("fig8.json"));
  const double t = seconds_since(start);
  o.transcript = serialize_certificate(cert);
  int survivors = 0;
  bool rejected_ve = true;
  for (const auto& v : cert.verdicts) {
    if (v.kind == CandidateVerdict::Kind::IllegalPath) continue;
    ++survivors;
    rejected_ve &= v.kind == CandidateVerdict::Kind::VisibilityExcess && !v.vertex_vertex;
  }
  o.pass = cert.kind == CertificateKind::NonDeflatable && exhaustive(cert) && rejected_ve &&
           survivors == static_cast<int>(cert.triangulations.size()) && t < kFig8Seconds;
  o.detail = to_string(cert.kind) + ", " + std::to_string(cert.verdicts.size()) + " candidates, " +
             std::to_string(survivors) + " illegal-path-free, all rejected by vertex-edge excess, " + fmt_seconds(t) +
             " (limit " + fmt_seconds(kFig8Seconds) + ")";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  if (!fixture_holds("fig9.json", why) || !fixture_holds("fig10.json", why)) return {false, why, ""};
  const Certificate hept = certify(fixture_polygon("fig9.json"));
  const Certificate non = certify(fixture_polygon("fig10.json"));
  const double t = seconds_since(start);
  o.transcript = serialize_certificate(hept) + serialize_certificate(non);
  std::set<int> spanned;
  for (const auto& v : non.verdicts) spanned.insert(v.triangulation);
  o.pass = hept.kind == CertificateKind::NonDeflatable && non.kind == CertificateKind::NonDeflatable &&
           exhaustive(hept) && exhaustive(non) && spanned.size() == 2 && t < kHeptNonSeconds;
  o.detail = "heptagon " + to_string(hept.kind) + ", nonagon " + to_string(non.kind) + " over " +
             std::to_string(spanned.size()) + " triangulations, " + fmt_seconds(t) + " (limit " +
             fmt_seconds(kHeptNonSeconds) + ")";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::string why;
  if (!fixture_holds("fig11.json", why)) return {false, why, ""};
  const Polygon a = fixture_polygon("fig8.json");
  const Polygon b = fixture_polygon("fig11.json");
  const bool same_vv = a.size() == b.size() &&
                       cli::same_vertex_visibility(vertex_visibility_graph(a).vv_pairs(),
                                                   vertex_visibility_graph(b).vv_pairs(), a.size());
  const Certificate ca = certify(a);
  const Certificate cb = certify(b);
  o.transcript = serialize_certificate(cb);
  o.pass = same_vv && ca.kind == CertificateKind::NonDeflatable && cb.kind == CertificateKind::CompatibleFound &&
           cb.realized && is_deflated(*cb.realized).deflated;
  o.detail = std::string("vv ") + (same_vv ? "identical" : "different") + ", fig8 " + to_string(ca.kind) +
             ", fig11 " + to_string(cb.kind);
  return o;
}

std::vector<std::string> labels(const DualTree& d, const std::vector<int>& path) {
  std::vector<std::string> out;
  for (int x : path) out.push_back(d.node(x).label);
  return out;
}

int by_label(const DualTree& d, const std::string& label) {
  for (int x = 0; x < d.node_count(); ++x) {
    if (d.node(x).label == label) return x;
  }
  return -1;
}

Outcome criterion4() {
  Outcome o;
  const DualTree fig4 = fixture_dual("fig4-dual.json");
  const auto trace = labels(fig4, trace_visibility_path(fig4, by_label(fig4, "a"), by_label(fig4, "b")));
  const std::vector<std::string> want_trace{"a", "b", "c", "d", "h"};
  const DualTree fig6 = fixture_dual("fig6-tree.json");
  std::vector<std::vector<std::string>> outer;
  for (const auto& p : maximal_outer_paths(fig6)) outer.push_back(labels(fig6, p));
  const std::vector<std::vector<std::string>> want_outer{
      {"t7", "n5", "n1", "n2", "t1"}, {"t1", "n2", "n3", "t2"}, {"t2", "n3", "t3"},
      {"t3", "n3", "n2", "n1", "n4", "t4"}, {"t4", "n4", "t5"}, {"t5", "n4", "n1", "n5", "t6"},
      {"t6", "n5", "t7"}};
  for (const auto& s : trace) o.transcript += s + " ";
  o.pass = trace == want_trace && outer == want_outer;
  o.detail = std::string("fig4 trace ") + (trace == want_trace ? "(a,b,c,d,h)" : "differs") + ", fig6 " +
             std::to_string(outer.size()) + " outer paths " + (outer == want_outer ? "as listed" : "differ");
  return o;
}

const std::vector<testing::DeflatedSample>& corpus() {
  static const auto samples = testing::deflated_corpus(kCorpusSeed, kCorpusSize, 5, 10);
  return samples;
}

Outcome criterion5() {
  Outcome o;
  long discrepancies = 0;
  long compared = 0;
  for (const auto& s : corpus()) {
    o.transcript += serialize_polygon(s.polygon);
    const auto g = visibility_graph(s.polygon);
    const int n = s.polygon.size();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++compared) discrepancies += dual_vertex_vertex_visible(s.dual, u, v) != g.sees(u, v);
      for (int e = 0; e < n; ++e, ++compared) discrepancies += dual_vertex_edge_visible(s.dual, u, e) != g.sees_edge(u, e);
    }
  }
  o.pass = discrepancies == 0 && static_cast<int>(corpus().size()) >= kCorpusSize;
  o.detail = std::to_string(corpus().size()) + " polygons, " + std::to_string(compared) + " relations, " +
             std::to_string(discrepancies) + " discrepancies";
  return o;
}

Outcome criterion6() {
  Outcome o;
  long legal = 0;
  long illegal = 0;
  long failures = 0;
  std::string first_failure;
  for (int n = 3; n <= kMaxTriangleNodes + 2; ++n) {
    for (const auto& tri : enumerate_triangulations(testing::convex_polygon(n))) {
      const DualTree base = build_dual(tri);
      const auto open = base.undirected_inner_edges();
      for (std::uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
        DualTree d = base;
        for (std::size_t k = 0; k < open.size(); ++k) {
          d.set_direction(open[k], (mask >> k) & 1u ? Direction::BtoA : Direction::AtoB);
        }
        const bool has_illegal = find_illegal_path(d).has_value();
        bool ok = false;
        try {
          const Polygon p = realize(d);
          ok = !has_illegal && is_deflated(p).deflated &&
               plane_isomorphic(direct_dual(p, enumerate_triangulations(p).at(0)), d);
          if (ok) o.transcript += serialize_polygon(p);
        } catch (const Error& e) {
          ok = has_illegal && e.code() == ErrorCode::IllegalPath;
        }
        (has_illegal ? illegal : legal) += 1;
        if (!ok) {
          if (failures == 0) first_failure = serialize_dual(d);
          ++failures;
        }
      }
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(legal) + " legal duals realized and round-tripped, " + std::to_string(illegal) +
             " with an illegal path rejected, " + std::to_string(failures) + " failures";
  if (failures) std::cerr << "criterion 6 first failure:\n" << first_failure;
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(kDeformSeed);
  int pairs = 0;
  int failures = 0;
  int finest = 0;
  std::string first;
  while (pairs < kDeformPairs) {
    const DualTree d = testing::random_directed_dual(rng, 4 + static_cast<int>(rng() % 6));
    RealizeOptions ra;
    RealizeOptions rb;
    ra.jitter_seed = rng() | 1u;
    rb.jitter_seed = rng() | 1u;
    const Polygon a = realize(d, ra);
    const Polygon b = realize(d, rb);
    ++pairs;
    std::string why;
    try {
      const RefinedDeformation refined = deform_refined(a, b, kDoublingCap);
      finest = std::max(finest, refined.frames_per_phase);
      if (!refined.report.ok) {
        why = "violation at " + std::to_string(refined.frames_per_phase) + " frames per phase";
      } else {
        const FrameAudit audit = audit_frames(refined.trajectory, deflated_dual(a));
        if (!audit.ok) why = "frame " + std::to_string(*audit.first_bad_frame) + ": " + audit.reason;
      }
      o.transcript += std::to_string(refined.frames_per_phase) + serialize_trajectory(refined.trajectory);
    } catch (const Error& e) {
      why = e.what();
    }
    if (!why.empty()) {
      if (failures == 0) first = why;
      ++failures;
    }
  }
  o.pass = failures == 0;
  o.detail = std::to_string(pairs) + " same-dual pairs, finest sampling " + std::to_string(finest) +
             " frames per phase (cap " + std::to_string(kDoublingCap) + "), " + std::to_string(failures) +
             " failures" + (first.empty() ? "" : " (" + first + ")");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto types = enumerate_order_types(6);
  int bad = 0;
  std::string counts;
  for (int n : {4, 5, 6}) {
    const HexlabReport report = run_hexlab(n);
    o.transcript += serialize_hexlab(report);
    for (const auto& e : report.polygons) bad += e.classification.kind == SmallClass::NoCompatibleDual;
    counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
              std::to_string(report.polygons.size()) + " polygons";
  }
  const double t = seconds_since(start);
  o.pass = types.classes.size() == 16 && bad == 0 && t < kHexSeconds;
  o.detail = std::to_string(types.classes.size()) + " order types of 6 points; " + counts + "; " +
             std::to_string(bad) + " without a compatible dual; " + fmt_seconds(t) + " (limit " +
             fmt_seconds(kHexSeconds) + ")";
  return o;
}

Outcome criterion9() {
  Outcome o;
  long ears = 0;
  long ear_failures = 0;
  long pairs = 0;
  long pair_failures = 0;
  for (const auto& s : corpus()) {
    const auto tri = enumerate_triangulations(s.polygon).at(0);
    for (const auto& ear : find_ears(tri)) {
      ++ears;
      ear_failures += !is_deflated(remove_ear(s.polygon, tri, ear).polygon).deflated;
    }
    for (const auto& t : tri.triangles) {
      for (int k = 0; k < 3; ++k) {
        const int a = t[static_cast<std::size_t>((k + 1) % 3)];
        const int b = t[static_cast<std::size_t>((k + 2) % 3)];
        if (!tri.is_diagonal(a, b)) continue;
        ++pairs;
        const Segment through{s.polygon.vertex(a), s.polygon.vertex(b)};
        pair_failures += edges_seen_through(s.polygon, t[static_cast<std::size_t>(k)], through).size() != 1;
      }
    }
  }
  o.pass = ear_failures == 0 && pair_failures == 0;
  o.detail = std::to_string(ears) + " ear removals (" + std::to_string(ear_failures) + " not deflated), " +
             std::to_string(pairs) + " vertex-diagonal pairs (" + std::to_string(pair_failures) +
             " not seeing exactly one edge)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fig8 polygon is not deflatable", criterion1},
      {"heptagon and nonagon are not deflatable", criterion2},
      {"vertex visibility does not determine deflatability", criterion3},
      {"figure combinatorics", criterion4},
      {"dual determines visibility", criterion5},
      {"realization round trip", criterion6},
      {"same-dual deformation", criterion7},
      {"small polygon exhaustion", criterion8},
      {"ear removal and unique edge through a diagonal", criterion9},
  };
  int failed = 0;
  std::vector<std::string> transcripts;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), ""};
    }
    transcripts.push_back(o.transcript);
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << ": "
              << o.detail << std::endl;
  }

  // Criterion 10: a second run of 1-8 on a single worker thread must
  // reproduce every document byte for byte.
  setenv("DEFLATE_KIT_THREADS", "1", 1);
  int differing = 0;
  std::string which;
  for (std::size_t i = 0; i < 8; ++i) {
    std::string again;
    try {
      again = criteria[i].second().transcript;
    } catch (const std::exception& e) {
      again = e.what();
    }
    if (again != transcripts[i] || transcripts[i].empty()) {
      ++differing;
      which += " " + std::to_string(i + 1);
    }
  }
  const bool pass10 = differing == 0;
  failed += !pass10;
  std::cout << "criterion 10 " << (pass10 ? "PASS" : "FAIL") << ": determinism: criteria 1-8 rerun, "
            << (pass10 ? std::string("all outputs byte-identical") : "differences in" + which) << std::endl;
  return failed;
}
