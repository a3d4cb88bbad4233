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


#include "deflate/smallpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "deflate/deflatability.hpp"
#include "deflate/error.hpp"
#include "deflate/visibility.hpp"
#include "json_util.hpp"
#include "parallel.hpp"

namespace deflate {
namespace {

struct GridPoint {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

int orient_sign(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  return sign_of((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x));
}

int orient_sign(const Point& p, const Point& q, const Point& r) {
  switch (orient(p, q, r)) {
    case Turn::Left: return 1;
    case Turn::Right: return -1;
    case Turn::Collinear: break;
  }
  return 0;
}

GridPoint mirrored(const GridPoint& p) { return {-p.x, p.y}; }
Point mirrored(const Point& p) { return {-p.x, p.y}; }

// Signature of the labelling that starts at hull vertex h and continues in
// angular order around it; empty when h is not a hull vertex.
template <class P>
std::string labelled_signature(const std::vector<P>& pts, std::size_t h) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != h) others.push_back(i);
  }
  auto all_left_of = [&](std::size_t q) {
    return std::all_of(others.begin(), others.end(),
                       [&](std::size_t r) { return r == q || orient_sign(pts[h], pts[q], pts[r]) > 0; });
  };
  if (std::none_of(others.begin(), others.end(), all_left_of)) return {};
  std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
    return orient_sign(pts[h], pts[a], pts[b]) > 0;
  });
  std::vector<std::size_t> label{h};
  label.insert(label.end(), others.begin(), others.end());
  std::string sig;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        sig.push_back(orient_sign(pts[label[i]], pts[label[j]], pts[label[k]]) > 0 ? '+' : '-');
      }
    }
  }
  return sig;
}

template <class P>
bool has_collinear_triple(const std::vector<P>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orient_sign(pts[i], pts[j], pts[k]) == 0) return true;
      }
    }
  }
  return false;
}

// Assumes general position.
template <class P>
std::string canonical_signature(const std::vector<P>& pts) {
  std::string best;
  std::vector<P> mirror;
  for (const auto& p : pts) mirror.push_back(mirrored(p));
  const std::vector<P>* sets[] = {&pts, &mirror};
  for (const auto* set : sets) {
    for (std::size_t h = 0; h < set->size(); ++h) {
      std::string sig = labelled_signature(*set, h);
      if (!sig.empty() && (best.empty() || sig < best)) best = std::move(sig);
    }
  }
  return best;
}

std::vector<GridPoint> normalized(std::vector<GridPoint> pts) {
  std::int64_t mx = pts[0].x;
  std::int64_t my = pts[0].y;
  for (const auto& p : pts) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  for (auto& p : pts) {
    p.x -= mx;
    p.y -= my;
  }
  return pts;
}

// Orientation classes of one size, each with a few realizations to extend.
struct Level {
  std::map<std::string, std::size_t> index;
  std::vector<std::string> signatures;
  std::vector<std::vector<std::vector<GridPoint>>> realizations;
};

constexpr std::size_t kRealizationsPerClass = 24;

void extend_one(const std::vector<GridPoint>& base, Level& to, std::int64_t grid) {
  // The base sits at the origin; every placement that keeps the extended set
  // inside a box of side `grid` is tried.
  std::int64_t wx = 0;
  std::int64_t wy = 0;
  for (const auto& q : base) {
    wx = std::max(wx, q.x);
    wy = std::max(wy, q.y);
  }
  // Points in the same cell of the arrangement of lines through base pairs
  // give the same order type; only the first point of each cell is kept.
  std::set<std::uint64_t> cells;
  for (std::int64_t x = wx - grid; x <= grid; ++x) {
    for (std::int64_t y = wy - grid; y <= grid; ++y) {
      const GridPoint p{x, y};
      std::uint64_t cell = 0;
      bool ok = true;
      for (std::size_t i = 0; ok && i < base.size(); ++i) {
        for (std::size_t j = i + 1; ok && j < base.size(); ++j) {
          const int o = orient_sign(base[i], base[j], p);
          ok = o != 0;
          cell = (cell << 1) | (o > 0 ? 1u : 0u);
        }
      }
      if (!ok || !cells.insert(cell).second) continue;
      std::vector<GridPoint> set = base;
      set.push_back(p);
      std::string sig = canonical_signature(set);
      auto [it, inserted] = to.index.emplace(sig, to.signatures.size());
      if (inserted) {
        to.signatures.push_back(std::move(sig));
        to.realizations.emplace_back();
      }
      auto& slot = to.realizations[it->second];
      if (slot.size() < kRealizationsPerClass) {
        set = normalized(std::move(set));
        if (std::find(slot.begin(), slot.end(), set) == slot.end()) slot.push_back(std::move(set));
      }
    }
  }
}

// Extends every stored realization, also blown up by powers of two so that
// its small cells contain grid points.
void extend(const Level& from, Level& to, std::int64_t grid) {
  for (const auto& family : from.realizations) {
    for (const auto& base : family) {
      std::int64_t width = 1;
      for (const auto& q : base) width = std::max({width, q.x, q.y});
      for (std::int64_t scale = 1; scale * width <= grid; scale *= 2) {
        std::vector<GridPoint> scaled = base;
        for (auto& q : scaled) {
          q.x *= scale;
          q.y *= scale;
        }
        extend_one(scaled, to, grid);
      }
    }
  }
}

std::string class_name(SmallClass kind) {
  switch (kind) {
    case SmallClass::Deflated: return "Deflated";
    case SmallClass::CompatibleDualExists: return "CompatibleDualExists";
    case SmallClass::NoCompatibleDual: break;
  }
  return "NoCompatibleDual";
}

}  // namespace

std::string order_type_signature(const std::vector<Point>& points) {
  if (points.size() < 3) throw Error(ErrorCode::InvalidArgument, "need at least three points");
  if (has_collinear_triple(points)) {
    throw Error(ErrorCode::InvalidArgument, "point set has a collinear triple");
  }
  return canonical_signature(points);
}

OrderTypeSearch enumerate_order_types(int n, int max_grid) {
  if (n < 3 || n > 6) throw Error(ErrorCode::InvalidArgument, "order types are enumerated for 3 <= n <= 6");
  std::vector<Level> levels(static_cast<std::size_t>(n + 1));
  {
    const std::vector<GridPoint> seed{{0, 0}, {1, 0}, {0, 1}};
    Level& three = levels[3];
    three.index.emplace(canonical_signature(seed), 0);
    three.signatures.push_back(canonical_signature(seed));
    three.realizations.push_back({seed});
  }

  OrderTypeSearch search;
  int unchanged = 0;
  std::size_t last = 0;
  for (int grid = 16; unchanged < 2; grid *= 2) {
    if (grid > max_grid) {
      throw Error(ErrorCode::GridExhausted, "order type search did not settle within the grid bound",
                  {grid / 2});
    }
    search.grids.push_back(grid);
    for (int k = 3; k < n; ++k) {
      extend(levels[static_cast<std::size_t>(k)], levels[static_cast<std::size_t>(k + 1)], grid);
    }
    const std::size_t count = levels[static_cast<std::size_t>(n)].signatures.size();
    if (search.grids.size() > 1 && count == last) {
      ++unchanged;
    } else {
      unchanged = 0;
    }
    last = count;
  }

  const Level& top = levels[static_cast<std::size_t>(n)];
  std::vector<std::size_t> order(top.signatures.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return top.signatures[a] < top.signatures[b]; });
  for (std::size_t c : order) {
    OrderType ot;
    for (const auto& p : top.realizations[c].front()) ot.points.push_back({Scalar(static_cast<long>(p.x)), Scalar(static_cast<long>(p.y))});
    ot.signature = top.signatures[c];
    search.classes.push_back(std::move(ot));
  }
  return search;
}

std::vector<Polygon> enumerate_simple_polygons(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<Polygon> out;
  if (n < 3) return out;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<Point> ring{points[0]};
    for (int i : rest) ring.push_back(points[static_cast<std::size_t>(i)]);
    if (find_self_intersection(ring)) continue;
    out.emplace_back(std::move(ring));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

SmallClassification classify_small(const Polygon& poly) {
  if (auto gp = is_general_position(poly); !gp.general_position) {
    std::vector<int> detail;
    if (gp.witness) detail = {gp.witness->u, gp.witness->v};
    throw Error(ErrorCode::NotGeneralPosition, "polygon is not in general position", detail);
  }
  SmallClassification out;
  out.reflex_count = static_cast<int>(reflex_vertices(poly).size());
  out.crossing_count = count_visibility_crossings(poly);
  if (is_deflated(poly).deflated) {
    out.kind = SmallClass::Deflated;
  } else if (certify(poly).kind == CertificateKind::CompatibleFound) {
    out.kind = SmallClass::CompatibleDualExists;
  } else {
    out.kind = SmallClass::NoCompatibleDual;
  }
  return out;
}

std::string to_string(SmallClass kind) { return class_name(kind); }

HexlabReport run_hexlab(int n) {
  const OrderTypeSearch search = enumerate_order_types(n);
  HexlabReport report;
  report.n = n;
  report.order_types = static_cast<int>(search.classes.size());
  for (std::size_t c = 0; c < search.classes.size(); ++c) {
    for (auto& poly : enumerate_simple_polygons(search.classes[c].points)) {
      report.polygons.push_back({static_cast<int>(c), std::move(poly), {}});
    }
  }
  parallel::for_each_index(report.polygons.size(), [&](std::size_t i) {
    report.polygons[i].classification = classify_small(report.polygons[i].polygon);
  });
  return report;
}

std::string serialize_hexlab(const HexlabReport& report) {
  using json_util::json;
  json doc;
  doc["n"] = report.n;
  doc["order_types"] = report.order_types;
  json polys = json::array();
  std::map<int, std::map<std::string, int>> groups;
  for (const auto& e : report.polygons) {
    const auto& c = e.classification;
    polys.push_back({{"order_type", e.order_type},
                     {"vertices", json_util::ring_to(e.polygon.vertices())},
                     {"class", class_name(c.kind)},
                     {"reflex", c.reflex_count},
                     {"crossings", c.crossing_count}});
    ++groups[c.reflex_count][class_name(c.kind)];
  }
  json group_list = json::array();
  for (const auto& [reflex, counts] : groups) {
    json g{{"reflex", reflex}};
    int total = 0;
    for (const auto& [name, count] : counts) {
      g[name] = count;
      total += count;
    }
    g["polygons"] = total;
    group_list.push_back(g);
  }
  doc["groups"] = group_list;
  doc["polygons"] = polys;
  return json_util::dump(doc);
}

}  // namespace deflate
