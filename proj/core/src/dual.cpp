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

#include "deflate/dual.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "deflate/error.hpp"
#include "deflate/visibility.hpp"
#include "json_util.hpp"

namespace deflate {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

DualTree::DualTree(std::vector<DualNode> nodes, std::vector<DualEdge> edges,
                   std::vector<std::vector<int>> rotation)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const int n = node_count();
  if (rotation_.size() != nodes_.size()) {
    throw Error(ErrorCode::BadDegrees, "rotation must list every node");
  }
  if (edge_count() != n - 1) throw Error(ErrorCode::BadDegrees, "a tree has one edge fewer than nodes");
  if (std::none_of(nodes_.begin(), nodes_.end(), [](const DualNode& d) { return d.kind == NodeKind::Triangle; })) {
    throw Error(ErrorCode::BadDegrees, "a dual needs a triangle node");
  }
  std::vector<std::vector<int>> incident(at(n));
  for (int e = 0; e < edge_count(); ++e) {
    const auto& ed = edges_[at(e)];
    if (ed.a < 0 || ed.b < 0 || ed.a >= n || ed.b >= n || ed.a == ed.b) {
      throw Error(ErrorCode::BadDegrees, "edge endpoint out of range", {e});
    }
    incident[at(ed.a)].push_back(e);
    incident[at(ed.b)].push_back(e);
  }
  for (int x = 0; x < n; ++x) {
    const std::size_t want = is_triangle(x) ? 3 : 1;
    auto listed = rotation_[at(x)];
    auto actual = incident[at(x)];
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (actual.size() != want || listed != actual) {
      throw Error(ErrorCode::BadDegrees, "node degree or rotation is wrong", {x});
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    if (is_terminal_edge(e) && edge(e).dir != Direction::None) {
      throw Error(ErrorCode::BadDegrees, "terminal edges carry no direction", {e});
    }
  }
  std::vector<bool> seen(at(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int e : rotation_[at(x)]) {
      const int y = other_end(e, x);
      if (!seen[at(y)]) {
        seen[at(y)] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::BadDegrees, "dual is not connected");
}

std::vector<int> DualTree::neighbors(int x) const {
  std::vector<int> out;
  for (int e : rotation(x)) out.push_back(other_end(e, x));
  return out;
}

std::optional<int> DualTree::edge_between(int x, int y) const {
  for (int e : rotation(x)) {
    if (other_end(e, x) == y) return e;
  }
  return std::nullopt;
}

bool DualTree::points(int x, int y) const {
  const auto e = edge_between(x, y);
  if (!e) return false;
  const auto& ed = edge(*e);
  return (ed.a == x && ed.dir == Direction::AtoB) || (ed.b == x && ed.dir == Direction::BtoA);
}

void DualTree::set_direction(int e, Direction dir) {
  if (dir != Direction::None && is_terminal_edge(e)) {
    throw Error(ErrorCode::BadDegrees, "terminal edges carry no direction", {e});
  }
  edges_[at(e)].dir = dir;
}

void DualTree::direct(int x, int y) {
  const auto e = edge_between(x, y);
  if (!e) throw Error(ErrorCode::InvalidArgument, "nodes are not adjacent", {x, y});
  set_direction(*e, edge(*e).a == x ? Direction::AtoB : Direction::BtoA);
}

std::vector<int> DualTree::undirected_inner_edges() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (!is_terminal_edge(e) && edge(e).dir == Direction::None) out.push_back(e);
  }
  return out;
}

int DualTree::triangle_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [](const DualNode& d) { return d.kind == NodeKind::Triangle; }));
}

namespace {

// Successor of the dart x -> y on the outer walk: the edge after (y, x) in
// the rotation at y.
int walk_next(const DualTree& d, int x, int y) {
  const auto& rot = d.rotation(y);
  const int back = *d.edge_between(y, x);
  const auto it = std::find(rot.begin(), rot.end(), back);
  const auto pos = static_cast<std::size_t>(it - rot.begin());
  return d.other_end(rot[(pos + 1) % rot.size()], y);
}

// Outer walk starting at terminal t, as the node sequence up to (excluding)
// the return to t.
std::vector<int> outer_walk(const DualTree& d, int t) {
  std::vector<int> walk{t};
  int x = t;
  int y = d.neighbors(t).front();
  while (true) {
    walk.push_back(y);
    const int z = walk_next(d, x, y);
    x = y;
    y = z;
    if (x == t) break;
  }
  walk.pop_back();
  return walk;
}

int lowest_terminal(const DualTree& d) {
  for (int x = 0; x < d.node_count(); ++x) {
    if (d.is_terminal(x)) return x;
  }
  throw Error(ErrorCode::BadDegrees, "dual has no terminal");
}

}  // namespace

std::vector<int> DualTree::terminal_order() const {
  std::vector<int> order;
  for (int x : outer_walk(*this, lowest_terminal(*this))) {
    if (is_terminal(x)) order.push_back(x);
  }
  return order;
}

std::vector<int> DualTree::terminal_index() const {
  std::vector<int> index(at(node_count()), -1);
  const auto order = terminal_order();
  for (std::size_t k = 0; k < order.size(); ++k) index[at(order[k])] = static_cast<int>(k);
  return index;
}

bool DualTree::same_structure(const DualTree& other) const {
  if (node_count() != other.node_count() || edges_ != other.edges_ || rotation_ != other.rotation_) {
    return false;
  }
  for (int x = 0; x < node_count(); ++x) {
    if (node(x).kind != other.node(x).kind) return false;
  }
  return true;
}

DualTree build_dual(const Triangulation& tri) {
  const int m = static_cast<int>(tri.triangles.size());
  const int n = tri.vertex_count;
  std::vector<DualNode> nodes;
  for (int t = 0; t < m; ++t) nodes.push_back({NodeKind::Triangle, "n" + std::to_string(t)});
  for (int k = 0; k < n; ++k) nodes.push_back({NodeKind::Terminal, "e" + std::to_string(k)});

  std::vector<DualEdge> edges;
  std::vector<std::vector<int>> rotation(at(m + n));
  std::map<EdgeKey, int> diagonal_edge;
  for (int t = 0; t < m; ++t) {
    const auto& tr = tri.triangles[at(t)];
    for (int s = 0; s < 3; ++s) {
      const int x = tr[at(s)];
      const int y = tr[at((s + 1) % 3)];
      const EdgeKey key = edge_key(x, y);
      int id;
      if (tri.is_polygon_edge(x, y)) {
        const int k = key.second == key.first + 1 ? key.first : key.second;
        id = static_cast<int>(edges.size());
        edges.push_back({t, m + k, Direction::None});
        rotation[at(m + k)].push_back(id);
      } else if (auto it = diagonal_edge.find(key); it != diagonal_edge.end()) {
        id = it->second;
        edges[at(id)].b = t;
      } else {
        id = static_cast<int>(edges.size());
        edges.push_back({t, -1, Direction::None});
        diagonal_edge.emplace(key, id);
      }
      rotation[at(t)].push_back(id);
    }
  }
  DualTree dual(std::move(nodes), std::move(edges), std::move(rotation));
  DualBinding binding;
  binding.vertex_count = n;
  binding.triangle.resize(at(m + n), {-1, -1, -1});
  binding.polygon_edge.assign(at(m + n), -1);
  for (int t = 0; t < m; ++t) binding.triangle[at(t)] = tri.triangles[at(t)];
  for (int k = 0; k < n; ++k) binding.polygon_edge[at(m + k)] = k;
  dual.set_binding(std::move(binding));
  return dual;
}

DualTree direct_dual(const Polygon& poly, const Triangulation& tri) {
  DualTree dual = build_dual(tri);
  for (int e = 0; e < dual.edge_count(); ++e) {
    if (dual.is_terminal_edge(e)) continue;
    const int na = dual.edge(e).a;
    const int nb = dual.edge(e).b;
    const auto& ta = tri.triangles[at(na)];
    const auto& tb = tri.triangles[at(nb)];
    // Orient A = (p, q, x) so that B = (q, p, y).
    int p = -1, q = -1, x = -1;
    for (int s = 0; s < 3; ++s) {
      const int c = ta[at((s + 2) % 3)];
      if (std::find(tb.begin(), tb.end(), c) == tb.end()) {
        p = ta[at(s)];
        q = ta[at((s + 1) % 3)];
        x = c;
      }
    }
    int y = -1;
    for (int c : tb) {
      if (c != p && c != q) y = c;
    }
    const Point &pp = poly.vertex(p), &pq = poly.vertex(q), &px = poly.vertex(x), &py = poly.vertex(y);
    const Turn at_p = orient(px, pp, py);
    const Turn at_q = orient(py, pq, px);
    if (at_p == Turn::Collinear || at_q == Turn::Collinear) {
      throw Error(ErrorCode::DegenerateQuadrilateral, "straight angle in adjacent-triangle union",
                  {na, nb});
    }
    // Crossing from A into B, p lies on the right.
    if (at_p == Turn::Right) {
      dual.direct(na, nb);
    } else if (at_q == Turn::Right) {
      dual.direct(nb, na);
    }
  }
  return dual;
}

DualTree deflated_dual(const Polygon& poly) {
  require_no_collinear_triple(poly);
  const VisibilityGraph vv = vertex_visibility_graph(poly);
  if (!is_deflated(poly, vv).deflated) throw Error(ErrorCode::NotDeflated, "polygon is not deflated");
  // The visible diagonals of a deflated polygon pairwise avoid each other and
  // so form its only triangulation.
  std::vector<EdgeKey> diagonals;
  for (const auto& [u, v] : vv.vv_pairs()) {
    if (!poly.adjacent(u, v)) diagonals.emplace_back(u, v);
  }
  return direct_dual(poly, Triangulation::from_diagonals(poly.size(), std::move(diagonals)));
}

std::vector<int> trace_visibility_path(const DualTree& dual, int a, int b) {
  if (!dual.is_triangle(a) || !dual.edge_between(a, b)) {
    throw Error(ErrorCode::InvalidArgument, "a visibility path starts at a triangle and a neighbour",
                {a, b});
  }
  std::vector<int> path{a, b};
  while (dual.is_triangle(path.back())) {
    if (path.size() > static_cast<std::size_t>(dual.node_count())) {
      throw Error(ErrorCode::InvalidArgument, "visibility path does not terminate");
    }
    const int prev = path[path.size() - 2];
    const int cur = path.back();
    const auto nb = dual.neighbors(cur);
    const auto pos = static_cast<std::size_t>(std::find(nb.begin(), nb.end(), prev) - nb.begin());
    const int r = nb[(pos + 1) % 3];
    const int l = nb[(pos + 2) % 3];
    if (dual.points(cur, prev)) {
      path.push_back(r);
    } else if (dual.points(prev, cur)) {
      path.push_back(l);
    } else {
      throw Error(ErrorCode::UndirectedEdgeOnPath, "visibility path meets an undirected edge",
                  {prev, cur});
    }
  }
  return path;
}

std::vector<std::vector<int>> maximal_outer_paths(const DualTree& dual) {
  const int start = lowest_terminal(dual);
  auto walk = outer_walk(dual, start);
  walk.push_back(start);
  std::vector<std::vector<int>> segments;
  std::vector<int> current{start};
  for (std::size_t i = 1; i < walk.size(); ++i) {
    current.push_back(walk[i]);
    if (dual.is_terminal(walk[i])) {
      segments.push_back(current);
      current = {walk[i]};
    }
  }
  // segments[k] runs from terminal k to terminal k+1, i.e. around vertex k+1.
  std::rotate(segments.begin(), segments.end() - 1, segments.end());
  return segments;
}

std::optional<std::vector<int>> find_illegal_path(const DualTree& dual) {
  if (const auto loose = dual.undirected_inner_edges(); !loose.empty()) {
    throw Error(ErrorCode::UndirectedNonTerminalEdge, "dual has an undirected non-terminal edge",
                {loose.front()});
  }
  for (const auto& path : maximal_outer_paths(dual)) {
    const std::size_t len = path.size();
    for (std::size_t i = 0; i + 3 < len; ++i) {
      if (!dual.points(path[i], path[i + 1])) continue;
      for (std::size_t j = i + 3; j < len; ++j) {
        if (dual.points(path[j - 1], path[j])) {
          return std::vector<int>(path.begin() + static_cast<std::ptrdiff_t>(i),
                                  path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        }
      }
    }
  }
  return std::nullopt;
}

bool dual_vertex_edge_visible(const DualTree& dual, int u, int g) {
  const auto paths = maximal_outer_paths(dual);
  const auto order = dual.terminal_order();
  const int n = static_cast<int>(order.size());
  if (u < 0 || u >= n || g < 0 || g >= n) {
    throw Error(ErrorCode::InvalidArgument, "vertex or edge out of range", {u, g});
  }
  const int target = order[at(g)];
  const auto& fan = paths[at(u)];
  for (std::size_t i = 1; i + 1 < fan.size(); ++i) {
    const int y = fan[i];
    for (int o : dual.neighbors(y)) {
      if (o == fan[i - 1] || o == fan[i + 1]) continue;
      if (o == target) return true;
      if (dual.is_terminal(o)) continue;
      if (trace_visibility_path(dual, y, o).back() == target) return true;
    }
  }
  return fan.front() == target || fan.back() == target;
}

bool dual_vertex_vertex_visible(const DualTree& dual, int u, int v) {
  const auto paths = maximal_outer_paths(dual);
  const int n = static_cast<int>(paths.size());
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range", {u, v});
  }
  auto a = paths[at(u)];
  auto b = paths[at(v)];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return !common.empty();
}

namespace {

// Rotation at x read counter-clockwise starting with the edge towards `from`.
std::vector<int> rotation_from(const DualTree& d, int x, int from) {
  auto nb = d.neighbors(x);
  const auto it = std::find(nb.begin(), nb.end(), from);
  std::rotate(nb.begin(), it, nb.end());
  return nb;
}

bool try_offset(const DualTree& a, const DualTree& b, const std::vector<int>& ta,
                const std::vector<int>& tb, int k) {
  const int n = static_cast<int>(ta.size());
  std::vector<int> map(at(a.node_count()), -1);
  std::vector<std::pair<int, int>> stack;
  const int sa = ta[0];
  const int sb = tb[at(k % n)];
  map[at(sa)] = sb;
  const int na = a.neighbors(sa).front();
  const int nb = b.neighbors(sb).front();
  if (a.node(na).kind != b.node(nb).kind) return false;
  map[at(na)] = nb;
  stack.emplace_back(na, sa);
  while (!stack.empty()) {
    const auto [x, from] = stack.back();
    stack.pop_back();
    const int y = map[at(x)];
    const auto rx = rotation_from(a, x, from);
    const auto ry = rotation_from(b, y, map[at(from)]);
    if (rx.size() != ry.size()) return false;
    for (std::size_t i = 1; i < rx.size(); ++i) {
      const int xc = rx[i];
      const int yc = ry[i];
      if (a.node(xc).kind != b.node(yc).kind) return false;
      if (a.points(x, xc) != b.points(y, yc) || a.points(xc, x) != b.points(yc, y)) return false;
      if (map[at(xc)] != -1) return false;
      map[at(xc)] = yc;
      stack.emplace_back(xc, x);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (map[at(ta[at(i)])] != tb[at((i + k) % n)]) return false;
  }
  return true;
}

}  // namespace

std::optional<int> plane_isomorphism(const DualTree& a, const DualTree& b) {
  if (a.node_count() != b.node_count() || a.triangle_count() != b.triangle_count()) {
    return std::nullopt;
  }
  const auto ta = a.terminal_order();
  const auto tb = b.terminal_order();
  for (int k = 0; k < static_cast<int>(ta.size()); ++k) {
    if (try_offset(a, b, ta, tb, k)) return k;
  }
  return std::nullopt;
}

namespace {

const char* dir_name(Direction d) {
  switch (d) {
    case Direction::AtoB: return "ab";
    case Direction::BtoA: return "ba";
    case Direction::None: break;
  }
  return "none";
}

Direction dir_from(const std::string& s) {
  if (s == "ab") return Direction::AtoB;
  if (s == "ba") return Direction::BtoA;
  if (s == "none") return Direction::None;
  throw Error(ErrorCode::MalformedDocument, "edge direction must be none, ab or ba");
}

}  // namespace

DualTree parse_dual(std::string_view document) {
  using json_util::int_from;
  using json_util::member;
  const auto doc = json_util::parse(document);
  const auto& jnodes = member(doc, "nodes");
  const auto& jedges = member(doc, "edges");
  const auto& jrot = member(doc, "rotation");
  if (!jnodes.is_array() || !jedges.is_array() || !jrot.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "nodes, edges and rotation have the wrong types");
  }
  const std::size_t count = jnodes.size();
  std::vector<DualNode> nodes(count);
  std::vector<bool> filled(count, false);
  bool bound = true;
  DualBinding binding;
  binding.triangle.assign(count, {-1, -1, -1});
  binding.polygon_edge.assign(count, -1);
  for (const auto& jn : jnodes) {
    const int id = int_from(member(jn, "id"), "node id");
    if (id < 0 || at(id) >= count || filled[at(id)]) {
      throw Error(ErrorCode::MalformedDocument, "node ids must be 0..n-1 without repeats");
    }
    filled[at(id)] = true;
    const auto kind = member(jn, "kind");
    if (kind == "triangle") {
      nodes[at(id)].kind = NodeKind::Triangle;
    } else if (kind == "terminal") {
      nodes[at(id)].kind = NodeKind::Terminal;
    } else {
      throw Error(ErrorCode::MalformedDocument, "node kind must be triangle or terminal");
    }
    if (jn.contains("label") && jn["label"].is_string()) nodes[at(id)].label = jn["label"].get<std::string>();
    if (jn.contains("triangle") && jn["triangle"].is_array() && jn["triangle"].size() == 3) {
      for (std::size_t s = 0; s < 3; ++s) binding.triangle[at(id)][s] = int_from(jn["triangle"][s], "vertex");
    } else if (jn.contains("polygon_edge")) {
      binding.polygon_edge[at(id)] = int_from(jn["polygon_edge"], "polygon edge");
    } else {
      bound = false;
    }
  }
  std::vector<DualEdge> edges;
  for (const auto& je : jedges) {
    DualEdge e{int_from(member(je, "a"), "edge end"), int_from(member(je, "b"), "edge end"), Direction::None};
    if (je.contains("dir")) {
      if (!je["dir"].is_string()) throw Error(ErrorCode::MalformedDocument, "dir must be a string");
      e.dir = dir_from(je["dir"].get<std::string>());
    }
    edges.push_back(e);
  }
  std::vector<std::vector<int>> rotation(count);
  for (const auto& [key, list] : jrot.items()) {
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedDocument, "rotation keys must be node ids");
    }
    if (id >= count || !list.is_array()) {
      throw Error(ErrorCode::MalformedDocument, "rotation entry is malformed");
    }
    for (const auto& e : list) {
      const int eid = int_from(e, "edge id");
      if (eid < 0 || at(eid) >= edges.size()) {
        throw Error(ErrorCode::MalformedDocument, "rotation refers to an unknown edge");
      }
      rotation[id].push_back(eid);
    }
  }
  DualTree dual(std::move(nodes), std::move(edges), std::move(rotation));
  if (bound && count > 0) {
    binding.vertex_count = static_cast<int>(count) - dual.triangle_count();
    dual.set_binding(std::move(binding));
  }
  return dual;
}

std::string serialize_dual(const DualTree& dual) {
  using json_util::json;
  json nodes = json::array();
  const auto& binding = dual.binding();
  for (int x = 0; x < dual.node_count(); ++x) {
    json jn{{"id", x}, {"kind", dual.is_triangle(x) ? "triangle" : "terminal"}};
    if (!dual.node(x).label.empty()) jn["label"] = dual.node(x).label;
    if (binding) {
      if (dual.is_triangle(x)) {
        const auto& t = binding->triangle[at(x)];
        jn["triangle"] = {t[0], t[1], t[2]};
      } else {
        jn["polygon_edge"] = binding->polygon_edge[at(x)];
      }
    }
    nodes.push_back(std::move(jn));
  }
  json edges = json::array();
  for (const auto& e : dual.edges()) edges.push_back({{"a", e.a}, {"b", e.b}, {"dir", dir_name(e.dir)}});
  json rotation = json::object();
  for (int x = 0; x < dual.node_count(); ++x) rotation[std::to_string(x)] = dual.rotation(x);
  return json_util::dump({{"nodes", nodes}, {"edges", edges}, {"rotation", rotation}});
}

}  // namespace deflate
