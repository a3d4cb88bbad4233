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


#include "deflate_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "deflate/visibility.hpp"

namespace deflate::cli {
namespace {

constexpr double kCanvas = 480.0;
constexpr double kMargin = 24.0;

struct XY {
  double x;
  double y;
};

// Maps world coordinates onto the canvas, y pointing up.
class Frame {
 public:
  explicit Frame(const std::vector<XY>& pts) {
    if (pts.empty()) return;
    lo_ = hi_ = pts[0];
    for (const auto& p : pts) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi_.x = std::max(hi_.x, p.x);
      hi_.y = std::max(hi_.y, p.y);
    }
    const double span = std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-12});
    scale_ = (kCanvas - 2 * kMargin) / span;
  }

  XY map(const XY& p) const { return {kMargin + (p.x - lo_.x) * scale_, kCanvas - kMargin - (p.y - lo_.y) * scale_}; }

 private:
  XY lo_{0, 0};
  XY hi_{1, 1};
  double scale_ = 1;
};

XY approx(const Point& p) { return {p.x.approx(), p.y.approx()}; }

std::string fmt(const XY& p) { return format_fixed(p.x) + " " + format_fixed(p.y); }

void open_svg(std::ostringstream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(kCanvas) << "\" height=\""
     << format_fixed(kCanvas) << "\" viewBox=\"0 0 " << format_fixed(kCanvas) << " " << format_fixed(kCanvas)
     << "\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
}

void line(std::ostringstream& os, const char* cls, const XY& a, const XY& b, const char* extra = "") {
  os << "<line class=\"" << cls << "\" x1=\"" << format_fixed(a.x) << "\" y1=\"" << format_fixed(a.y)
     << "\" x2=\"" << format_fixed(b.x) << "\" y2=\"" << format_fixed(b.y) << "\"" << extra << "/>\n";
}

std::string ring_path(const Frame& frame, const std::vector<Point>& ring) {
  std::string d;
  for (std::size_t i = 0; i < ring.size(); ++i) d += (i == 0 ? "M " : " L ") + fmt(frame.map(approx(ring[i])));
  return d + " Z";
}

}  // namespace

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

std::string render_svg(const Polygon& poly, const SvgOptions& options) {
  std::vector<XY> pts;
  for (const auto& v : poly.vertices()) pts.push_back(approx(v));
  const Frame frame(pts);
  std::ostringstream os;
  open_svg(os);
  os << "<path class=\"polygon\" d=\"" << ring_path(frame, poly.vertices())
     << "\" fill=\"#eef2fa\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  if (options.triangulation) {
    for (auto [a, b] : options.triangulation->diagonals) {
      line(os, "diagonal", frame.map(pts[static_cast<std::size_t>(a)]), frame.map(pts[static_cast<std::size_t>(b)]),
           " stroke=\"#333\" stroke-dasharray=\"5 4\"");
    }
  }
  if (options.show_vv) {
    std::vector<EdgeKey> inner;
    for (const auto& [u, v] : vertex_visibility_graph(poly).vv_pairs()) {
      if (!poly.adjacent(u, v)) inner.emplace_back(u, v);
    }
    for (const auto& [u, v] : inner) {
      const Segment s{poly.vertex(u), poly.vertex(v)};
      const bool crossing = std::any_of(inner.begin(), inner.end(), [&](const EdgeKey& o) {
        return segments_intersect(s, Segment{poly.vertex(o.first), poly.vertex(o.second)}, IntersectMode::Proper);
      });
      line(os, crossing ? "vv crossing" : "vv", frame.map(pts[static_cast<std::size_t>(u)]),
           frame.map(pts[static_cast<std::size_t>(v)]),
           crossing ? " stroke=\"#d62728\" stroke-width=\"1.5\"" : " stroke=\"#7f7f7f\"");
    }
  }
  for (int i = 0; i < poly.size(); ++i) {
    const XY p = frame.map(pts[static_cast<std::size_t>(i)]);
    os << "<circle class=\"vertex\" cx=\"" << format_fixed(p.x) << "\" cy=\"" << format_fixed(p.y)
       << "\" r=\"3.000000\"/>\n";
    if (options.vertex_labels) {
      os << "<text x=\"" << format_fixed(p.x + 5) << "\" y=\"" << format_fixed(p.y - 5)
         << "\" font-size=\"11\">" << i << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const DualTree& dual) {
  const int count = dual.node_count();
  int root = 0;
  for (int x = 0; x < count; ++x) {
    if (dual.is_triangle(x)) {
      root = x;
      break;
    }
  }
  // Radial layout: each subtree gets an angular sector proportional to its
  // number of leaves, children in rotation order.
  std::vector<int> parent(static_cast<std::size_t>(count), -1);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
  std::vector<int> order{root};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = order[k];
    const auto& rot = dual.rotation(x);
    std::size_t start = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      if (dual.other_end(rot[i], x) == parent[static_cast<std::size_t>(x)]) start = i + 1;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int y = dual.other_end(rot[(start + i) % rot.size()], x);
      if (y == parent[static_cast<std::size_t>(x)]) continue;
      parent[static_cast<std::size_t>(y)] = x;
      children[static_cast<std::size_t>(x)].push_back(y);
      order.push_back(y);
    }
  }
  std::vector<int> leaves(static_cast<std::size_t>(count), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& ch = children[static_cast<std::size_t>(*it)];
    if (ch.empty()) continue;
    int sum = 0;
    for (int c : ch) sum += leaves[static_cast<std::size_t>(c)];
    leaves[static_cast<std::size_t>(*it)] = sum;
  }
  std::vector<XY> pos(static_cast<std::size_t>(count), XY{0, 0});
  std::vector<double> lo(static_cast<std::size_t>(count), 0), hi(static_cast<std::size_t>(count), 0);
  std::vector<int> depth(static_cast<std::size_t>(count), 0);
  hi[static_cast<std::size_t>(root)] = 2 * M_PI;
  for (const int x : order) {
    const auto ux = static_cast<std::size_t>(x);
    double a = lo[ux];
    for (int c : children[ux]) {
      const auto uc = static_cast<std::size_t>(c);
      const double width = (hi[ux] - lo[ux]) * leaves[uc] / leaves[ux];
      lo[uc] = a;
      hi[uc] = a + width;
      a += width;
      depth[uc] = depth[ux] + 1;
      const double mid = (lo[uc] + hi[uc]) / 2;
      pos[uc] = {depth[uc] * std::cos(mid), depth[uc] * std::sin(mid)};
    }
  }
  const Frame frame(pos);
  std::ostringstream os;
  open_svg(os);
  for (int e = 0; e < dual.edge_count(); ++e) {
    const auto& edge = dual.edge(e);
    XY a = frame.map(pos[static_cast<std::size_t>(edge.a)]);
    XY b = frame.map(pos[static_cast<std::size_t>(edge.b)]);
    if (dual.is_terminal_edge(e)) {
      line(os, "terminal-edge", a, b, " stroke=\"#000\"");
      continue;
    }
    if (edge.dir == Direction::BtoA) std::swap(a, b);
    line(os, edge.dir == Direction::None ? "inner-edge" : "inner-edge directed", a, b,
         edge.dir == Direction::None ? " stroke=\"#000\"" : " stroke=\"#000\" marker-end=\"url(#arrow)\"");
  }
  for (int x = 0; x < count; ++x) {
    const XY p = frame.map(pos[static_cast<std::size_t>(x)]);
    if (dual.is_triangle(x)) {
      os << "<circle class=\"disk\" cx=\"" << format_fixed(p.x) << "\" cy=\"" << format_fixed(p.y)
         << "\" r=\"6.000000\"/>\n";
    } else {
      const int par = parent[static_cast<std::size_t>(x)];
      const XY q = par < 0 ? XY{p.x - 1, p.y} : frame.map(pos[static_cast<std::size_t>(par)]);
      const double len = std::max(std::hypot(p.x - q.x, p.y - q.y), 1e-9);
      const XY n{-(p.y - q.y) / len * 7, (p.x - q.x) / len * 7};
      line(os, "tee", {p.x - n.x, p.y - n.y}, {p.x + n.x, p.y + n.y}, " stroke=\"#000\" stroke-width=\"2\"");
    }
    const std::string& label = dual.node(x).label;
    if (!label.empty()) {
      os << "<text x=\"" << format_fixed(p.x + 8) << "\" y=\"" << format_fixed(p.y - 8) << "\" font-size=\"11\">"
         << label << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const Trajectory& traj) {
  std::vector<XY> pts;
  for (const auto& f : traj.frames) {
    for (const auto& v : f.vertices) pts.push_back(approx(v));
  }
  const Frame frame(pts);
  std::ostringstream os;
  open_svg(os);
  for (std::size_t k = 0; k < traj.frames.size(); ++k) {
    const bool end = k == 0 || k + 1 == traj.frames.size();
    os << "<path class=\"frame\" d=\"" << ring_path(frame, traj.frames[k].vertices) << "\" fill=\"none\" stroke=\""
       << (k == 0 ? "#1f77b4" : (end ? "#d62728" : "#999")) << "\" stroke-opacity=\""
       << (end ? "1" : "0.35") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace deflate::cli
