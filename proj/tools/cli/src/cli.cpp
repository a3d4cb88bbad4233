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


#include "deflate_cli/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "deflate/deflatability.hpp"
#include "deflate/deform.hpp"
#include "deflate/dual.hpp"
#include "deflate/error.hpp"
#include "deflate/realize.hpp"
#include "deflate/smallpoly.hpp"
#include "deflate/visibility.hpp"
#include "deflate_cli/fixture.hpp"
#include "deflate_cli/svg.hpp"

namespace deflate::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureMismatch : std::runtime_error {
  explicit FixtureMismatch(FixtureReport r) : std::runtime_error("fixture expectations failed"), report(std::move(r)) {}
  FixtureReport report;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path.string());
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
}

// Reads a document; a fixture's "expect" block is re-verified on load.
json load(const std::string& path, bool verify = true) {
  json doc = parse_json(read_file(path));
  if (verify && doc.is_object() && doc.contains("expect")) {
    FixtureReport report = verify_fixture(doc, fs::path(path).parent_path());
    if (!report.ok()) throw FixtureMismatch(std::move(report));
  }
  return doc;
}

Polygon load_polygon(const std::string& path) { return parse_polygon(load(path).dump()); }
DualTree load_dual(const std::string& path) { return parse_dual(load(path).dump()); }

std::string pair_text(int a, int b) { return std::to_string(a) + "-" + std::to_string(b); }

std::string path_text(const DualTree& dual, const std::vector<int>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ' ';
    const auto& label = dual.node(path[i]).label;
    s += label.empty() ? std::to_string(path[i]) : label;
  }
  return s;
}

void print_report(const FixtureReport& report, std::ostream& os) {
  for (const auto& c : report.checks) {
    os << "expect " << c.property << ": " << (c.ok ? "ok" : "FAILED");
    if (!c.ok) os << " (expected " << c.expected << ", got " << c.actual << ")";
    os << "\n";
  }
}

struct Options {
  std::uint64_t seed = 0;
  std::string file;
  std::string file2;
  std::string svg;
  std::string svg_dir;
  std::string json_out;
  std::string out_file;
  int tri = 0;
  int limit = 0;
  int n = 6;
  bool ve = false;
  bool show_vv = false;
};

int cmd_check(const Options& o, std::ostream& out) {
  const json doc = load(o.file, false);
  std::vector<Point> ring;
  if (!doc.contains("vertices")) throw Error(ErrorCode::MalformedDocument, "missing vertices");
  for (const auto& v : doc.at("vertices")) {
    ring.push_back({Scalar::parse(v.at(0).get<std::string>()), Scalar::parse(v.at(1).get<std::string>())});
  }
  out << "vertices: " << ring.size() << "\n";
  int status = kOk;
  try {
    const Polygon poly(ring);
    out << "simple: true\n";
    out << "counter-clockwise: " << (signed_area2(ring).sign() > 0 ? "true" : "false (reversed on load)") << "\n";
    const auto gp = is_general_position(poly);
    out << "general-position: " << (gp.general_position ? "true" : "false");
    if (gp.witness) out << " (" << pair_text(gp.witness->u, gp.witness->v) << " grazes the boundary)";
    out << "\nreflex:";
    for (int r : reflex_vertices(poly)) out << " " << r;
    const auto defl = is_deflated(poly);
    out << "\ndeflated: " << (defl.deflated ? "true" : "false");
    if (defl.crossing) {
      out << " (" << pair_text(defl.crossing->first.first, defl.crossing->first.second) << " crosses "
          << pair_text(defl.crossing->second.first, defl.crossing->second.second) << ")";
    }
    out << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSimple) throw;
    out << "simple: false";
    if (e.detail().size() == 2) out << " (edges " << e.detail()[0] << " and " << e.detail()[1] << " meet)";
    out << "\n";
    status = kNegative;
  }
  if (doc.contains("expect")) {
    const FixtureReport report = verify_fixture(doc, fs::path(o.file).parent_path());
    print_report(report, out);
    if (!report.ok()) status = kNegative;
  }
  return status;
}

int cmd_vis(const Options& o, std::ostream& out) {
  const Polygon poly = load_polygon(o.file);
  const auto g = visibility_graph(poly);
  out << "vv:";
  for (auto [u, v] : g.vv_pairs()) out << " " << pair_text(u, v);
  out << "\n";
  for (int u = 0; u < poly.size(); ++u) {
    out << "ve " << u << ":";
    for (int e = 0; e < poly.size(); ++e) {
      if (g.sees_edge(u, e)) out << " " << e;
    }
    out << "\n";
  }
  out << "crossings: " << count_visibility_crossings(poly) << "\n";
  if (!o.svg.empty()) {
    SvgOptions opts;
    opts.show_vv = true;
    write_file(o.svg, render_svg(poly, opts));
  }
  return kOk;
}

int cmd_tris(const Options& o, std::ostream& out) {
  const Polygon poly = load_polygon(o.file);
  const auto tris = enumerate_triangulations(poly);
  const std::size_t count = o.limit > 0 ? std::min(tris.size(), static_cast<std::size_t>(o.limit)) : tris.size();
  json arr = json::array();
  if (!o.svg_dir.empty()) make_dir(o.svg_dir);
  for (std::size_t k = 0; k < count; ++k) {
    arr.push_back(parse_json(serialize_triangulation(tris[k])));
    if (!o.svg_dir.empty()) {
      SvgOptions opts;
      opts.triangulation = tris[k];
      std::ostringstream name;
      name << "tri-" << std::setw(4) << std::setfill('0') << k << ".svg";
      write_file(fs::path(o.svg_dir) / name.str(), render_svg(poly, opts));
    }
  }
  out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out, std::ostream& err) {
  const Polygon poly = load_polygon(o.file);
  const auto tris = enumerate_triangulations(poly);
  if (o.tri < 0 || o.tri >= static_cast<int>(tris.size())) {
    err << "--tri " << o.tri << " is out of range; the polygon has " << tris.size() << " triangulations\n";
    return kUsage;
  }
  out << serialize_dual(direct_dual(poly, tris[static_cast<std::size_t>(o.tri)]));
  return kOk;
}

int cmd_outer(const Options& o, std::ostream& out) {
  const DualTree dual = load_dual(o.file);
  for (const auto& path : maximal_outer_paths(dual)) out << path_text(dual, path) << "\n";
  return kOk;
}

int cmd_illegal(const Options& o, std::ostream& out) {
  const DualTree dual = load_dual(o.file);
  const auto path = find_illegal_path(dual);
  if (!path) {
    out << "none\n";
    return kOk;
  }
  out << "illegal path: " << path_text(dual, *path) << "\n";
  return kNegative;
}

int cmd_realize(const Options& o, std::ostream& out) {
  const DualTree dual = load_dual(o.file);
  RealizeOptions opts;
  opts.jitter_seed = o.seed;
  const Polygon poly = realize(dual, opts);
  out << serialize_polygon(poly);
  if (!o.svg.empty()) write_file(o.svg, render_svg(poly));
  return kOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Certificate cert = certify(load_polygon(o.file));
  const std::string doc = serialize_certificate(cert);
  if (o.json_out.empty()) {
    out << doc;
    return kOk;
  }
  write_file(o.json_out, doc);
  int illegal = 0;
  int excess = 0;
  for (const auto& v : cert.verdicts) {
    if (v.kind == CandidateVerdict::Kind::IllegalPath) ++illegal;
    if (v.kind == CandidateVerdict::Kind::VisibilityExcess) ++excess;
  }
  out << "kind: " << to_string(cert.kind) << "\n";
  out << "triangulations: " << cert.triangulations.size() << "\n";
  out << "candidates: " << cert.verdicts.size() << " (" << illegal << " illegal-path, " << excess
      << " visibility-excess)\n";
  return kOk;
}

int cmd_deform(const Options& o, std::ostream& out, std::ostream& err) {
  const Polygon from = load_polygon(o.file);
  const Polygon to = load_polygon(o.file2);
  const RefinedDeformation result = deform_refined(from, to);
  out << serialize_trajectory(result.trajectory);
  if (!o.svg_dir.empty()) {
    make_dir(o.svg_dir);
    const auto& frames = result.trajectory.frames;
    for (std::size_t k = 0; k < frames.size(); ++k) {
      std::ostringstream name;
      name << "frame-" << std::setw(4) << std::setfill('0') << k << ".svg";
      write_file(fs::path(o.svg_dir) / name.str(), render_svg(Polygon::from_ccw_ring(frames[k].vertices)));
    }
  }
  if (!result.report.ok) {
    err << "violations remain at " << result.frames_per_phase << " frames per phase\n";
    return kNegative;
  }
  return kOk;
}

int cmd_verify_deform(const Options& o, std::ostream& out) {
  const Trajectory traj = parse_trajectory(load(o.file).dump());
  const auto report = check_monotonic(traj, o.ve ? MonotonicityMode::VVandVE : MonotonicityMode::VV);
  out << "frames: " << traj.frames.size() << "\n";
  out << "monotonic: " << (report.ok ? "true" : "false") << "\n";
  for (const auto& v : report.violations) {
    out << (v.kind == MonotonicityViolation::Kind::VertexVertex ? "vv" : "ve") << " violation, frames "
        << v.earlier << " -> " << v.later << ": " << v.u << " " << v.v << "\n";
  }
  return report.ok ? kOk : kNegative;
}

int cmd_hexlab(const Options& o, std::ostream& out) {
  const HexlabReport report = run_hexlab(o.n);
  const json doc = parse_json(serialize_hexlab(report));
  out << "n: " << report.n << "\n";
  out << "order types: " << report.order_types << "\n";
  out << "simple polygons: " << report.polygons.size() << "\n";
  for (const auto& group : doc.at("groups")) {
    out << "reflex " << group.at("reflex").dump() << ":";
    for (const auto& [key, count] : group.items()) {
      if (key != "reflex") out << " " << key << "=" << count.dump();
    }
    out << "\n";
  }
  if (!o.json_out.empty()) write_file(o.json_out, doc.dump(2) + "\n");
  if (!o.svg_dir.empty()) {
    make_dir(o.svg_dir);
    for (std::size_t k = 0; k < report.polygons.size(); ++k) {
      std::ostringstream name;
      name << "polygon-" << std::setw(4) << std::setfill('0') << k << ".svg";
      write_file(fs::path(o.svg_dir) / name.str(), render_svg(report.polygons[k].polygon));
    }
  }
  return kOk;
}

int cmd_svg(const Options& o, std::ostream& out) {
  const json doc = load(o.file);
  std::string svg;
  if (doc.contains("nodes")) {
    svg = render_svg(parse_dual(doc.dump()));
  } else if (doc.contains("frames")) {
    svg = render_svg(parse_trajectory(doc.dump()));
  } else {
    const Polygon poly = parse_polygon(doc.dump());
    SvgOptions opts;
    opts.show_vv = o.show_vv;
    if (o.tri >= 0) {
      const auto tris = enumerate_triangulations(poly);
      if (o.tri < static_cast<int>(tris.size())) opts.triangulation = tris[static_cast<std::size_t>(o.tri)];
    }
    svg = render_svg(poly, opts);
  }
  if (o.out_file.empty()) {
    out << svg;
  } else {
    write_file(o.out_file, svg);
  }
  return kOk;
}

bool is_parse_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::NotSimple:
    case ErrorCode::TooFewVertices:
    case ErrorCode::DuplicateVertex:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deflation properties of simple polygons", "deflate-kit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized choices (realize jitter)");

  auto* check = app.add_subcommand("check", "simplicity, orientation, general position, reflex vertices");
  check->add_option("file", o.file)->required();

  auto* vis = app.add_subcommand("vis", "vertex-vertex and vertex-edge visibility");
  vis->add_option("file", o.file)->required();
  vis->add_option("--svg", o.svg, "render polygon and visibility segments");

  auto* tris = app.add_subcommand("tris", "enumerate triangulations");
  tris->add_option("file", o.file)->required();
  tris->add_option("--limit", o.limit);
  tris->add_option("--svg-dir", o.svg_dir);

  auto* dual = app.add_subcommand("dual", "directed dual of one triangulation");
  dual->add_option("file", o.file)->required();
  dual->add_option("--tri", o.tri, "triangulation index");

  auto* outer = app.add_subcommand("outer", "maximal outer paths of a dual");
  outer->add_option("file", o.file)->required();

  auto* illegal = app.add_subcommand("illegal", "find an illegal path in a directed dual");
  illegal->add_option("file", o.file)->required();

  auto* realize_cmd = app.add_subcommand("realize", "deflated polygon with the given directed dual");
  realize_cmd->add_option("file", o.file)->required();
  realize_cmd->add_option("--svg", o.svg);

  auto* certify_cmd = app.add_subcommand("certify", "search for a compatible directed dual");
  certify_cmd->add_option("file", o.file)->required();
  certify_cmd->add_option("--json", o.json_out, "write the certificate here and print a summary");

  auto* deform = app.add_subcommand("deform", "monotonic deformation between same-dual deflated polygons");
  deform->add_option("from", o.file)->required();
  deform->add_option("to", o.file2)->required();
  deform->add_option("--svg-anim", o.svg_dir, "one SVG per frame");

  auto* verify = app.add_subcommand("verify-deform", "check a trajectory for monotonicity");
  verify->add_option("file", o.file)->required();
  verify->add_flag("--ve", o.ve, "also compare vertex-edge visibility of the end frames");

  auto* hexlab = app.add_subcommand("hexlab", "classify every simple polygon on small point sets");
  hexlab->add_option("--n", o.n)->check(CLI::Range(3, 6));
  hexlab->add_option("--report", o.json_out);
  hexlab->add_option("--svg-dir", o.svg_dir);

  auto* svg = app.add_subcommand("svg", "render a polygon, dual or trajectory");
  svg->add_option("file", o.file)->required();
  svg->add_flag("--show-vv", o.show_vv);
  svg->add_option("--tri", o.tri, "draw this triangulation's diagonals");
  svg->add_option("-o,--output", o.out_file);
  svg->callback([&] {
    if (svg->count("--tri") == 0) o.tri = -1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (vis->parsed()) return cmd_vis(o, out);
    if (tris->parsed()) return cmd_tris(o, out);
    if (dual->parsed()) return cmd_dual(o, out, err);
    if (outer->parsed()) return cmd_outer(o, out);
    if (illegal->parsed()) return cmd_illegal(o, out);
    if (realize_cmd->parsed()) return cmd_realize(o, out);
    if (certify_cmd->parsed()) return cmd_certify(o, out);
    if (deform->parsed()) return cmd_deform(o, out, err);
    if (verify->parsed()) return cmd_verify_deform(o, out);
    if (hexlab->parsed()) return cmd_hexlab(o, out);
    if (svg->parsed()) return cmd_svg(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const FixtureMismatch& e) {
    err << "error: fixture " << e.report.name << " does not match its expectations\n";
    print_report(e.report, err);
    return kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_parse_error(e.code()) ? kParseError : kNegative;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kUsage;
}

}  // namespace deflate::cli
