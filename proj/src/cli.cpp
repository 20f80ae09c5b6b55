// Copyright 2026 The osn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "osn/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <sstream>

#include "osn/bounds.hpp"
#include "osn/cover_solver.hpp"
#include "osn/error.hpp"
#include "osn/generators.hpp"
#include "osn/reductions.hpp"
#include "osn/rot_format.hpp"
#include "osn/split_engine.hpp"
#include "osn/svg.hpp"

namespace osn {

namespace {

// Prints `key value` lines, or `key=value` in porcelain mode.
class Report {
 public:
  Report(std::ostream& out, bool porcelain) : out_(out), porcelain_(porcelain) {}

  template <typename T>
  void put(const std::string& key, const T& value) {
    if (porcelain_) {
      out_ << key << '=' << value << '\n';
    } else {
      out_ << std::left << std::setw(14) << key << ' ' << value << '\n';
    }
  }

 private:
  std::ostream& out_;
  bool porcelain_;
};

std::string join(const std::vector<FaceId>& ids, char sep) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(ids[i]);
  }
  return s;
}

void run_osn(const std::string& path, const std::vector<std::string>& svg, bool porcelain,
             std::ostream& out) {
  const PlaneGraph graph = with_default_outer_face(read_rot_file(path));
  const OsnResult result = solve_osn(graph);
  if (porcelain) {
    out << "osn=" << result.osn << '\n'
        << "cover=" << join(result.cover.faces, ',') << '\n'
        << "splits=" << result.splits.ops.size() << '\n';
    std::istringstream lines(format_split_sequence(result.splits));
    for (std::string line; std::getline(lines, line);) out << "split=" << line << '\n';
  } else {
    out << "osn " << result.osn << '\n'
        << "cover " << join(result.cover.faces, ' ') << '\n'
        << format_split_sequence(result.splits);
  }
  if (svg.size() == 2) {
    emit_svg(graph, svg[0]);
    emit_svg(result.outerplane, svg[1]);
  }
}

void run_split(const std::string& path, const std::string& sequence_path,
               const std::string& output, const std::string& svg, std::ostream& out) {
  const PlaneGraph graph = read_rot_file(path);
  const SplitSequence seq = parse_split_sequence(read_text_file(sequence_path));
  const PlaneGraph result = replay(graph, seq);
  if (output.empty()) {
    out << format_rot(result);
  } else {
    write_text_file(output, format_rot(result));
    out << "splits " << seq.ops.size() << '\n'
        << "outerplane " << (is_outerplane(result) ? "yes" : "no") << '\n';
  }
  if (!svg.empty()) emit_svg(result, svg);
}

void run_verify(const std::string& path, bool porcelain, std::ostream& out) {
  const PlaneGraph graph = read_rot_file(path);
  Report r(out, porcelain);
  const auto n = static_cast<long long>(graph.num_vertices());
  const auto m = static_cast<long long>(graph.num_edges());
  const auto f = static_cast<long long>(graph.num_faces());
  r.put("vertices", n);
  r.put("edges", m);
  r.put("faces", f);
  r.put("euler", n - m + f);
  r.put("biconnected", is_biconnected(graph) ? "yes" : "no");
  r.put("maximal", is_maximal_planar(graph) ? "yes" : "no");
  const auto face = outerplane_face(graph);
  r.put("outerplane", face ? "yes" : "no");
  if (face) r.put("outer_face", *face);
}

void run_gen(const std::string& family, const std::vector<long long>& params,
             std::uint64_t seed, const std::string& output, std::ostream& out) {
  FamilySpec spec{family, {params.begin(), params.end()}, seed};
  const std::string text = format_rot(named(spec));
  if (output.empty()) {
    out << text;
  } else {
    write_text_file(output, text);
  }
}

void run_bounds(const std::string& path, std::optional<int> depth, bool solve, bool porcelain,
                std::ostream& out) {
  const PlaneGraph graph = read_rot_file(path);
  std::optional<std::size_t> osn;
  if (solve) osn = solve_osn(graph).osn;
  const BoundReport report = bound_report(graph, depth, osn);
  Report r(out, porcelain);
  r.put("n", report.n);
  r.put("min_degree", report.min_degree);
  r.put("lower_generic", to_string(report.lower_generic));
  if (report.lower_family) r.put("lower_3tree", to_string(*report.lower_family));
  r.put("upper", report.upper ? to_string(*report.upper) : std::string("n/a"));
  if (report.osn) r.put("osn", *report.osn);
  if (report.upper && report.osn && report.n < kUpperBoundThreshold &&
      static_cast<std::int64_t>(*report.osn) > floor(*report.upper)) {
    r.put("note", "osn exceeds the upper bound below n = " +
                      std::to_string(kUpperBoundThreshold) + " (reported, not enforced)");
  }
  r.put("status", report.consistent() ? "ok" : "violation");
  for (const auto& v : report.violations) r.put("violation", v);
}

void run_reduce(const std::string& path, const std::string& output, std::ostream& out) {
  VcInstance instance{read_rot_file(path), 0};
  const CfcInstance cfc = build_cfc_instance(instance);
  std::ostringstream text;
  text << "# subdivided dual; face <-> vertex of the input\n";
  for (std::size_t i = 0; i < cfc.face_to_vertex.size(); ++i) {
    text << "# face " << cfc.dstar.faces()[i].id << " <-> vertex "
         << instance.graph.name(cfc.face_to_vertex[i]) << '\n';
  }
  text << format_rot(cfc.dstar);
  if (output.empty()) {
    out << text.str();
  } else {
    write_text_file(output, text.str());
    out << "vertices " << cfc.dstar.num_vertices() << '\n'
        << "edges " << cfc.dstar.num_edges() << '\n'
        << "faces " << cfc.dstar.num_faces() << '\n';
  }
}

// Returns false on disagreement.
bool run_oracle(const std::string& path, std::optional<std::size_t> k_max, bool porcelain,
                std::ostream& out) {
  const PlaneGraph graph = with_default_outer_face(read_rot_file(path));
  if (!is_biconnected(graph)) fail(ErrorKind::NotBiconnected, "input has a cut vertex");
  Report r(out, porcelain);
  bool agree = true;
  r.put("faces", graph.num_faces());

  const std::size_t cfc = brute_min_cfc(graph).size();
  r.put("cfc", cfc);
  if (graph.num_faces() <= kDefaultSplitFaceCap) {
    const auto by_splits = brute_osn_by_splits(graph, k_max.value_or(graph.num_faces() - 1));
    if (by_splits) {
      r.put("osn_splits", *by_splits);
      agree = agree && *by_splits + 1 == cfc;
    } else {
      r.put("osn_splits", "none within k_max");
      agree = agree && k_max && cfc > *k_max + 1;
    }
  } else {
    r.put("osn_splits", "skipped (face cap)");
  }
  const std::size_t fvs = min_fvs(dual(graph)).nodes.size();
  r.put("fvs", fvs);
  agree = agree && fvs == cfc;
  const std::size_t osn = solve_osn(graph).osn;
  r.put("osn_solver", osn);
  agree = agree && osn + 1 == cfc;

  bool cubic = true;
  for (VertexId v = 0; v < static_cast<VertexId>(graph.num_vertices()); ++v) {
    cubic = cubic && graph.degree(v) == 3;
  }
  if (cubic) {
    VcInstance instance{graph, 0};
    const std::size_t vc = brute_min_vc(graph).size();
    const std::size_t dstar = brute_min_cfc(build_cfc_instance(instance).dstar).size();
    r.put("vc", vc);
    r.put("cfc_dstar", dstar);
    agree = agree && vc == dstar;
  }
  r.put("agree", agree ? "yes" : "no");
  return agree;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outerplane splitting number of plane biconnected graphs", "osn"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Print key=value lines");

  std::string input, second, output, svg_single;
  std::vector<std::string> svg_pair;
  std::vector<long long> params;
  std::uint64_t seed = 0;
  std::optional<int> depth;
  std::optional<std::size_t> k_max;
  bool apply = false, solve = false;

  auto* osn_cmd = app.add_subcommand("osn", "Solve and print the split sequence");
  osn_cmd->add_option("file", input, "Input .rot file")->required();
  osn_cmd->add_option("--svg", svg_pair, "Before and after drawings")->expected(2);

  auto* split_cmd = app.add_subcommand("split", "Replay a split sequence");
  split_cmd->add_flag("--apply", apply, "Apply the sequence")->required();
  split_cmd->add_option("file", input, "Input .rot file")->required();
  split_cmd->add_option("sequence", second, "Split sequence file")->required();
  split_cmd->add_option("-o,--output", output, "Write the result here");
  split_cmd->add_option("--svg", svg_single, "Drawing of the result");

  auto* verify_cmd = app.add_subcommand("verify", "Report structural properties");
  verify_cmd->add_option("file", input, "Input .rot file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", input, "k4|cycle|fan|octahedron|icosahedron|cube|prism|"
                                       "3tree|triangulation|biconnected")
      ->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("-o,--output", output, "Output .rot file");

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate lower and upper bounds");
  bounds_cmd->add_option("file", input, "Input .rot file")->required();
  bounds_cmd->add_option("--depth", depth, "Depth d if the input is the 3-tree T_d");
  bounds_cmd->add_flag("--solve", solve, "Also compute osn");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the face cover instance of a cubic graph");
  reduce_cmd->add_option("file", input, "Cubic biconnected .rot file")->required();
  reduce_cmd->add_option("-o,--output", output, "Output .rot file");

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check solver and brute-force oracles");
  oracle_cmd->add_option("file", input, "Input .rot file")->required();
  oracle_cmd->add_option("--k-max", k_max, "Depth limit of the split search");

  for (auto* cmd : {osn_cmd, verify_cmd, bounds_cmd, oracle_cmd}) {
    cmd->add_flag("--porcelain", porcelain, "Print key=value lines");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (osn_cmd->parsed()) {
      run_osn(input, svg_pair, porcelain, out);
    } else if (split_cmd->parsed()) {
      run_split(input, second, output, svg_single, out);
    } else if (verify_cmd->parsed()) {
      run_verify(input, porcelain, out);
    } else if (gen_cmd->parsed()) {
      run_gen(input, params, seed, output, out);
    } else if (bounds_cmd->parsed()) {
      run_bounds(input, depth, solve, porcelain, out);
    } else if (reduce_cmd->parsed()) {
      run_reduce(input, output, out);
    } else if (oracle_cmd->parsed()) {
      if (!run_oracle(input, k_max, porcelain, out)) {
        err << "error: oracles disagree\n";
        return kExitDomainError;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace osn
