// Copyright 2026 The stabline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// stabline: transversals of parallel segment families.
//
// Exit status: 0 when a transversal exists, 1 when none does, 2 on bad input
// or usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stabline/stabline.hpp"

namespace {

constexpr int kFeasible = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;

using stabline::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw stabline::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

stabline::InstanceDocument load(const std::string& path) {
  return stabline::parse_instance(read_file(path));
}

int status(const stabline::SolveResult& r) {
  if (r.note && !r.feasible) std::cerr << "note: " << *r.note << '\n';
  return r.feasible ? kFeasible : kInfeasible;
}

int run_check(const std::string& path) {
  const auto r = stabline::solve_instance(load(path));
  Json out{{"feasible", r.feasible}, {"unique", r.unique}};
  if (r.witness) out["witness"] = stabline::to_json(*r.witness);
  std::cout << out.dump() << '\n';
  return status(r);
}

int run_solve(const std::string& path, const std::string& method_name) {
  const auto method = stabline::parse_method(method_name);
  if (!method) throw stabline::ParseError("unknown method " + method_name);
  const auto r = stabline::solve_instance(load(path));
  if (!r.feasible) {
    std::cout << Json{{"feasible", false}}.dump() << '\n';
    return status(r);
  }
  std::cout << stabline::to_json(r.lines.at(*method)).dump() << '\n';
  return kFeasible;
}

int run_polygon(const std::string& path) {
  const auto r = stabline::solve_instance(load(path));
  Json vertices = Json::array();
  for (const auto& v : r.polygon.vertices()) vertices.push_back(stabline::to_json(v));
  Json out{{"classification", stabline::to_string(r.polygon.kind())},
           {"vertices", std::move(vertices)},
           {"area", stabline::to_json(r.area)},
           {"centroid", nullptr}};
  if (r.feasible && !r.polygon.empty())
    out["centroid"] = stabline::to_json(stabline::line_to_dual(
        r.canonical_lines.at(stabline::SelectorMethod::ContinuousBarycenter)));
  std::cout << out.dump() << '\n';
  return status(r);
}

int run_oracle(const std::string& path) {
  const auto canon = stabline::canonicalize(load(path));
  std::optional<stabline::DualPoint> point;
  if (canon.family.size() >= 2) {
    point = stabline::oracle_feasible(canon.family);
  } else {
    point = stabline::line_to_dual(*stabline::feasibility(canon.family).witness);
  }
  Json out{{"feasible", point.has_value()}};
  if (point) out["point"] = stabline::to_json(*point);
  std::cout << out.dump() << '\n';
  return point ? kFeasible : kInfeasible;
}

int run_plot(const std::string& path, const std::string& out_path, bool dual,
             const std::vector<std::string>& method_names) {
  std::vector<stabline::SelectorMethod> methods;
  for (const auto& name : method_names) {
    const auto m = stabline::parse_method(name);
    if (!m) throw stabline::ParseError("unknown method " + name);
    methods.push_back(*m);
  }
  if (method_names.empty())
    methods.assign(stabline::kAllMethods.begin(), stabline::kAllMethods.end());

  const auto doc = load(path);
  const auto r = stabline::solve_instance(doc);
  const std::string svg = stabline::emit_svg(
      doc, r, dual ? stabline::PlotMode::Dual : stabline::PlotMode::Primal, methods);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw stabline::ParseError("cannot write " + out_path);
  out << svg;
  return status(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal lines of parallel segment families, in exact arithmetic"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "centroid";
  std::string out_path;
  bool dual = false;
  std::vector<std::string> methods;
  const std::string method_help =
      "extreme-min | extreme-max | midpoint | discrete | centroid";

  auto* check = app.add_subcommand("check", "Decide whether a transversal exists");
  check->add_option("file", file, "Instance JSON")->required();

  auto* solve = app.add_subcommand("solve", "Print one selected transversal");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_option("--method", method, method_help)
      ->check(CLI::IsMember({"extreme-min", "extreme-max", "midpoint", "discrete",
                             "centroid"}));

  auto* polygon = app.add_subcommand("polygon", "Print the polygon of all transversals");
  polygon->add_option("file", file, "Instance JSON")->required();

  auto* plot = app.add_subcommand("plot", "Write an SVG plot");
  plot->add_option("file", file, "Instance JSON")->required();
  plot->add_option("--out", out_path, "Output SVG path")->required();
  plot->add_flag("--dual", dual, "Plot the plane of lines instead of the segments");
  plot->add_option("--methods", methods, method_help)->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "Brute-force feasibility check");
  oracle->add_option("file", file, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check->parsed()) return run_check(file);
    if (solve->parsed()) return run_solve(file, method);
    if (polygon->parsed()) return run_polygon(file);
    if (plot->parsed()) return run_plot(file, out_path, dual, methods);
    if (oracle->parsed()) return run_oracle(file);
  } catch (const stabline::ColumnConflictError& e) {
    std::cout << Json{{"feasible", false}}.dump() << '\n';
    std::cerr << "note: " << e.what() << '\n';
    return kInfeasible;
  } catch (const stabline::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
