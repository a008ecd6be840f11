// Copyright 2026 The freetree Authors
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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "freetree/generators.hpp"
#include "freetree/json_io.hpp"
#include "freetree/report.hpp"

namespace {

using freetree::Json;
using freetree::Metric;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitVerifyFailed = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw freetree::ParseError("NotFound: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "matrix" covers both the JSON document and the CSV alternative (dispatch
// on the leading brace); "tree" is an edge-weighted tree whose labeled nodes
// carry the induced path metric. "auto" sniffs: CSV unless the file starts
// with '{', tree JSON when an "edges" key is present.
Metric load_space(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  bool looks_json = first != std::string::npos && text[first] == '{';
  if (format == "tree") return freetree::space_from_tree_json(Json::parse(text));
  if (!looks_json) {
    if (format == "json") throw freetree::ParseError("input is not JSON");
    return freetree::space_from_csv(text);
  }
  Json j = Json::parse(text);
  if (format == "auto" && j.contains("edges"))
    return freetree::space_from_tree_json(j);
  return freetree::space_from_json(j);
}

void emit(const Json& report, bool as_json, const std::string& out,
          const std::string& human) {
  if (!out.empty()) {
    std::ofstream f(out);
    f << report.dump(2) << "\n";
  }
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
}

std::string human_check(const Json& p) {
  std::ostringstream ss;
  ss << "valid metric space (" << p.at("size").get<int>() << " points)\n";
  ss << "four-point: "
     << (p.at("four_point").at("pass").get<bool>() ? "pass" : "fail");
  if (p.at("four_point").contains("witness"))
    ss << "  witness " << p.at("four_point").at("witness").dump();
  ss << "\nultrametric: "
     << (p.at("ultrametric").at("pass").get<bool>() ? "pass" : "fail");
  if (p.at("ultrametric").contains("witness"))
    ss << "  witness " << p.at("ultrametric").at("witness").dump();
  ss << "\ndiam = " << p.at("diam").get<std::string>() << " (~"
     << p.at("diam_approx").get<std::string>() << ")\n";
  if (p.at("sep").is_null())
    ss << "sep: undefined (" << p.at("sep_error").get<std::string>() << ")\n";
  else
    ss << "sep = " << p.at("sep").get<std::string>() << " (~"
       << p.at("sep_approx").get<std::string>() << ")\n";
  return ss.str();
}

std::string human_realize(const Json& p) {
  std::ostringstream ss;
  if (p.contains("error")) {
    ss << p.at("error").get<std::string>() << ": quadruple "
       << p.at("quadruple").dump() << "\n";
    return ss.str();
  }
  ss << "tree: " << p.at("tree").at("nodes").size() << " nodes, "
     << p.at("tree").at("edges").size() << " edges\n";
  ss << "branching points: " << p.at("branching_points").dump() << "\n";
  ss << "missing branch points: " << p.at("missing_branch_points").dump()
     << "\n";
  return ss.str();
}

std::string human_verdict(const Json& p) {
  const Json& c = p.at("certificate");
  std::ostringstream ss;
  ss << "verdict: " << c.at("tag").get<std::string>() << "\n";
  if (c.at("tag") == "NotZeroHyperbolic")
    ss << "violating quadruple: " << c.at("quadruple").dump() << "\n";
  if (c.at("tag") == "IsometricToL1")
    ss << "l1 dimension: " << c.at("dimension").get<int>() << "\n";
  if (c.at("tag") == "NotIsometric") {
    ss << "missing branch node: " << c.at("branch_node").get<int>() << "\n";
    ss << "primal witness distance = "
       << c.at("primal").at("dist").get<std::string>() << " (<= 1)\n";
    ss << "dual witness distance = "
       << c.at("dual").at("dist").get<std::string>() << " (< 2)\n";
  }
  return ss.str();
}

std::string human_bm(const Json& p) {
  std::ostringstream ss;
  if (p.contains("error")) {
    ss << "no bound: " << p.at("error").get<std::string>() << "\n";
    return ss.str();
  }
  const Json& bm = p.at("bm");
  ss << "formula bound = " << bm.at("formula_bound").get<std::string>()
     << " (~" << bm.at("formula_bound_approx").get<std::string>() << ")\n";
  ss << "certified bound = " << bm.at("certified_bound").get<std::string>()
     << " (~" << bm.at("certified_bound_approx").get<std::string>() << ")\n";
  ss << "epsilon = " << bm.at("epsilon").get<std::string>()
     << ", worst midpoint pair " << bm.at("worst_pair").dump() << " with norm "
     << bm.at("worst_midpoint_norm").get<std::string>() << "\n";
  return ss.str();
}

int run_verify(const std::string& path) {
  Json report = Json::parse(slurp(path));
  auto problems = freetree::verify_report(report);
  if (problems.empty()) {
    std::cout << "verification passed\n";
    return kExitOk;
  }
  for (const auto& p : problems) std::cout << "FAIL: " << p << "\n";
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of finite pointed metric spaces: R-tree "
               "realization, Lipschitz-free norms, l1-isometry certificates "
               "and Banach-Mazur lower bounds"};
  app.require_subcommand(1);

  std::string input, out, format = "auto", vec_path, fn_path;
  std::string kind = "random-tree-metric";
  bool as_json = false;
  int size = 5;
  uint64_t seed = 0;
  std::string check_path;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input)
      cmd->add_option("input", input, "space file (JSON, or CSV matrix)")
          ->required();
    cmd->add_flag("--json", as_json, "print the full report as JSON");
    cmd->add_option("--out", out, "write the JSON report to a file");
    cmd->add_option("--format", format,
                    "input format: auto|json|matrix|tree")
        ->check(CLI::IsMember({"auto", "json", "matrix", "tree"}));
  };

  auto* c_check = app.add_subcommand("check", "validate and run the scalar checks");
  add_common(c_check);
  auto* c_realize = app.add_subcommand("realize", "build the minimal R-tree");
  add_common(c_realize);
  auto* c_norm = app.add_subcommand("norm", "free-space or Lipschitz norm");
  add_common(c_norm);
  c_norm->add_option("--vector", vec_path, "FreeVector JSON file");
  c_norm->add_option("--function", fn_path, "LipFunction JSON file");
  auto* c_verdict = app.add_subcommand("verdict", "l1-isometry certificate");
  add_common(c_verdict);
  c_verdict->add_option("--check", check_path,
                        "re-verify a stored certificate report instead");
  c_verdict->get_option("input")->required(false);
  auto* c_bm = app.add_subcommand("bm", "Banach-Mazur lower bounds");
  add_common(c_bm);
  auto* c_verify = app.add_subcommand("verify", "re-derive a stored report");
  c_verify->add_option("report", check_path, "report file")->required();
  auto* c_gen = app.add_subcommand("gen", "generate a random instance");
  c_gen->add_option("--kind", kind,
                    "random-tree-metric | random-ultrametric | "
                    "perturbed-non-hyperbolic");
  c_gen->add_option("--size", size, "number of points")->required();
  c_gen->add_option("--seed", seed, "RNG seed");
  c_gen->add_option("--out", out, "write the space JSON to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_gen->parsed()) {
      Json j = freetree::gen_instance_json(kind, size, seed);
      if (!out.empty()) {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
      } else {
        std::cout << j.dump(2) << "\n";
      }
      return kExitOk;
    }
    if (c_verify->parsed()) return run_verify(check_path);
    if (c_verdict->parsed() && !check_path.empty()) return run_verify(check_path);
    if (c_verdict->parsed() && input.empty()) {
      std::cerr << "verdict: need an input space or --check <report>\n";
      return kExitBadInput;
    }

    Metric m = load_space(input, format);
    if (c_check->parsed()) {
      Json p = freetree::payload_check(m);
      emit(freetree::make_report("check", m, p), as_json, out, human_check(p));
    } else if (c_realize->parsed()) {
      Json p = freetree::payload_realize(m);
      emit(freetree::make_report("realize", m, p), as_json, out,
           human_realize(p));
    } else if (c_norm->parsed()) {
      if (vec_path.empty() == fn_path.empty()) {
        std::cerr << "norm: need exactly one of --vector or --function\n";
        return kExitBadInput;
      }
      std::optional<freetree::FreeVector> vec;
      std::optional<freetree::LipFunction> fn;
      if (!vec_path.empty())
        vec = freetree::freevector_from_json(m, Json::parse(slurp(vec_path)));
      else
        fn = freetree::lipfunction_from_json(m, Json::parse(slurp(fn_path)));
      Json p = freetree::payload_norm(m, vec, fn);
      emit(freetree::make_report("norm", m, p), as_json, out,
           "norm = " + p.at("norm").get<std::string>() + " (~" +
               p.at("norm_approx").get<std::string>() + ")\n");
    } else if (c_verdict->parsed()) {
      Json p = freetree::payload_verdict(m);
      emit(freetree::make_report("verdict", m, p), as_json, out,
           human_verdict(p));
    } else if (c_bm->parsed()) {
      Json p = freetree::payload_bm(m);
      emit(freetree::make_report("bm", m, p), as_json, out, human_bm(p));
    }
    return kExitOk;
  } catch (const freetree::MetricError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const freetree::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const Json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
