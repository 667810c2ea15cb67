// Copyright 2026 The edgelab Authors
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

#include "edgelab/cli.hpp"

#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "edgelab/error.hpp"
#include "edgelab/report.hpp"

namespace edgelab {

namespace {

struct FamilyOptions {
  FamilyParams params;
  std::string theta_frac;
  std::vector<double> xi_eta;
  std::vector<double> eta_zeta;
  std::vector<double> zeta_xi;
};

void add_family_options(CLI::App* cmd, FamilyOptions& o) {
  cmd->add_option("--b", o.params.b, "b > 0 (for choi: the weight b)");
  auto* theta = cmd->add_option("--theta", o.params.theta, "angle in radians");
  cmd->add_option("--theta-frac", o.theta_frac, "angle as a multiple of pi, e.g. 1/6")
      ->excludes(theta);
  cmd->add_option("--a", o.params.a, "Choi weight a");
  cmd->add_option("--c", o.params.c, "Choi weight c");
  cmd->add_option("--target-p", o.params.target_p, "rank of the p5 face state (5..8)");
  cmd->add_option("--xi-eta", o.xi_eta, "(xi|eta) as RE IM")->expected(2);
  cmd->add_option("--eta-zeta", o.eta_zeta, "(eta|zeta) as RE IM")->expected(2);
  cmd->add_option("--zeta-xi", o.zeta_xi, "(zeta|xi) as RE IM")->expected(2);
}

FamilyParams resolve(const FamilyOptions& o) {
  FamilyParams p = o.params;
  if (!o.theta_frac.empty()) p.theta = parse_pi_fraction(o.theta_frac);
  auto complex_of = [](const std::vector<double>& v) {
    return v.size() == 2 ? Complex(v[0], v[1]) : Complex(0.0, 0.0);
  };
  p.xi_eta = complex_of(o.xi_eta);
  p.eta_zeta = complex_of(o.eta_zeta);
  p.zeta_xi = complex_of(o.zeta_xi);
  return p;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
  file << text;
}

// Input is either a matrix file or a --family shorthand.
struct InputSource {
  std::string path;
  std::string family;
  FamilyOptions options;

  BipartiteOperator load() const {
    if (!path.empty() && !family.empty()) {
      throw Error(ErrorKind::InvalidParam, "give either an input file or --family, not both");
    }
    if (!path.empty()) return read_matrix_file(path);
    if (family.empty()) throw Error(ErrorKind::InvalidParam, "no input file or --family given");
    FamilyParams p = resolve(options);
    p.family = family;
    return build_family(p);
  }

  std::optional<EdgeFamilyParams> edge_params() const {
    if (family != "edge") return std::nullopt;
    const FamilyParams p = resolve(options);
    return EdgeFamilyParams{p.b, p.theta};
  }
};

void add_input(CLI::App* cmd, InputSource& in) {
  cmd->add_option("input", in.path, "matrix file (JSON with m, n, re, im)");
  cmd->add_option("--family", in.family, "construct the input instead of reading it")
      ->check(CLI::IsMember(family_names()));
  add_family_options(cmd, in.options);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, classify and edge-check bi-qutrit PPT states."};
  app.name("edgelab");
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "write a family member as a matrix file");
  std::string construct_family;
  FamilyOptions construct_opts;
  std::string construct_out;
  construct->add_option("family", construct_family, "family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  add_family_options(construct, construct_opts);
  construct->add_option("-o,--out", construct_out, "output path (default stdout)");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "PSD/PPT flags, type (p,q), admissibility");
  InputSource classify_in;
  double rel_tol = kDefaultRankTol;
  double abs_tol = kDefaultPsdTol;
  add_input(classify_cmd, classify_in);
  classify_cmd->add_option("--rel-tol", rel_tol, "relative rank tolerance");
  classify_cmd->add_option("--abs-tol", abs_tol, "PSD tolerance");

  // edge-check
  auto* edge = app.add_subcommand("edge-check", "search for product vectors in the range pair");
  InputSource edge_in;
  EdgeCheckOptions edge_opts;
  add_input(edge, edge_in);
  edge->add_option("--starts", edge_opts.search.starts, "random starts")->check(CLI::PositiveNumber);
  edge->add_option("--seed", edge_opts.search.seed, "RNG seed");
  edge->add_option("--max-iters", edge_opts.search.max_iters, "iterations per start")
      ->check(CLI::PositiveNumber);
  edge->add_option("--threads", edge_opts.search.threads, "worker threads (0: auto)");
  edge->add_flag("--analytic", edge_opts.analytic, "try the analytic certificate for A(b,theta)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "classify a family over a parameter grid (CSV)");
  std::string sweep_family;
  FamilyOptions sweep_opts;
  std::vector<std::string> sweep_grid;
  std::string sweep_out;
  SweepSpec sweep_spec;
  sweep->add_option("--family", sweep_family, "family name")
      ->required()
      ->check(CLI::IsMember(family_names()));
  add_family_options(sweep, sweep_opts);
  sweep->add_option("--grid", sweep_grid, "axis as name=lo:hi:steps or name=value")
      ->required()
      ->take_all();
  sweep->add_option("-o,--out", sweep_out, "CSV path (default stdout)");
  sweep->add_flag("--search", sweep_spec.search, "add bestObjective from the product vector search");
  sweep->add_option("--seed", sweep_spec.search_config.seed, "RNG seed");
  sweep->add_option("--starts", sweep_spec.search_config.starts, "random starts")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-iters", sweep_spec.search_config.max_iters, "iterations per start")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--threads", sweep_spec.threads, "worker threads (0: auto)");

  // table
  auto* table = app.add_subcommand("table", "realize every target type at b=1, theta=pi/6");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "rebuild A(b,0) from its product vectors");
  double decompose_b = 1.0;
  decompose->add_option("--b", decompose_b, "b > 0")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("edgelab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*construct) {
      FamilyParams p = resolve(construct_opts);
      p.family = construct_family;
      emit(dump_json(matrix_to_json(build_family(p))) + "\n", construct_out, out);
      return 0;
    }
    if (*classify_cmd) {
      const Classification c = classify(classify_in.load(), rel_tol, abs_tol);
      out << dump_json(classification_to_json(c)) << "\n";
      return c.is_ppt ? 0 : 1;
    }
    if (*edge) {
      const BipartiteOperator s = edge_in.load();
      out << dump_json(edge_check_report(s, edge_in.edge_params(), edge_opts)) << "\n";
      return 0;
    }
    if (*sweep) {
      sweep_spec.base = resolve(sweep_opts);
      sweep_spec.base.family = sweep_family;
      for (const auto& axis : sweep_grid) sweep_spec.grid.push_back(parse_grid_axis(axis));
      emit(run_sweep(sweep_spec), sweep_out, out);
      return 0;
    }
    if (*table) {
      const TypeTable t = build_type_table(1.0, std::numbers::pi / 6.0);
      out << render_type_table(t);
      return t.missing.empty() ? 0 : 1;
    }
    if (*decompose) {
      Json j;
      j["b"] = decompose_b;
      j["maxError"] = reconstruct_separable(decompose_b);
      out << dump_json(j) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace edgelab
