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

#include "edgelab/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "edgelab/error.hpp"
#include "edgelab/parallel.hpp"

namespace edgelab {

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"p-theta", "edge",  "edge-general", "state-7-6",
                                                 "choi",    "face",  "p5"};
  return names;
}

BipartiteOperator build_family(const FamilyParams& p) {
  if (p.family == "p-theta") return BipartiteOperator(3, 1, p_theta(p.theta));
  if (p.family == "edge") return edge_state({p.b, p.theta});
  if (p.family == "edge-general") return generalized_edge_state({p.b, p.theta});
  if (p.family == "state-7-6") return state_7_6(p.b);
  if (p.family == "choi") {
    const ChoiParams cp{p.a, p.b, p.c};
    if (!(cp.a >= 0.0 && cp.b >= 0.0 && cp.c >= 0.0)) {
      throw Error(ErrorKind::InvalidParam, "Choi parameters must be nonnegative");
    }
    return choi_matrix(cp);
  }
  if (p.family == "face") return face_state(p.b, {p.xi_eta, p.eta_zeta, p.zeta_xi, p.theta});
  if (p.family == "p5") {
    return face_state(p.b, gram_from(p.theta, type_p5_offdiagonals(p.theta, p.target_p)));
  }
  throw Error(ErrorKind::InvalidParam, "unknown family '" + p.family + "'");
}

double parse_pi_fraction(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v * std::numbers::pi;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double n = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const double d = std::stod(den, &used);
    if (used != den.size() || d == 0.0) throw std::invalid_argument(text);
    return n / d * std::numbers::pi;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidParam, "cannot read '" + text + "' as a multiple of pi");
  }
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["isPSD"] = c.is_psd;
  j["isPPT"] = c.is_ppt;
  j["type"] = Json::array({c.type.p, c.type.q});
  j["kernelDims"] = Json::array({c.kernel_dims.first, c.kernel_dims.second});
  j["admissibility"] = std::string(to_string(c.admissibility));
  j["tolerances"] = Json{{"relTol", c.rel_tol}, {"absTol", c.abs_tol}};
  return j;
}

Json certificate_to_json(const CertificateTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"step", s.name}, {"holds", s.holds}, {"witness", s.witness},
                         {"detail", s.detail}});
  }
  Json j;
  j["verdict"] = std::string(to_string(t.verdict));
  j["b"] = t.params.b;
  j["theta"] = t.params.theta;
  j["steps"] = std::move(steps);
  return j;
}

Json edge_check_report(const BipartiteOperator& s,
                       const std::optional<EdgeFamilyParams>& analytic_params,
                       const EdgeCheckOptions& opts) {
  std::optional<CertificateTrace> certificate;
  std::string analytic_status;
  if (opts.analytic) {
    if (!analytic_params) {
      analytic_status = "UnsupportedInput";
    } else {
      try {
        certificate = verify_edge_analytic(*analytic_params);
        analytic_status = std::string(to_string(certificate->verdict));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ConditionViolated) throw;
        analytic_status = "ConditionViolated";
      }
    }
  }

  const EdgeSearchResult search = product_vector_search(s, opts.search);
  const bool certified =
      certificate && certificate->verdict == CertificateVerdict::EdgeCertified;

  Json j;
  j["verdict"] = certified ? std::string("Edge") : std::string(to_string(search.verdict));
  j["certifiedBy"] = certified ? "analytic" : "numeric";
  j["bestObjective"] = search.best_objective;
  j["numericVerdict"] = std::string(to_string(search.verdict));
  j["starts"] = search.starts;
  j["seed"] = opts.search.seed;
  if (search.verdict == SearchVerdict::ProductVectorFound) {
    j["bestX"] = vector_to_json(search.best_x);
    j["bestY"] = vector_to_json(search.best_y);
  }
  if (opts.analytic) {
    j["analyticStatus"] = analytic_status;
    if (certificate) j["certificate"] = certificate_to_json(*certificate);
  }
  return j;
}

double GridAxis::at(int i) const {
  if (steps <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

GridAxis parse_grid_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorKind::InvalidParam, "grid axis '" + text + "' is not name=lo:hi:steps");
  }
  GridAxis axis;
  axis.name = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream rest(text.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ':');) parts.push_back(part);
  try {
    if (parts.size() == 1) {
      axis.lo = axis.hi = std::stod(parts[0]);
      axis.steps = 1;
    } else if (parts.size() == 3) {
      axis.lo = std::stod(parts[0]);
      axis.hi = std::stod(parts[1]);
      axis.steps = std::stoi(parts[2]);
    } else {
      throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidParam, "grid axis '" + text + "' is not name=lo:hi:steps");
  }
  if (axis.steps < 1) throw Error(ErrorKind::InvalidParam, "grid axis needs steps >= 1");
  return axis;
}

namespace {

void set_param(FamilyParams& p, const std::string& name, double value) {
  if (name == "b") {
    p.b = value;
  } else if (name == "theta") {
    p.theta = value;
  } else if (name == "a") {
    p.a = value;
  } else if (name == "c") {
    p.c = value;
  } else if (name == "target-p") {
    p.target_p = static_cast<int>(std::lround(value));
  } else {
    throw Error(ErrorKind::InvalidParam,
                "unknown sweep parameter '" + name + "' (use b, theta, a, c, target-p)");
  }
}

}  // namespace

std::string run_sweep(const SweepSpec& spec) {
  if (spec.grid.empty()) throw Error(ErrorKind::InvalidParam, "sweep grid is empty");
  std::size_t points = 1;
  for (const auto& axis : spec.grid) {
    if (axis.steps < 1) throw Error(ErrorKind::InvalidParam, "grid axis needs steps >= 1");
    FamilyParams probe;
    set_param(probe, axis.name, axis.lo);  // validates the name
    points *= static_cast<std::size_t>(axis.steps);
  }

  std::vector<std::string> rows(points);
  parallel_for(points, spec.threads, [&](std::size_t index) {
    FamilyParams p = spec.base;
    std::vector<double> values(spec.grid.size());
    std::size_t rem = index;
    for (std::size_t k = spec.grid.size(); k-- > 0;) {
      const auto steps = static_cast<std::size_t>(spec.grid[k].steps);
      values[k] = spec.grid[k].at(static_cast<int>(rem % steps));
      rem /= steps;
    }
    for (std::size_t k = 0; k < values.size(); ++k) set_param(p, spec.grid[k].name, values[k]);

    const BipartiteOperator s = build_family(p);
    const Classification c = classify(s);
    std::string row;
    for (const double v : values) row += format_double(v) + ",";
    row += c.is_ppt ? "true" : "false";
    row += "," + std::to_string(c.type.p) + "," + std::to_string(c.type.q);
    if (spec.search) {
      SearchConfig cfg = spec.search_config;
      cfg.threads = 1;  // the grid is already parallel
      row += "," + format_double(product_vector_search(s, cfg).best_objective);
    }
    rows[index] = std::move(row);
  });

  std::string out;
  for (const auto& axis : spec.grid) out += axis.name + ",";
  out += "isPPT,p,q";
  if (spec.search) out += ",bestObjective";
  out += "\n";
  for (const auto& row : rows) out += row + "\n";
  return out;
}

const std::vector<RankType>& target_types() {
  static const std::vector<RankType> targets = {{5, 5}, {6, 5}, {7, 5}, {8, 5},
                                                {5, 6}, {6, 6}, {7, 6}, {8, 6}};
  return targets;
}

TypeTable build_type_table(double b, double theta) {
  const Complex one_phase = std::polar(1.0, 0.3);
  const Complex two_phase = std::polar(1.0, -0.1);
  const Complex three_phase = std::polar(1.0, 0.2);

  struct Rep {
    std::string label;
    BipartiteOperator state;
  };
  std::vector<Rep> reps;
  reps.push_back({"A(b,theta)", edge_state({b, theta})});
  reps.push_back({"X: (xi|eta) unimodular", face_state(b, {one_phase, 0.0, 0.0, theta})});
  reps.push_back({"X: two unimodular", face_state(b, {one_phase, two_phase, 0.0, theta})});
  reps.push_back(
      {"X: three unimodular", face_state(b, {one_phase, two_phase, three_phase, theta})});
  const char* p5_labels[] = {"X: P[theta]", "X: P[1,1,r]", "X: P[r,-r,1]", "X: P[-cos,-cos,-cos]"};
  for (int p = 5; p <= 8; ++p) {
    reps.push_back(
        {p5_labels[p - 5], face_state(b, gram_from(theta, type_p5_offdiagonals(theta, p)))});
  }
  reps.push_back({"(7,6) state, b=2", state_7_6(2.0)});

  TypeTable table;
  table.targets = target_types();
  for (const auto& rep : reps) {
    const Classification c = classify(rep.state);
    table.entries.push_back({rep.label, c.type, c.is_ppt});
    if (c.is_ppt) table.achieved.insert(c.type);
  }
  for (const auto& t : table.targets) {
    if (!table.achieved.count(t)) table.missing.push_back(t);
  }
  return table;
}

std::string render_type_table(const TypeTable& table) {
  std::ostringstream out;
  out << "Representatives:\n";
  for (const auto& e : table.entries) {
    out << "  " << e.label << std::string(e.label.size() < 24 ? 24 - e.label.size() : 1, ' ')
        << "(" << e.type.p << "," << e.type.q << ")" << (e.is_ppt ? "  PPT" : "  not PPT") << "\n";
  }
  auto is_target = [&](RankType t) {
    return std::find(table.targets.begin(), table.targets.end(), t) != table.targets.end();
  };
  out << "\n  q\n";
  for (int q = 9; q >= 1; --q) {
    out << "  " << q << " |";
    for (int p = 1; p <= 9; ++p) {
      const RankType t{p, q};
      char mark = '.';
      if (table.achieved.count(t) && is_target(t)) {
        mark = '#';
      } else if (is_target(t)) {
        mark = '?';
      } else if (p == 4 && q == 4) {
        mark = '-';
      } else if (table.achieved.count(t)) {
        mark = '+';
      }
      out << ' ' << mark;
    }
    out << "\n";
  }
  out << "    +------------------\n     ";
  for (int p = 1; p <= 9; ++p) out << ' ' << p;
  out << "  p\n\n";
  out << "  # edge type realized here   ? expected, missing   - (4,4): not constructed here\n";
  out << "  + other PPT type realized   . nothing\n\n";
  out << "Possible 3x3 edge types, up to swapping p and q: (4,4) (5,5) (6,5) (7,5) (8,5) (6,6) (7,6) (8,6)\n";
  if (table.missing.empty()) {
    out << "All " << table.targets.size() << " target types realized.\n";
  } else {
    out << "Missing:";
    for (const auto& t : table.missing) out << " (" << t.p << "," << t.q << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace edgelab
