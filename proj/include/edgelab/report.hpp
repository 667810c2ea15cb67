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

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgelab/classify.hpp"
#include "edgelab/io.hpp"
#include "edgelab/search.hpp"
#include "edgelab/states.hpp"

namespace edgelab {

/// Named family plus every parameter any family may read.
struct FamilyParams {
  std::string family = "edge";
  double b = 1.0;
  double theta = 0.0;
  double a = 2.0;
  double c = 1.0;
  int target_p = 8;
  Complex xi_eta{0.0, 0.0};
  Complex eta_zeta{0.0, 0.0};
  Complex zeta_xi{0.0, 0.0};
};

/// p-theta, edge, edge-general, state-7-6, choi, face, p5
const std::vector<std::string>& family_names();

/// p-theta is returned as a 3 (x) 1 operator.
BipartiteOperator build_family(const FamilyParams& p);

/// Parses "1/6", "-1/3" or "0.25" into that multiple of pi.
double parse_pi_fraction(const std::string& text);

Json classification_to_json(const Classification& c);
Json certificate_to_json(const CertificateTrace& t);

struct EdgeCheckOptions {
  SearchConfig search;
  bool analytic = false;
};

/// `analytic_params` is set when the input is A(b, theta) and the analytic
/// tier may be attempted.
Json edge_check_report(const BipartiteOperator& s,
                       const std::optional<EdgeFamilyParams>& analytic_params,
                       const EdgeCheckOptions& opts);

struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double at(int i) const;
};

/// "name=lo:hi:steps" or "name=value".
GridAxis parse_grid_axis(const std::string& text);

struct SweepSpec {
  FamilyParams base;
  std::vector<GridAxis> grid;  // first axis varies slowest
  bool search = false;
  SearchConfig search_config;
  int threads = 0;
};

/// Columns: one per grid axis in the given order, then isPPT, p, q and,
/// with search enabled, bestObjective. Rows follow grid order.
std::string run_sweep(const SweepSpec& spec);

struct TableEntry {
  std::string label;
  RankType type;
  bool is_ppt = false;
};

struct TypeTable {
  std::vector<TableEntry> entries;
  std::set<RankType> achieved;
  std::vector<RankType> targets;
  std::vector<RankType> missing;
};

/// The eight edge types built from the (8,6) family and its face.
const std::vector<RankType>& target_types();

TypeTable build_type_table(double b, double theta);
std::string render_type_table(const TypeTable& table);

}  // namespace edgelab
