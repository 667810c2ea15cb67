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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgelab/linalg.hpp"
#include "edgelab/states.hpp"

namespace edgelab {

enum class Admissibility {
  BelowLowerBound,
  Admissible,
  ForcesProductVector,
};

std::string_view to_string(Admissibility a);

struct RankType {
  int p = 0;
  int q = 0;

  friend bool operator==(const RankType&, const RankType&) = default;
  friend auto operator<=>(const RankType&, const RankType&) = default;
};

struct Classification {
  bool is_psd = false;
  bool is_ppt = false;
  RankType type;
  std::pair<int, int> kernel_dims{0, 0};
  Admissibility admissibility = Admissibility::BelowLowerBound;
  double rel_tol = kDefaultRankTol;
  double abs_tol = kDefaultPsdTol;
};

/// sum_{r+s=m-1} (-1)^r C(k, r) C(l, s).
long long alternating_binomial_sum(int m, int k, int l);

/// Rank-based admissibility of an m (x) n edge state of type (p, q): too
/// small a rank is always separable, and large enough kernels can't avoid a
/// product vector x (x) y in the range with conj(x) (x) y in the other range.
Admissibility rank_bounds(int m, int n, int p, int q);

Classification classify(const BipartiteOperator& s, double rel_tol = kDefaultRankTol,
                        double abs_tol = kDefaultPsdTol);

struct RangeCriterionResult {
  bool holds = false;
  std::pair<int, int> span_dims{0, 0};
  double max_residual = 0.0;
};

/// Whether the pairs span R(s) with x (x) y and R(s^tau) with conj(x) (x) y.
RangeCriterionResult check_range_criterion(const BipartiteOperator& s,
                                           const std::vector<ProductPair>& pairs,
                                           double residual_tol = 1e-9);

/// max-norm distance between (1/3b) sum z z^* and the given target,
/// edge_state(b, 0) by default.
double reconstruct_separable(double b);
double reconstruct_separable(double b, const BipartiteOperator& target);

/// a >= 2 and b c >= 1.
bool phi_ppt_region(const ChoiParams& p);

enum class CertificateVerdict { EdgeCertified, NotApplicable };

std::string_view to_string(CertificateVerdict v);

struct CertificateStep {
  std::string name;
  bool holds = false;
  double witness = 0.0;  // the number the step was decided on
  std::string detail;
};

struct CertificateTrace {
  EdgeFamilyParams params;
  CertificateVerdict verdict = CertificateVerdict::NotApplicable;
  std::vector<CertificateStep> steps;
};

/// Replays the case analysis that rules out product vectors for A(b, theta).
/// Throws ConditionViolated unless params are strictly valid.
CertificateTrace verify_edge_analytic(const EdgeFamilyParams& params);

}  // namespace edgelab
