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
#include <string_view>
#include <vector>

#include "edgelab/linalg.hpp"

namespace edgelab {

struct SearchConfig {
  int starts = 200;
  int max_iters = 500;
  std::uint64_t seed = 0x5eed;
  double convergence_tol = 1e-14;
  double found_threshold = 1e-9;
  int threads = 0;  // 0: edgelab::default_thread_count()
};

enum class SearchVerdict { ProductVectorFound, NoneFoundAboveThreshold };

std::string_view to_string(SearchVerdict v);

struct EdgeSearchResult {
  double best_objective = 0.0;
  Vector best_x;
  Vector best_y;
  int starts = 0;
  std::vector<double> per_start_objectives;
  std::vector<int> per_start_iterations;
  SearchVerdict verdict = SearchVerdict::NoneFoundAboveThreshold;
};

/// Kernel projections defining the objective
///   f(x, y) = ||P_K (x (x) y)||^2 + ||P_L (conj(x) (x) y)||^2
/// with K = ker s, L = ker s^tau.
class ProductVectorObjective {
 public:
  explicit ProductVectorObjective(const BipartiteOperator& s, double rel_tol = kDefaultRankTol);

  double operator()(const Vector& x, const Vector& y) const;

  /// argmin over unit y for fixed x.
  Vector best_y(const Vector& x) const;
  /// argmin over unit x for fixed y; the conjugated term makes this a real
  /// quadratic form in (Re x, Im x).
  Vector best_x(const Vector& y) const;

  int m() const { return m_; }
  int n() const { return n_; }

 private:
  int m_;
  int n_;
  Matrix kernel_;     // ambient x dim ker s, adjointed below
  Matrix kernel_pt_;  // ambient x dim ker s^tau
};

/// Multistart alternating minimization of ProductVectorObjective. Each start
/// draws its initial (x, y) from an RNG stream keyed by (seed, start index),
/// so the result does not depend on the thread count.
EdgeSearchResult product_vector_search(const BipartiteOperator& s, const SearchConfig& cfg = {});

}  // namespace edgelab
