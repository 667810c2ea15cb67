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

#include <doctest.h>

#include "edgelab/classify.hpp"
#include "edgelab/search.hpp"
#include "support.hpp"

using namespace edgelab;
using namespace edgelab::testing;

namespace {

// Objective recomputed from scratch: distance of x (x) y to R(s) and of
// conj(x) (x) y to R(s^tau), via range projectors.
double oracle_objective(const BipartiteOperator& s, const Vector& x, const Vector& y) {
  const Matrix pr = projector(range_basis(s.mat));
  const Matrix pt = projector(range_basis(partial_transpose(s).mat));
  const Vector z = tensor(x, y);
  const Vector zc = tensor(Vector(x.conjugate()), y);
  return (z - pr * z).squaredNorm() + (zc - pt * zc).squaredNorm();
}

SearchConfig small_config(int starts = 40) {
  SearchConfig cfg;
  cfg.starts = starts;
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("objective matches the projector form") {
    const BipartiteOperator s = edge_state({1.3, 0.4});
    const ProductVectorObjective f(s);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = random_unit(3);
      const Vector y = random_unit(3);
      CHECK(std::abs(f(x, y) - oracle_objective(s, x, y)) < 1e-12);
    }
  }

  TEST_CASE("each half step does not increase the objective") {
    const BipartiteOperator s = face_state(0.7, random_gram_spec(0.5));
    const ProductVectorObjective f(s);
    for (int trial = 0; trial < 20; ++trial) {
      const Vector x = random_unit(3);
      const Vector y = random_unit(3);
      const Vector y2 = f.best_y(x);
      CHECK(std::abs(y2.norm() - 1.0) < 1e-12);
      CHECK(f(x, y2) <= f(x, y) + 1e-14);
      const Vector x2 = f.best_x(y2);
      CHECK(std::abs(x2.norm() - 1.0) < 1e-12);
      CHECK(f(x2, y2) <= f(x, y2) + 1e-14);
    }
  }

  TEST_CASE("search examples") {
    const EdgeSearchResult sep = product_vector_search(edge_state({1.0, 0.0}), small_config());
    CHECK(sep.best_objective <= 1e-10);
    CHECK(sep.verdict == SearchVerdict::ProductVectorFound);

    const EdgeSearchResult edge = product_vector_search(edge_state({1.0, kPi / 6.0}), SearchConfig{});
    CHECK(edge.best_objective >= 1e-6);
    CHECK(edge.verdict == SearchVerdict::NoneFoundAboveThreshold);
    CHECK(edge.starts == 200);

    const Vector x = random_unit(3);
    const Vector y = random_unit(3);
    const EdgeSearchResult rank1 = product_vector_search(BipartiteOperator(3, 3, outer(tensor(x, y))), small_config());
    CHECK(rank1.best_objective <= 1e-10);

    const EdgeSearchResult s76 = product_vector_search(state_7_6(1.0), small_config());
    CHECK(s76.best_objective <= 1e-8);
  }

  TEST_CASE("found product vectors re-verify against the ranges") {
    for (const auto& s : {edge_state({0.5, 0.0}), state_7_6(1.0), choi_matrix({2.0, 2.0, 1.0})}) {
      const EdgeSearchResult r = product_vector_search(s, small_config());
      REQUIRE(r.verdict == SearchVerdict::ProductVectorFound);
      CHECK(std::abs(r.best_x.norm() - 1.0) < 1e-12);
      CHECK(std::abs(r.best_y.norm() - 1.0) < 1e-12);
      CHECK(oracle_objective(s, r.best_x, r.best_y) <= 1e-8);
    }
  }

  TEST_CASE("separable states always yield a product vector") {
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 3;
      const int n = uniform_int(2, 3);
      const int terms = uniform_int(1, 4);
      Matrix s = Matrix::Zero(m * n, m * n);
      for (int t = 0; t < terms; ++t) s += uniform(0.2, 1.0) * outer(tensor(random_unit(m), random_unit(n)));
      const EdgeSearchResult r = product_vector_search(BipartiteOperator(m, n, s), small_config());
      CHECK(r.best_objective <= 1e-9);
    }
  }

  TEST_CASE("results do not depend on the thread count") {
    const BipartiteOperator s = edge_state({2.0, -0.5});
    SearchConfig cfg = small_config(30);
    cfg.threads = 1;
    const EdgeSearchResult one = product_vector_search(s, cfg);
    cfg.threads = 4;
    const EdgeSearchResult four = product_vector_search(s, cfg);
    CHECK(one.per_start_objectives == four.per_start_objectives);
    CHECK(one.per_start_iterations == four.per_start_iterations);
    CHECK(one.best_objective == four.best_objective);
    CHECK(one.best_x == four.best_x);

    cfg.seed = 99;
    const EdgeSearchResult other = product_vector_search(s, cfg);
    CHECK(other.per_start_objectives != one.per_start_objectives);
  }

  TEST_CASE("per-start bookkeeping") {
    const EdgeSearchResult r = product_vector_search(edge_state({1.0, 0.3}), small_config(25));
    REQUIRE(r.per_start_objectives.size() == 25);
    REQUIRE(r.per_start_iterations.size() == 25);
    CHECK(r.best_objective == *std::min_element(r.per_start_objectives.begin(), r.per_start_objectives.end()));
    for (int it : r.per_start_iterations) CHECK((it >= 1 && it <= 500));
    for (double f : r.per_start_objectives) CHECK(f >= 0.0);
    const ProductVectorObjective f(edge_state({1.0, 0.3}));
    CHECK(std::abs(f(r.best_x, r.best_y) - r.best_objective) < 1e-12);
  }

  TEST_CASE("numeric search never contradicts the analytic certificate") {
    for (int trial = 0; trial < 25; ++trial) {
      const EdgeFamilyParams p = random_edge_params();
      REQUIRE(verify_edge_analytic(p).verdict == CertificateVerdict::EdgeCertified);
      const EdgeSearchResult r = product_vector_search(edge_state(p), small_config());
      CHECK_MESSAGE(r.verdict == SearchVerdict::NoneFoundAboveThreshold, "b=", p.b, " theta=", p.theta);
    }
  }
}
