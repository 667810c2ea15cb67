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

#include "edgelab/search.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "edgelab/parallel.hpp"

namespace edgelab {

std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::ProductVectorFound: return "ProductVectorFound";
    case SearchVerdict::NoneFoundAboveThreshold: return "NoneFoundAboveThreshold";
  }
  return "Unknown";
}

namespace {

// [[Re B, -Im B], [Im B, Re B]]: the real form of v -> B v on (Re v, Im v).
Eigen::MatrixXd realify(const Matrix& b) {
  const Eigen::Index r = b.rows();
  const Eigen::Index c = b.cols();
  Eigen::MatrixXd out(2 * r, 2 * c);
  out.topLeftCorner(r, c) = b.real();
  out.topRightCorner(r, c) = -b.imag();
  out.bottomLeftCorner(r, c) = b.imag();
  out.bottomRightCorner(r, c) = b.real();
  return out;
}

// K^H (x (x) I_n): contracts the first tensor factor of the kernel basis.
Matrix contract_first(const Matrix& kernel_adj, const Vector& x, int n) {
  Matrix out = Matrix::Zero(kernel_adj.rows(), n);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out += x(i) * kernel_adj.middleCols(i * n, n);
  }
  return out;
}

// K^H (I_m (x) y): contracts the second tensor factor.
Matrix contract_second(const Matrix& kernel_adj, const Vector& y, int m) {
  const auto n = y.size();
  Matrix out(kernel_adj.rows(), m);
  for (int i = 0; i < m; ++i) out.col(i) = kernel_adj.middleCols(i * n, n) * y;
  return out;
}

Vector random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v.normalized();
}

}  // namespace

ProductVectorObjective::ProductVectorObjective(const BipartiteOperator& s, double rel_tol)
    : m_(s.m),
      n_(s.n),
      kernel_(kernel_basis(symmetrized(s.mat), rel_tol).basis.adjoint()),
      kernel_pt_(kernel_basis(symmetrized(partial_transpose(s).mat), rel_tol).basis.adjoint()) {}

double ProductVectorObjective::operator()(const Vector& x, const Vector& y) const {
  return (kernel_ * tensor(x, y)).squaredNorm() +
         (kernel_pt_ * tensor(Vector(x.conjugate()), y)).squaredNorm();
}

Vector ProductVectorObjective::best_y(const Vector& x) const {
  const Matrix kx = contract_first(kernel_, x, n_);
  const Matrix lx = contract_first(kernel_pt_, x.conjugate(), n_);
  Matrix form = kx.adjoint() * kx + lx.adjoint() * lx;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(form);
  return solver.eigenvectors().col(0).normalized();
}

Vector ProductVectorObjective::best_x(const Vector& y) const {
  const Eigen::MatrixXd ky = realify(contract_second(kernel_, y, m_));
  Eigen::MatrixXd ly = realify(contract_second(kernel_pt_, y, m_));
  // conj(x) = J (Re x, Im x) with J = diag(I, -I)
  ly.rightCols(m_) *= -1.0;
  const Eigen::MatrixXd form = ky.transpose() * ky + ly.transpose() * ly;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(form);
  const Eigen::VectorXd u = solver.eigenvectors().col(0);
  Vector x(m_);
  for (int i = 0; i < m_; ++i) x(i) = Complex(u(i), u(m_ + i));
  return x.normalized();
}

namespace {

struct StartOutcome {
  double objective = std::numeric_limits<double>::infinity();
  int iterations = 0;
  Vector x;
  Vector y;
};

StartOutcome run_start(const ProductVectorObjective& f, const SearchConfig& cfg, int start) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::mt19937_64 rng(seq);
  StartOutcome out;
  out.x = random_unit(rng, f.m());
  out.y = random_unit(rng, f.n());
  out.objective = f(out.x, out.y);
  for (int it = 0; it < cfg.max_iters; ++it) {
    const Vector y = f.best_y(out.x);
    const Vector x = f.best_x(y);
    const double value = f(x, y);
    out.iterations = it + 1;
    const double decrease = out.objective - value;
    if (value < out.objective) {
      out.objective = value;
      out.x = x;
      out.y = y;
    }
    if (decrease < cfg.convergence_tol) break;
  }
  return out;
}

}  // namespace

EdgeSearchResult product_vector_search(const BipartiteOperator& s, const SearchConfig& cfg) {
  const ProductVectorObjective objective(s);
  const int starts = std::max(cfg.starts, 1);
  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(starts));
  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t i) {
    outcomes[i] = run_start(objective, cfg, static_cast<int>(i));
  });

  EdgeSearchResult result;
  result.starts = starts;
  std::size_t best = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    result.per_start_objectives.push_back(outcomes[i].objective);
    result.per_start_iterations.push_back(outcomes[i].iterations);
    if (outcomes[i].objective < outcomes[best].objective) best = i;
  }
  result.best_objective = outcomes[best].objective;
  result.best_x = outcomes[best].x;
  result.best_y = outcomes[best].y;
  result.verdict = result.best_objective <= cfg.found_threshold
                       ? SearchVerdict::ProductVectorFound
                       : SearchVerdict::NoneFoundAboveThreshold;
  return result;
}

}  // namespace edgelab
