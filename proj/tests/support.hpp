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

// Random generators and independent oracles shared by the test suites. The
// oracles deliberately avoid the library's own code paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "edgelab/linalg.hpp"
#include "edgelab/states.hpp"

namespace edgelab::testing {

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261018);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline Vector random_vector(int dim) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng()), g(rng()));
  return v;
}

inline Vector random_unit(int dim) { return random_vector(dim).normalized(); }

inline Matrix random_matrix(int rows, int cols) {
  Matrix m(rows, cols);
  for (int c = 0; c < cols; ++c) m.col(c) = random_vector(rows);
  return m;
}

inline Matrix random_hermitian(int dim) {
  const Matrix a = random_matrix(dim, dim);
  return (a + a.adjoint()) / 2.0;
}

/// Hermitian with exactly `rank` nonzero eigenvalues of random sign, all of
/// modulus in [0.5, 2].
inline Matrix planted_rank_hermitian(int dim, int rank, bool psd) {
  const Eigen::HouseholderQR<Matrix> qr(random_matrix(dim, dim));
  const Matrix q = qr.householderQ();
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < rank; ++i) {
    const double mag = uniform(0.5, 2.0);
    diag(i) = (psd || uniform(0.0, 1.0) < 0.5) ? mag : -mag;
  }
  return q * diag.cast<Complex>().asDiagonal() * q.adjoint();
}

/// Partial transpose written entry by entry from its defining index swap.
inline Matrix oracle_partial_transpose(const Matrix& s, int m, int n) {
  Matrix out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < m; ++j)
        for (int l = 0; l < n; ++l) out(i * n + k, j * n + l) = s(j * n + k, i * n + l);
  return out;
}

/// Cofactor expansion along the first row.
inline Complex oracle_det3(const Matrix& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Coefficient of t^{m-1} in (1 - t)^k (1 + t)^l by explicit polynomial
/// multiplication.
inline long long oracle_alternating_sum(int m, int k, int l) {
  std::vector<long long> poly{1};
  auto multiply = [&](long long linear) {
    std::vector<long long> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += linear * poly[i];
    }
    poly = next;
  };
  for (int i = 0; i < k; ++i) multiply(-1);
  for (int i = 0; i < l; ++i) multiply(1);
  const auto idx = static_cast<std::size_t>(m - 1);
  return idx < poly.size() ? poly[idx] : 0;
}

/// Random Gram spec with |off-diagonals| <= 1 and a PSD Gram matrix. Each
/// off-diagonal is unimodular with probability 1/2, so every rank pattern
/// of the 2x2 blocks shows up.
inline GramSpec random_gram_spec(double theta) {
  for (;;) {
    GramSpec g;
    g.theta = theta;
    Complex* slots[3] = {&g.xi_eta, &g.eta_zeta, &g.zeta_xi};
    for (Complex* s : slots) {
      const double modulus = uniform(0.0, 1.0) < 0.5 ? 1.0 : uniform(0.0, 0.95);
      *s = std::polar(modulus, uniform(-kPi, kPi));
    }
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(g.gram());
    if (eig.eigenvalues()(0) > 1e-6 || std::abs(eig.eigenvalues()(0)) < 1e-14) return g;
  }
}

inline EdgeFamilyParams random_edge_params() {
  double theta = 0.0;
  while (theta == 0.0) theta = uniform(-kPi / 3.0, kPi / 3.0);
  return {uniform(0.1, 10.0), theta};
}

}  // namespace edgelab::testing
