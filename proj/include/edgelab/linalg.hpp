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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace edgelab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kDefaultPsdTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

/// A square operator on C^m (x) C^n.
///
/// Composite index convention: the pair (i, k) with i in [0, m) and k in
/// [0, n) maps to row i*n + k, so the operator is the block matrix
/// sum_ij e_ij (x) B_ij with 3x3 block B_ij sitting at rows i*n.., cols j*n..
struct BipartiteOperator {
  int m = 0;
  int n = 0;
  Matrix mat;

  BipartiteOperator() = default;
  BipartiteOperator(int m, int n, Matrix mat);

  int dim() const { return m * n; }
  Complex at(int i, int k, int j, int l) const { return mat(i * n + k, j * n + l); }
};

/// Orthonormal column basis of a kernel or range. A zero-column basis is the
/// empty subspace.
struct Subspace {
  Eigen::Index ambient_dim = 0;
  Matrix basis;
  double tol = kDefaultRankTol;

  Eigen::Index dim() const { return basis.cols(); }
  bool empty() const { return basis.cols() == 0; }

  /// Norm of the component of v orthogonal to this subspace.
  double residual(const Vector& v) const;
  /// Norm of the component of v inside this subspace.
  double component(const Vector& v) const;
};

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // column k pairs with eigenvalues[k]
};

Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& x, const Vector& y);

BipartiteOperator partial_transpose(const BipartiteOperator& s);

/// Relative deviation ||M - M^H||_F / ||M||_F (0 for the zero matrix).
double hermitian_defect(const Matrix& m);

/// Checks the relative asymmetry against kHermitianTol and returns
/// (M + M^H) / 2. Throws NotHermitian otherwise.
Matrix symmetrized(const Matrix& m);

HermitianEig hermitian_eig(const Matrix& m);

/// Singular values in descending order.
RealVector singular_values(const Matrix& m);

int numerical_rank(const Matrix& m, double rel_tol = kDefaultRankTol);

Subspace kernel_basis(const Matrix& m, double rel_tol = kDefaultRankTol);
Subspace range_basis(const Matrix& m, double rel_tol = kDefaultRankTol);

/// min eigenvalue >= -abs_tol * max(1, ||m||_2) after symmetrization.
bool is_psd(const Matrix& m, double abs_tol = kDefaultPsdTol);

Matrix projector(const Subspace& s);
/// Rank one matrix v v^H (no normalization).
Matrix outer(const Vector& v);

Matrix hadamard(const Matrix& a, const Matrix& b);

/// Rows of the result realize the abstract vectors whose Gram matrix is g:
/// V V^H = g, with as many columns as numerical_rank(g). Throws NotPSD.
Matrix gram_realization(const Matrix& g, double rel_tol = kDefaultRankTol);

double max_abs(const Matrix& m);

/// Divides by the trace; the constructors return unnormalized matrices.
BipartiteOperator trace_normalized(const BipartiteOperator& s);

}  // namespace edgelab
