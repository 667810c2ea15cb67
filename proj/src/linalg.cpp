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

#include "edgelab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgelab/error.hpp"

namespace edgelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::GramNotPSD: return "GramNotPSD";
    case ErrorKind::OffdiagTooLarge: return "OffdiagTooLarge";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

BipartiteOperator::BipartiteOperator(int m_, int n_, Matrix mat_)
    : m(m_), n(n_), mat(std::move(mat_)) {
  if (m <= 0 || n <= 0 || mat.rows() != m * n || mat.cols() != m * n) {
    throw Error(ErrorKind::DimensionMismatch,
                "bipartite operator must be square of size m*n = " +
                    std::to_string(m * n));
  }
}

double Subspace::residual(const Vector& v) const {
  if (empty()) return v.norm();
  return (v - basis * (basis.adjoint() * v)).norm();
}

double Subspace::component(const Vector& v) const {
  if (empty()) return 0.0;
  return (basis.adjoint() * v).norm();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector tensor(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.segment(i * y.size(), y.size()) = x(i) * y;
  }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& s) {
  const int m = s.m;
  const int n = s.n;
  Matrix out(s.dim(), s.dim());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // block (i, j) of the result is block (j, i) of the input
      out.block(i * n, j * n, n, n) = s.mat.block(j * n, i * n, n, n);
    }
  }
  return BipartiteOperator(m, n, std::move(out));
}

double hermitian_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const double scale = m.norm();
  if (scale == 0.0) return 0.0;
  return (m - m.adjoint()).norm() / scale;
}

Matrix symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  }
  const double defect = hermitian_defect(m);
  if (!(defect <= kHermitianTol)) {
    throw Error(ErrorKind::NotHermitian,
                "not Hermitian (relative asymmetry " + std::to_string(defect) + ")");
  }
  return (m + m.adjoint()) / 2.0;
}

HermitianEig hermitian_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized(m));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector singular_values(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

namespace {

struct Svd {
  Matrix u;
  Matrix v;
  RealVector sigma;
  int rank = 0;
};

Svd full_svd(const Matrix& m, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Svd out{svd.matrixU(), svd.matrixV(), svd.singularValues(), 0};
  const double threshold = out.sigma.size() > 0 ? rel_tol * out.sigma(0) : 0.0;
  for (Eigen::Index k = 0; k < out.sigma.size(); ++k) {
    if (out.sigma(k) > threshold) ++out.rank;
  }
  return out;
}

}  // namespace

int numerical_rank(const Matrix& m, double rel_tol) {
  const RealVector sigma = singular_values(m);
  if (sigma.size() == 0) return 0;
  const double threshold = rel_tol * sigma(0);
  return static_cast<int>((sigma.array() > threshold).count());
}

Subspace kernel_basis(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "kernel_basis expects a square matrix");
  }
  const Svd svd = full_svd(m, rel_tol);
  return {m.cols(), svd.v.rightCols(m.cols() - svd.rank), rel_tol};
}

Subspace range_basis(const Matrix& m, double rel_tol) {
  const Svd svd = full_svd(m, rel_tol);
  return {m.rows(), svd.u.leftCols(svd.rank), rel_tol};
}

bool is_psd(const Matrix& m, double abs_tol) {
  const HermitianEig eig = hermitian_eig(m);
  if (eig.eigenvalues.size() == 0) return true;
  const double spectral_norm = eig.eigenvalues.cwiseAbs().maxCoeff();
  return eig.eigenvalues(0) >= -abs_tol * std::max(1.0, spectral_norm);
}

Matrix projector(const Subspace& s) {
  if (s.empty()) return Matrix::Zero(s.ambient_dim, s.ambient_dim);
  return s.basis * s.basis.adjoint();
}

Matrix outer(const Vector& v) { return v * v.adjoint(); }

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hadamard operands differ in shape");
  }
  return a.cwiseProduct(b);
}

Matrix gram_realization(const Matrix& g, double rel_tol) {
  if (!is_psd(g)) throw Error(ErrorKind::NotPSD, "Gram matrix is not PSD");
  const HermitianEig eig = hermitian_eig(g);
  const Eigen::Index k = eig.eigenvalues.size();
  const double top = k > 0 ? eig.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    if (eig.eigenvalues(i) > rel_tol * top) kept.push_back(i);
  }
  Matrix v(k, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const Eigen::Index i = kept[c];
    v.col(static_cast<Eigen::Index>(c)) =
        eig.eigenvectors.col(i) * std::sqrt(eig.eigenvalues(i));
  }
  return v;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

BipartiteOperator trace_normalized(const BipartiteOperator& s) {
  const Complex tr = s.mat.trace();
  if (std::abs(tr) == 0.0) {
    throw Error(ErrorKind::InvalidParam, "cannot normalize a traceless operator");
  }
  return BipartiteOperator(s.m, s.n, s.mat / tr);
}

}  // namespace edgelab
