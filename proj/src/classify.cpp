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

#include "edgelab/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgelab/error.hpp"

namespace edgelab {

std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::BelowLowerBound: return "BelowLowerBound";
    case Admissibility::Admissible: return "Admissible";
    case Admissibility::ForcesProductVector: return "ForcesProductVector";
  }
  return "Unknown";
}

std::string_view to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::EdgeCertified: return "EdgeCertified";
    case CertificateVerdict::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

long long alternating_binomial_sum(int m, int k, int l) {
  long long sum = 0;
  for (int r = 0; r <= m - 1; ++r) {
    const long long term = binomial(k, r) * binomial(l, m - 1 - r);
    sum += (r % 2 == 0) ? term : -term;
  }
  return sum;
}

Admissibility rank_bounds(int m, int n, int p, int q) {
  const int mn = m * n;
  if (m < 1 || n < 1 || p < 1 || q < 1 || p > mn || q > mn) {
    throw Error(ErrorKind::InvalidParam, "rank_bounds needs 1 <= p, q <= m*n");
  }
  const int lower = std::max(m, n);
  if (p <= lower || q <= lower) return Admissibility::BelowLowerBound;
  const int critical = 2 * mn - m - n + 2;
  if (p + q > critical) return Admissibility::ForcesProductVector;
  if (p + q == critical && alternating_binomial_sum(m, mn - p, mn - q) != 0) {
    return Admissibility::ForcesProductVector;
  }
  return Admissibility::Admissible;
}

Classification classify(const BipartiteOperator& s, double rel_tol, double abs_tol) {
  const BipartiteOperator herm(s.m, s.n, symmetrized(s.mat));
  const BipartiteOperator pt = partial_transpose(herm);

  Classification c;
  c.rel_tol = rel_tol;
  c.abs_tol = abs_tol;
  c.is_psd = is_psd(herm.mat, abs_tol);
  c.is_ppt = c.is_psd && is_psd(pt.mat, abs_tol);
  c.type = {numerical_rank(herm.mat, rel_tol), numerical_rank(pt.mat, rel_tol)};
  c.kernel_dims = {s.dim() - c.type.p, s.dim() - c.type.q};
  c.admissibility = (c.type.p == 0 || c.type.q == 0)
                        ? Admissibility::BelowLowerBound
                        : rank_bounds(s.m, s.n, c.type.p, c.type.q);
  return c;
}

RangeCriterionResult check_range_criterion(const BipartiteOperator& s,
                                           const std::vector<ProductPair>& pairs,
                                           double residual_tol) {
  RangeCriterionResult result;
  if (pairs.empty()) return result;

  const Matrix herm = symmetrized(s.mat);
  const Matrix herm_pt = partial_transpose(BipartiteOperator(s.m, s.n, herm)).mat;
  const Subspace kernel = kernel_basis(herm);
  const Subspace kernel_pt = kernel_basis(herm_pt);

  Matrix d(s.dim(), static_cast<Eigen::Index>(pairs.size()));
  Matrix e(s.dim(), static_cast<Eigen::Index>(pairs.size()));
  bool inside = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    if (x.size() != s.m || y.size() != s.n) {
      throw Error(ErrorKind::DimensionMismatch, "product pair has wrong local dimensions");
    }
    const Vector z = tensor(x, y);
    const Vector zc = tensor(Vector(x.conjugate()), y);
    const double norm = z.norm();
    if (norm == 0.0) {
      inside = false;
      continue;
    }
    // for Hermitian s the range is the orthogonal complement of the kernel
    const double residual =
        std::max(kernel.component(z), kernel_pt.component(zc)) / norm;
    result.max_residual = std::max(result.max_residual, residual);
    if (residual > residual_tol) inside = false;
    d.col(static_cast<Eigen::Index>(i)) = z / norm;
    e.col(static_cast<Eigen::Index>(i)) = zc / norm;
  }
  result.span_dims = {numerical_rank(d), numerical_rank(e)};
  result.holds = inside && result.span_dims.first == numerical_rank(herm) &&
                 result.span_dims.second == numerical_rank(herm_pt);
  return result;
}

double reconstruct_separable(double b) { return reconstruct_separable(b, edge_state({b, 0.0})); }

double reconstruct_separable(double b, const BipartiteOperator& target) {
  const Matrix sum = separable_sum(b);
  if (sum.rows() != target.mat.rows() || sum.cols() != target.mat.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "reconstruction target must be 9x9");
  }
  return max_abs(sum - target.mat);
}

bool phi_ppt_region(const ChoiParams& p) {
  if (!(p.a >= 0.0 && p.b >= 0.0 && p.c >= 0.0)) {
    throw Error(ErrorKind::InvalidParam, "Choi parameters must be nonnegative");
  }
  return p.a >= 2.0 && p.b * p.c >= 1.0;
}

CertificateTrace verify_edge_analytic(const EdgeFamilyParams& params) {
  if (!params.strictly_valid()) {
    throw Error(ErrorKind::ConditionViolated,
                "analytic certificate needs b > 0, -pi/3 < theta < pi/3, theta != 0");
  }
  const double b = params.b;
  const Complex e = std::polar(1.0, params.theta);
  constexpr double kKernelTol = 1e-10;

  CertificateTrace trace;
  trace.params = params;

  // Range membership reduces to orthogonality against these kernel vectors:
  // x (x) y _|_ ker A gives x1 y1 + x2 y2 + x3 y3 = 0 and conj(x) (x) y _|_
  // ker A^tau gives b conj(x_i) y_{i+1} + e^{-i theta} conj(x_{i+1}) y_i = 0.
  const BipartiteOperator a = edge_state(params);
  const Subspace ker_a = kernel_basis(a.mat);
  const Subspace ker_pt = kernel_basis(partial_transpose(a).mat);
  {
    Vector k = Vector::Zero(9);
    k(0) = k(4) = k(8) = 1.0;
    const double residual = ker_a.residual(k.normalized());
    trace.steps.push_back({"kernel of A", ker_a.dim() == 1 && residual <= kKernelTol, residual,
                           "ker A = span{(1,0,0;0,1,0;0,0,1)}, dim " +
                               std::to_string(ker_a.dim())});
  }
  {
    Matrix k = Matrix::Zero(9, 3);
    k(1, 0) = b;
    k(3, 0) = e;
    k(5, 1) = b;
    k(7, 1) = e;
    k(2, 2) = e;
    k(6, 2) = b;
    double residual = 0.0;
    for (int c = 0; c < 3; ++c) {
      residual = std::max(residual, ker_pt.residual(k.col(c).normalized()));
    }
    const bool spans = ker_pt.dim() == 3 && numerical_rank(k) == 3;
    trace.steps.push_back({"kernel of A^tau", spans && residual <= kKernelTol, residual,
                           "ker A^tau spanned by the three (b, e^{i theta}) vectors, dim " +
                               std::to_string(ker_pt.dim())});
  }

  // Multiplying the three conjugate equations cyclically:
  // (b^3 + e^{-3i theta}) prod conj(x_i) prod y_i = 0.
  const double product_factor = std::abs(b * b * b + std::pow(std::conj(e), 3));
  trace.steps.push_back({"product identity forces a zero coordinate", product_factor > 1e-12,
                         product_factor, "|b^3 + e^{-3i theta}| must not vanish"});

  // x_i = 0 <=> y_i = 0 for nonzero x (x) y, since b and e^{-i theta} are nonzero.
  trace.steps.push_back({"zero coordinates pair up", b > 0.0, std::min(b, 1.0),
                         "coefficients b and e^{-i theta} of the conjugate equations"});

  // With x_k = y_k = 0 the remaining pair (i, j) gives
  // |x_i|^2 y_i = (e^{-i theta} / b) |x_j|^2 y_i, impossible for nonzero
  // x (x) y unless e^{-i theta} is a positive real.
  const double phase_gap = std::abs(1.0 - std::conj(e));
  for (const char* label : {"case x3 = y3 = 0", "case x1 = y1 = 0", "case x2 = y2 = 0"}) {
    trace.steps.push_back({label, phase_gap > 0.0, phase_gap,
                           "|1 - e^{-i theta}| > 0 collapses the case to x (x) y = 0"});
  }

  const bool all_hold = std::all_of(trace.steps.begin(), trace.steps.end(),
                                    [](const CertificateStep& s) { return s.holds; });
  trace.verdict = all_hold ? CertificateVerdict::EdgeCertified : CertificateVerdict::NotApplicable;
  return trace;
}

}  // namespace edgelab
