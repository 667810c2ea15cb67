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

#include "edgelab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "edgelab/error.hpp"

namespace edgelab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOffdiagSlack = 1e-12;

Complex phase(double theta) { return std::polar(1.0, theta); }

void require_positive_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidParam, "b must be positive, got " + std::to_string(b));
  }
}

// Shared layout of A(b, theta) and its variants: `corner` is the value
// of the (0,0),(4,4),(8,8) diagonal and `upper`/`lower` the off-diagonal
// entries above/below the diagonal in the {0,4,8} corner block, cyclically.
Matrix family_layout(double corner, double b, Complex upper, Complex lower) {
  Matrix a = Matrix::Zero(9, 9);
  const double diag[9] = {corner, 1.0 / b, b, b, corner, 1.0 / b, 1.0 / b, b, corner};
  for (int i = 0; i < 9; ++i) a(i, i) = diag[i];
  a(0, 4) = upper;
  a(4, 8) = upper;
  a(8, 0) = upper;
  a(4, 0) = lower;
  a(8, 4) = lower;
  a(0, 8) = lower;
  return a;
}

void validate_gram(const GramSpec& g) {
  for (const Complex v : {g.xi_eta, g.eta_zeta, g.zeta_xi}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::InvalidParam, "Gram off-diagonal is not finite");
    }
    if (std::abs(v) > 1.0 + kOffdiagSlack) {
      throw Error(ErrorKind::OffdiagTooLarge,
                  "Gram off-diagonal has modulus " + std::to_string(std::abs(v)) + " > 1");
    }
  }
  if (!is_psd(g.gram())) {
    throw Error(ErrorKind::GramNotPSD, "Gram matrix is not positive semi-definite");
  }
}

}  // namespace

bool EdgeFamilyParams::strictly_valid() const {
  return b > 0.0 && theta > -kPi / 3.0 && theta < kPi / 3.0 && theta != 0.0;
}

Matrix GramSpec::gram() const {
  return p_rho_sigma_tau(theta, xi_eta, eta_zeta, zeta_xi);
}

Matrix p_theta(double theta) {
  const double w = 2.0 * std::cos(theta);
  const Complex e = phase(theta);
  Matrix p(3, 3);
  p << w, -e, -std::conj(e),
      -std::conj(e), w, -e,
      -e, -std::conj(e), w;
  return p;
}

BipartiteOperator edge_state(const EdgeFamilyParams& p) {
  require_positive_b(p.b);
  const Complex e = phase(p.theta);
  return BipartiteOperator(3, 3, family_layout(2.0 * std::cos(p.theta), p.b, -e, -std::conj(e)));
}

double a_theta(double theta) {
  const double shift = 2.0 * kPi / 3.0;
  return std::max({2.0 * std::cos(theta), 2.0 * std::cos(theta - shift),
                   2.0 * std::cos(theta + shift)});
}

BipartiteOperator generalized_edge_state(const EdgeFamilyParams& p) {
  require_positive_b(p.b);
  const Complex e = phase(p.theta);
  return BipartiteOperator(3, 3, family_layout(a_theta(p.theta), p.b, -e, -std::conj(e)));
}

BipartiteOperator state_7_6(double b) {
  require_positive_b(b);
  return BipartiteOperator(3, 3, family_layout(1.0, b, 1.0, 1.0));
}

Matrix choi_map_apply(const ChoiParams& p, const Matrix& x) {
  if (x.rows() != 3 || x.cols() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "choi_map_apply expects a 3x3 matrix");
  }
  Matrix out = -x;
  out(0, 0) = p.a * x(0, 0) + p.b * x(1, 1) + p.c * x(2, 2);
  out(1, 1) = p.c * x(0, 0) + p.a * x(1, 1) + p.b * x(2, 2);
  out(2, 2) = p.b * x(0, 0) + p.c * x(1, 1) + p.a * x(2, 2);
  return out;
}

BipartiteOperator choi_matrix(const ChoiParams& p) {
  Matrix c(9, 9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Matrix e = Matrix::Zero(3, 3);
      e(i, j) = 1.0;
      c.block(3 * i, 3 * j, 3, 3) = choi_map_apply(p, e);
    }
  }
  return BipartiteOperator(3, 3, std::move(c));
}

std::vector<ProductPair> separable_decomposition_vectors(double b) {
  require_positive_b(b);
  const double s = std::sqrt(b);
  const std::array<Complex, 3> roots = {Complex(1.0, 0.0), phase(2.0 * kPi / 3.0),
                                        phase(-2.0 * kPi / 3.0)};
  auto vec = [](Complex a0, Complex a1, Complex a2) {
    Vector v(3);
    v << a0, a1, a2;
    return v;
  };
  std::vector<ProductPair> pairs;
  pairs.reserve(9);
  for (int i = 0; i < 3; ++i) {
    for (const Complex w : roots) {
      const Complex wbar = std::conj(w);
      switch (i) {
        case 0:
          pairs.push_back({vec(0.0, 1.0, s * w), vec(0.0, s, -wbar)});
          break;
        case 1:
          pairs.push_back({vec(s * w, 0.0, 1.0), vec(-wbar, 0.0, s)});
          break;
        default:
          pairs.push_back({vec(1.0, s * w, 0.0), vec(s, -wbar, 0.0)});
          break;
      }
    }
  }
  return pairs;
}

Matrix separable_sum(double b) {
  Matrix sum = Matrix::Zero(9, 9);
  for (const auto& [x, y] : separable_decomposition_vectors(b)) {
    sum += outer(tensor(x, y));
  }
  return sum / (3.0 * b);
}

BipartiteOperator face_state(double b, const GramSpec& g) {
  require_positive_b(b);
  validate_gram(g);
  BipartiteOperator x = edge_state({b, g.theta});
  x.mat(3, 1) = g.xi_eta;
  x.mat(1, 3) = std::conj(g.xi_eta);
  x.mat(7, 5) = g.eta_zeta;
  x.mat(5, 7) = std::conj(g.eta_zeta);
  x.mat(2, 6) = g.zeta_xi;
  x.mat(6, 2) = std::conj(g.zeta_xi);
  return x;
}

BipartiteOperator face_state_via_hadamard(double b, const GramSpec& g) {
  require_positive_b(b);
  validate_gram(g);
  const Matrix v = gram_realization(g.gram());
  const Eigen::Index r = v.cols();

  // xi, eta, zeta live in the first r coordinates; alpha, beta, gamma are
  // orthonormal and orthogonal to them.
  Matrix vectors = Matrix::Zero(6, r + 3);
  vectors.topLeftCorner(3, r) = v;
  vectors.bottomRightCorner(3, 3) = Matrix::Identity(3, 3);
  enum { kXi, kEta, kZeta, kAlpha, kBeta, kGamma };
  const int slots[9] = {kXi, kAlpha, kGamma, kAlpha, kEta, kBeta, kGamma, kBeta, kZeta};
  Matrix rows(9, r + 3);
  for (int k = 0; k < 9; ++k) rows.row(k) = vectors.row(slots[k]);
  const Matrix slot_gram = rows * rows.adjoint();

  const double s = std::sqrt(b);
  const Complex t = -s * phase(g.theta);
  Vector pattern(9);
  pattern << 1.0, 1.0 / s, t, t, 1.0, 1.0 / s, 1.0 / s, t, 1.0;

  const BipartiteOperator transposed(3, 3, hadamard(outer(pattern), slot_gram));
  return partial_transpose(transposed);
}

Matrix p_rho_sigma_tau(double theta, Complex rho, Complex sigma, Complex tau) {
  const double w = 2.0 * std::cos(theta);
  Matrix p(3, 3);
  p << w, rho, std::conj(tau),
      std::conj(rho), w, sigma,
      tau, std::conj(sigma), w;
  return p;
}

OffDiagonals type_p5_offdiagonals(double theta, int target_p) {
  if (!EdgeFamilyParams{1.0, theta}.strictly_valid()) {
    throw Error(ErrorKind::InvalidParam,
                "theta must satisfy -pi/3 < theta < pi/3, theta != 0");
  }
  const double c = std::cos(theta);
  auto check = [](double r) {
    if (!(r > -1.0 && r < 1.0)) {
      throw Error(ErrorKind::InvalidParam, "root r = " + std::to_string(r) + " outside (-1, 1)");
    }
    return r;
  };
  switch (target_p) {
    case 8:
      return {-c, -c, -c};
    case 7: {
      const double r = check(std::sqrt(2.0 * c * c - c));
      return {r, -r, 1.0};
    }
    case 6: {
      const double r = check(-std::cos(2.0 * theta) / c);
      return {1.0, 1.0, r};
    }
    case 5: {
      const Complex e = -phase(theta);
      return {e, e, e};
    }
    default:
      throw Error(ErrorKind::InvalidParam,
                  "target p must be one of 5, 6, 7, 8, got " + std::to_string(target_p));
  }
}

GramSpec gram_from(double theta, const OffDiagonals& d) {
  return {d.rho, d.sigma, d.tau, theta};
}

}  // namespace edgelab
