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

#include <array>
#include <utility>
#include <vector>

#include "edgelab/linalg.hpp"

namespace edgelab {

/// Parameters (b, theta) of the 3x3 family A(b, theta).
struct EdgeFamilyParams {
  double b = 1.0;
  double theta = 0.0;

  /// b > 0, -pi/3 < theta < pi/3, theta != 0.
  bool strictly_valid() const;
};

/// Off-diagonal inner products of the three vectors xi, eta, zeta with
/// ||xi||^2 = ||eta||^2 = ||zeta||^2 = 2 cos(theta). Inner products are
/// linear in the first slot: (x|y) = sum_k x_k conj(y_k).
struct GramSpec {
  Complex xi_eta{0.0, 0.0};
  Complex eta_zeta{0.0, 0.0};
  Complex zeta_xi{0.0, 0.0};
  double theta = 0.0;

  /// [[w, (xi|eta), (xi|zeta)], [(eta|xi), w, (eta|zeta)], [(zeta|xi), (zeta|eta), w]]
  /// with w = 2 cos(theta).
  Matrix gram() const;
};

struct ChoiParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Off-diagonals (rho, sigma, tau) of P[rho, sigma, tau].
struct OffDiagonals {
  Complex rho;
  Complex sigma;
  Complex tau;
};

struct ProductPair {
  Vector x;
  Vector y;
};

Matrix p_theta(double theta);

BipartiteOperator edge_state(const EdgeFamilyParams& p);

/// Smallest diagonal value d for which the 3x3 matrix with diagonal d and the
/// -e^{+-i theta} off-diagonals of P[theta] is positive semi-definite.
double a_theta(double theta);

/// edge_state with the three 2cos(theta) diagonal entries replaced by a_theta.
BipartiteOperator generalized_edge_state(const EdgeFamilyParams& p);

BipartiteOperator state_7_6(double b);

Matrix choi_map_apply(const ChoiParams& p, const Matrix& x);
BipartiteOperator choi_matrix(const ChoiParams& p);

/// The nine pairs (x, y), ordered i = 1..3 outer and omega over the cube
/// roots of unity {1, e^{2pi i/3}, e^{-2pi i/3}} inner, whose projectors
/// sum to 3b * edge_state(b, 0).
std::vector<ProductPair> separable_decomposition_vectors(double b);

/// (1/3b) sum z z^* over the nine vectors above.
Matrix separable_sum(double b);

BipartiteOperator face_state(double b, const GramSpec& g);

/// The same face state assembled as the partial transpose of
/// (pattern) o (Gram of nine realized vectors). Independent of face_state.
BipartiteOperator face_state_via_hadamard(double b, const GramSpec& g);

Matrix p_rho_sigma_tau(double theta, Complex rho, Complex sigma, Complex tau);

/// Off-diagonals of a rank two P[rho, sigma, tau] whose face state has type
/// (target_p, 5), target_p in {5, 6, 7, 8}.
OffDiagonals type_p5_offdiagonals(double theta, int target_p);

GramSpec gram_from(double theta, const OffDiagonals& d);

}  // namespace edgelab
