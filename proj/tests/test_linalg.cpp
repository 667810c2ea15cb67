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

#include "edgelab/error.hpp"
#include "edgelab/linalg.hpp"
#include "edgelab/states.hpp"
#include "support.hpp"

using namespace edgelab;
using namespace edgelab::testing;

namespace {

Vector basis_vector(int dim, int i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("tensor products follow the composite index i*n+k") {
    CHECK(tensor(Matrix(Matrix::Identity(2, 2)), Matrix(Matrix::Identity(3, 3)))
              .isApprox(Matrix::Identity(6, 6)));

    const Vector e = tensor(basis_vector(2, 0), basis_vector(2, 1));
    Vector expected(4);
    expected << 0.0, 1.0, 0.0, 0.0;
    CHECK(e == expected);

    Vector x = Vector::Ones(3) / std::sqrt(3.0);
    const Vector z = tensor(x, basis_vector(3, 0));
    for (int i = 0; i < 9; ++i) {
      const double want = (i % 3 == 0) ? 1.0 / std::sqrt(3.0) : 0.0;
      CHECK(std::abs(z(i) - want) < 1e-15);
    }
    CHECK(std::abs(z.norm() - 1.0) < 1e-15);
  }

  TEST_CASE("partial transpose matches the index swap and is an involution") {
    for (int trial = 0; trial < 100; ++trial) {
      const int m = uniform_int(2, 4);
      const int n = uniform_int(2, 4);
      const BipartiteOperator s(m, n, random_matrix(m * n, m * n));
      const BipartiteOperator t = partial_transpose(s);
      CHECK(t.mat == oracle_partial_transpose(s.mat, m, n));
      CHECK(partial_transpose(t).mat == s.mat);
    }
  }

  TEST_CASE("partial transpose preserves trace and Hermiticity") {
    for (int trial = 0; trial < 100; ++trial) {
      const int m = uniform_int(2, 4);
      const int n = uniform_int(2, 4);
      const BipartiteOperator s(m, n, random_hermitian(m * n));
      const Matrix t = partial_transpose(s).mat;
      CHECK(std::abs(t.trace() - s.mat.trace()) <= 1e-12);
      CHECK((t - t.adjoint()).norm() <= 1e-12);
    }
  }

  TEST_CASE("partial transpose of a product projector conjugates the first factor") {
    Vector x(3);
    x << 1.0, Complex(0.0, 1.0), 0.0;
    x.normalize();
    const Vector y = basis_vector(3, 0);
    const BipartiteOperator p(3, 3, outer(tensor(x, y)));
    CHECK((partial_transpose(p).mat - outer(tensor(Vector(x.conjugate()), y))).norm() < 1e-15);

    for (int trial = 0; trial < 100; ++trial) {
      const int m = uniform_int(2, 4);
      const int n = uniform_int(2, 4);
      const Vector a = random_unit(m);
      const Vector b = random_unit(n);
      const BipartiteOperator q(m, n, outer(tensor(a, b)));
      const Matrix expected = outer(tensor(Vector(a.conjugate()), b));
      CHECK((partial_transpose(q).mat - expected).norm() <= 1e-12);
    }
  }

  TEST_CASE("hermitian_eig") {
    const HermitianEig id = hermitian_eig(Matrix::Identity(3, 3));
    CHECK(id.eigenvalues.isApprox(Eigen::Vector3d(1, 1, 1)));

    // P[0] = 3 I - J with J the all-ones matrix: spectrum {0, 3, 3}
    const HermitianEig p0 = hermitian_eig(p_theta(0.0));
    CHECK(std::abs(p0.eigenvalues(0)) < 1e-14);
    CHECK(std::abs(p0.eigenvalues(1) - 3.0) < 1e-14);
    CHECK(std::abs(p0.eigenvalues(2) - 3.0) < 1e-14);

    const HermitianEig p3 = hermitian_eig(p_theta(kPi / 3.0));
    const double top = p3.eigenvalues.cwiseAbs().maxCoeff();
    CHECK((p3.eigenvalues.array().abs() > 1e-9 * top).count() == 1);

    for (int trial = 0; trial < 20; ++trial) {
      const Matrix h = random_hermitian(6);
      const HermitianEig e = hermitian_eig(h);
      for (int k = 0; k < 6; ++k) {
        CHECK((h * e.eigenvectors.col(k) - e.eigenvalues(k) * e.eigenvectors.col(k)).norm() <=
              1e-10 * h.norm());
      }
      CHECK((e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(6, 6)).norm() < 1e-12);
    }
  }

  TEST_CASE("Hermitian routines reject asymmetric input") {
    Matrix a = Matrix::Identity(3, 3);
    a(0, 1) = 0.5;
    CHECK_THROWS_AS(hermitian_eig(a), Error);
    CHECK_THROWS_AS(is_psd(a), Error);
    try {
      is_psd(a);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotHermitian);
    }
    // rounding-level asymmetry is tolerated
    Matrix b = Matrix::Identity(3, 3);
    b(0, 1) = 1e-14;
    CHECK(is_psd(b));
  }

  TEST_CASE("numerical_rank") {
    CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
    CHECK(numerical_rank(edge_state({1.0, kPi / 6.0}).mat) == 8);
    CHECK(numerical_rank(p_theta(kPi / 6.0)) == 2);
  }

  TEST_CASE("numerical_rank is invariant under scaling") {
    for (int trial = 0; trial < 100; ++trial) {
      const int rank = uniform_int(0, 6);
      const Matrix h = planted_rank_hermitian(6, rank, false);
      const double mag = std::pow(10.0, uniform(-6.0, 6.0));
      const Complex c = std::polar(mag, uniform(-kPi, kPi));
      CHECK(numerical_rank(c * h) == numerical_rank(h));
      CHECK(numerical_rank(h) == rank);
    }
  }

  TEST_CASE("numerical_rank agrees with the eigenvalue count for Hermitian input") {
    for (int trial = 0; trial < 100; ++trial) {
      const int dim = uniform_int(2, 9);
      const int rank = uniform_int(0, dim);
      const Matrix h = planted_rank_hermitian(dim, rank, false);
      const Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
      const Eigen::ArrayXd abs = eig.eigenvalues().array().abs();
      const long count = (abs > kDefaultRankTol * abs.maxCoeff()).count();
      CHECK(numerical_rank(h) == count);
    }
  }

  TEST_CASE("kernel and range bases") {
    CHECK(kernel_basis(Matrix::Identity(9, 9)).empty());
    CHECK(range_basis(Matrix::Identity(3, 3)).dim() == 3);

    const EdgeFamilyParams params{1.7, -0.4};
    const BipartiteOperator a = edge_state(params);
    const Subspace ker = kernel_basis(a.mat);
    Vector k = Vector::Zero(9);
    k(0) = k(4) = k(8) = 1.0;
    CHECK(ker.dim() == 1);
    CHECK(ker.residual(k.normalized()) < 1e-10);

    const Subspace ker_pt = kernel_basis(partial_transpose(a).mat);
    Vector v = Vector::Zero(9);
    v(1) = params.b;
    v(3) = std::polar(1.0, params.theta);
    CHECK(ker_pt.dim() == 3);
    CHECK(ker_pt.residual(v.normalized()) < 1e-10);

    const Subspace rng = range_basis(edge_state({1.0, kPi / 6.0}).mat);
    CHECK(rng.dim() == 8);
    CHECK(rng.component(k.normalized()) < 1e-10);
    CHECK((rng.basis.adjoint() * rng.basis - Matrix::Identity(8, 8)).norm() < 1e-12);

    const Vector u = random_unit(5);
    const Subspace line = range_basis(outer(u));
    CHECK(line.dim() == 1);
    CHECK(line.residual(u) < 1e-12);
  }

  TEST_CASE("is_psd") {
    CHECK(is_psd(p_theta(kPi / 4.0)));
    CHECK_FALSE(is_psd(p_theta(1.1 * kPi / 3.0)));
    CHECK_FALSE(is_psd(Matrix(-Matrix::Identity(3, 3))));
    // boundary of the P[theta] region stays PSD despite rounding
    CHECK(is_psd(p_theta(kPi / 3.0)));
    CHECK(is_psd(p_theta(-kPi / 3.0)));
  }

  TEST_CASE("projector") {
    const Subspace full{3, Matrix::Identity(3, 3), kDefaultRankTol};
    CHECK(projector(full).isApprox(Matrix::Identity(3, 3)));

    const Subspace none{4, Matrix(4, 0), kDefaultRankTol};
    CHECK(projector(none) == Matrix::Zero(4, 4));

    const Subspace ones{3, Vector::Ones(3) / std::sqrt(3.0), kDefaultRankTol};
    CHECK((projector(ones) - Matrix::Ones(3, 3) / 3.0).norm() < 1e-15);

    const Subspace s = range_basis(planted_rank_hermitian(7, 3, true));
    const Matrix p = projector(s);
    CHECK((p * p - p).norm() < 1e-12);
    CHECK((p - p.adjoint()).norm() < 1e-12);
  }

  TEST_CASE("hadamard") {
    const Matrix m = random_matrix(4, 4);
    CHECK(hadamard(m, Matrix::Ones(4, 4)) == m);
    CHECK(hadamard(m, Matrix::Zero(4, 4)) == Matrix::Zero(4, 4));
    CHECK_THROWS_AS(hadamard(m, Matrix::Ones(3, 4)), Error);
  }

  TEST_CASE("gram_realization") {
    const Matrix u = gram_realization(Matrix::Identity(3, 3));
    CHECK(u.cols() == 3);
    CHECK((u * u.adjoint() - Matrix::Identity(3, 3)).norm() < 1e-12);

    const Matrix p = p_theta(kPi / 6.0);
    const Matrix v = gram_realization(p);
    CHECK(v.rows() == 3);
    CHECK(v.cols() == 2);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(std::abs(v.row(i).dot(v.row(j)) - p(j, i)) < 1e-12);
    }

    const double w = 2.0 * std::cos(0.3);
    const Matrix d = gram_realization(w * Matrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(d.row(i).norm() - std::sqrt(w)) < 1e-12);
    CHECK(std::abs(d.row(0).dot(d.row(1))) < 1e-12);

    CHECK_THROWS_AS(gram_realization(Matrix(-Matrix::Identity(2, 2))), Error);
  }

  TEST_CASE("gram_realization round trip on planted ranks") {
    for (int trial = 0; trial < 100; ++trial) {
      const int rank = 1 + trial % 3;
      const Matrix g = planted_rank_hermitian(3, rank, true);
      const Matrix v = gram_realization(g);
      CHECK(v.cols() == rank);
      CHECK((v * v.adjoint() - g).norm() <= 1e-10 * g.norm());
    }
  }

  TEST_CASE("bipartite operator checks its shape") {
    CHECK_THROWS_AS(BipartiteOperator(3, 3, Matrix::Identity(8, 8)), Error);
    const BipartiteOperator s = trace_normalized(edge_state({2.0, 0.2}));
    CHECK(std::abs(s.mat.trace() - 1.0) < 1e-14);
  }
}
