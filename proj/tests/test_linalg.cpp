// Copyright 2026 The tdlme Authors
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

#include <cmath>

#include "oracles.hpp"
#include "tdlme/errors.hpp"
#include "tdlme/linalg.hpp"

using namespace tdlme;

TEST_CASE("herm_eig on small fixed matrices") {
  auto r = herm_eig(ComplexMatrix::Identity(2, 2));
  CHECK(r.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(r.eigenvalues(1) == doctest::Approx(1.0));

  ComplexMatrix d(2, 2);
  d << 1, 0, 0, -1;
  r = herm_eig(d);
  CHECK(r.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(r.eigenvalues(1) == doctest::Approx(1.0));

  r = herm_eig(oracle::sx());
  CHECK(r.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(r.eigenvalues(1) == doctest::Approx(1.0));
  // (1, -1)/sqrt2 for -1 and (1, 1)/sqrt2 for +1, up to a phase.
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(r.eigenvectors.col(0).dot(Eigen::Vector2cd(s, -s))) == doctest::Approx(1.0));
  CHECK(std::abs(r.eigenvectors.col(1).dot(Eigen::Vector2cd(s, s))) == doctest::Approx(1.0));
}

TEST_CASE("herm_eig rejects bad input") {
  CHECK_THROWS_AS(herm_eig(ComplexMatrix::Zero(2, 3)), ContractViolation);
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(herm_eig(m), ContractViolation);
}

TEST_CASE("property: herm_eig reconstructs random Hermitian matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = trial % 2 ? 4 : 2;
    const ComplexMatrix m = oracle::random_hermitian(n);
    const auto r = herm_eig(m);
    const ComplexMatrix back = r.eigenvectors * r.eigenvalues.asDiagonal() * r.eigenvectors.adjoint();
    CHECK(max_abs(back - m) < 1e-9);
    CHECK(max_abs(r.eigenvectors.adjoint() * r.eigenvectors - ComplexMatrix::Identity(n, n)) < 1e-9);
    for (int k = 0; k + 1 < n; ++k) CHECK(r.eigenvalues(k) <= r.eigenvalues(k + 1));
    for (int k = 0; k < n; ++k) {
      CHECK(max_abs(m * r.eigenvectors.col(k) - r.eigenvalues(k) * r.eigenvectors.col(k)) < 1e-9);
    }
  }
}

TEST_CASE("kron examples") {
  CHECK(approx_equal(kron(Mat2::Identity(), Mat2::Identity()), Mat4::Identity(), 0.0));
  Mat4 zz = Mat4::Zero();
  zz.diagonal() << 1, -1, -1, 1;
  CHECK(approx_equal(kron(oracle::sz(), oracle::sz()), zz, 0.0));
  const ComplexMatrix k = kron(ComplexMatrix::Ones(2, 3), ComplexMatrix::Ones(3, 2));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
}

TEST_CASE("property: kron matches the index formula, is bilinear and associative") {
  for (int trial = 0; trial < 100; ++trial) {
    const Mat2 a = oracle::random_matrix(2);
    const Mat2 b = oracle::random_matrix(2);
    const Mat2 c = oracle::random_matrix(2);
    const Complex s(oracle::uniform(-2, 2), oracle::uniform(-2, 2));
    CHECK(max_abs(kron(a, b) - oracle::kron2(a, b)) == 0.0);
    CHECK(max_abs(kron(a + s * c, b) - (kron(a, b) + s * kron(c, b))) < 1e-12);
    CHECK(max_abs(kron(a, b + s * c) - (kron(a, b) + s * kron(a, c))) < 1e-12);
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12);
  }
}

TEST_CASE("lyapunov_solve examples") {
  const Mat2 c = lyapunov_solve(-0.5 * Mat2::Identity(), Mat2::Identity());
  CHECK(max_abs(c - Mat2::Identity()) < 1e-14);

  // Decoupled: w_ii = -(g+ + g-)/2 + i delta, d_ii = g+  ->  c_ii = g+ / (g+ + g-).
  const double gp[2] = {0.3, 1.7};
  const double gm[2] = {2.1, 0.4};
  Mat2 w = Mat2::Zero();
  Mat2 d = Mat2::Zero();
  for (int i = 0; i < 2; ++i) {
    w(i, i) = Complex(-0.5 * (gp[i] + gm[i]), i ? -3.0 : 3.0);
    d(i, i) = gp[i];
  }
  const Mat2 cd = lyapunov_solve(w, d);
  for (int i = 0; i < 2; ++i) CHECK(cd(i, i).real() == doctest::Approx(gp[i] / (gp[i] + gm[i])));
  CHECK(std::abs(cd(0, 1)) < 1e-14);
}

TEST_CASE("lyapunov_solve errors") {
  Mat2 w = Mat2::Identity();
  CHECK_THROWS_AS(lyapunov_solve(w, Mat2::Identity()), StabilityError);
  w = Mat2::Zero();
  w(0, 0) = -1.0;
  CHECK_THROWS_AS(lyapunov_solve(w, Mat2::Identity()), StabilityError);
}

TEST_CASE("property: lyapunov residual on random Hurwitz drift") {
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 w = oracle::random_matrix(2);
    const auto ev = eigenvalues(w);
    const double shift = std::max(ev(0).real(), ev(1).real()) + oracle::uniform(0.05, 2.0);
    w -= shift * Mat2::Identity();
    const Mat2 a = oracle::random_matrix(2);
    const Mat2 d = a * a.adjoint();
    const Mat2 c = lyapunov_solve(w, d);
    CHECK(max_abs(w * c + c * w.adjoint() + d) < 1e-12);
    CHECK(hermiticity_error(c) < 1e-12);
  }
}

TEST_CASE("matrix_log_hermitian") {
  CHECK(max_abs(matrix_log_hermitian(Mat4::Identity())) < 1e-15);
  const ComplexMatrix half = 0.5 * ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(matrix_log_hermitian(half) + std::log(2.0) * ComplexMatrix::Identity(2, 2)) < 1e-14);

  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const ComplexMatrix l = matrix_log_hermitian(pure);
  CHECK(std::abs(l(0, 0)) < 1e-15);
  CHECK(l(1, 1).real() == doctest::Approx(std::log(1e-12)));

  ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
  neg(1, 1) = -1e-6;
  CHECK_THROWS_AS(matrix_log_hermitian(neg), PositivityError);
  neg(1, 1) = -1e-11;
  CHECK_NOTHROW(matrix_log_hermitian(neg));
}

TEST_CASE("embed_qubit_op") {
  Mat4 z1 = Mat4::Zero();
  z1.diagonal() << 1, 1, -1, -1;
  Mat4 z2 = Mat4::Zero();
  z2.diagonal() << 1, -1, 1, -1;
  CHECK(approx_equal(embed_qubit_op(oracle::sz(), 1), z1, 0.0));
  CHECK(approx_equal(embed_qubit_op(oracle::sz(), 2), z2, 0.0));
  CHECK(approx_equal(embed_qubit_op(Mat2::Identity(), 2), Mat4::Identity(), 0.0));
  CHECK_THROWS_AS(embed_qubit_op(oracle::sz(), 3), ContractViolation);
  CHECK_THROWS_AS(embed_qubit_op(oracle::sz(), 0), ContractViolation);
}

TEST_CASE("property: operators on different qubits commute") {
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 a = embed_qubit_op(oracle::random_matrix(2), 1);
    const Mat4 b = embed_qubit_op(oracle::random_matrix(2), 2);
    CHECK(max_abs(a * b - b * a) < 1e-13);
  }
}

TEST_CASE("pauli ladder operators") {
  const Complex i(0, 1);
  CHECK(max_abs(pauli::raising() - 0.5 * (oracle::sx() + i * oracle::sy())) == 0.0);
  CHECK(max_abs(pauli::lowering() - 0.5 * (oracle::sx() - i * oracle::sy())) == 0.0);
  CHECK(max_abs(pauli::y() - oracle::sy()) == 0.0);
}
