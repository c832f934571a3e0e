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

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tdlme {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kLogFloor = 1e-12;

struct HermitianEigResult {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Throws ContractViolation when the
/// input is not square or deviates from Hermiticity by more than hermitian_tol.
HermitianEigResult herm_eig(const ComplexMatrix& m, double hermitian_tol = kHermitianTol);

/// Smallest eigenvalue of a 4x4 Hermitian matrix (only the lower triangle is read).
double min_eigenvalue(const Mat4& m);

/// Kronecker product, (A⊗B)[i*rB+k, j*cB+l] = A[i,j] B[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a general 2x2 complex matrix.
Eigen::Vector2cd eigenvalues(const Mat2& m);

/// Solves W C + C W† + D = 0 for C through the vectorized 4x4 system
/// (I⊗W + conj(W)⊗I) vec(C) = -vec(D).
///
/// Throws StabilityError when some eigenvalue of W has real part >= -1e-14 and
/// NumericalError when the Kronecker system is singular.
Mat2 lyapunov_solve(const Mat2& w, const Mat2& d);

/// Natural logarithm of a Hermitian positive semidefinite matrix. Eigenvalues
/// below kLogFloor are clamped to kLogFloor before the logarithm; eigenvalues
/// below -negative_tol raise PositivityError.
ComplexMatrix matrix_log_hermitian(const ComplexMatrix& rho, double negative_tol = kHermitianTol);

/// op⊗I for which == 1, I⊗op for which == 2.
Mat4 embed_qubit_op(const Mat2& op, int which);

double max_abs(const ComplexMatrix& m);
double hermiticity_error(const ComplexMatrix& m);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol);

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 raising();   // (σx + iσy)/2 = |↑⟩⟨↓|
Mat2 lowering();  // (σx - iσy)/2 = |↓⟩⟨↑|
}  // namespace pauli

}  // namespace tdlme
