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

#include "tdlme/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tdlme/errors.hpp"

namespace tdlme {

HermitianEigResult herm_eig(const ComplexMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols()) {
    throw ContractViolation("herm_eig: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
  const double herr = hermiticity_error(m);
  if (herr > hermitian_tol) {
    throw ContractViolation("herm_eig: matrix is not Hermitian (max |M - M^H| = " +
                            std::to_string(herr) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const Mat4& m) {
  Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Vector2cd eigenvalues(const Mat2& m) {
  // Roots of z^2 - tr z + det, written to avoid cancellation in the smaller root.
  const Complex half_tr = 0.5 * (m(0, 0) + m(1, 1));
  const Complex half_diff = 0.5 * (m(0, 0) - m(1, 1));
  const Complex disc = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));
  Eigen::Vector2cd w;
  w << half_tr - disc, half_tr + disc;
  return w;
}

Mat2 lyapunov_solve(const Mat2& w, const Mat2& d) {
  const Eigen::Vector2cd ev = eigenvalues(w);
  for (Eigen::Index k = 0; k < 2; ++k) {
    if (ev(k).real() >= -1e-14) {
      throw StabilityError("lyapunov_solve: drift matrix is not Hurwitz (Re w = " +
                           std::to_string(ev(k).real()) + ")");
    }
  }
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix system = kron(id, w) + kron(w.conjugate(), id);
  Eigen::FullPivLU<ComplexMatrix> lu(system);
  if (!lu.isInvertible()) {
    throw NumericalError("lyapunov_solve: singular Kronecker system");
  }
  const Eigen::Map<const Eigen::Vector4cd> vec_d(d.data());
  const Eigen::VectorXcd vec_c = lu.solve(-vec_d);
  return Eigen::Map<const Mat2>(vec_c.data());
}

ComplexMatrix matrix_log_hermitian(const ComplexMatrix& rho, double negative_tol) {
  const HermitianEigResult eig = herm_eig(rho);
  const double lowest = eig.eigenvalues(0);
  if (lowest < -negative_tol) {
    throw PositivityError(
        "matrix_log_hermitian: eigenvalue " + std::to_string(lowest) + " below tolerance", lowest);
  }
  Eigen::VectorXd logs(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < logs.size(); ++k) {
    logs(k) = std::log(std::max(eig.eigenvalues(k), kLogFloor));
  }
  ComplexMatrix out = eig.eigenvectors * logs.asDiagonal() * eig.eigenvectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

Mat4 embed_qubit_op(const Mat2& op, int which) {
  if (which == 1) return kron(op, pauli::identity());
  if (which == 2) return kron(pauli::identity(), op);
  throw ContractViolation("embed_qubit_op: qubit index " + std::to_string(which) +
                          " outside {1, 2}");
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double abs_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= abs_tol;
}

namespace pauli {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Mat2 y() {
  const Complex i{0.0, 1.0};
  Mat2 m;
  m << 0.0, -i, i, 0.0;
  return m;
}

Mat2 z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Mat2 raising() {
  Mat2 m;
  m << 0.0, 1.0, 0.0, 0.0;
  return m;
}

Mat2 lowering() {
  Mat2 m;
  m << 0.0, 0.0, 1.0, 0.0;
  return m;
}

}  // namespace pauli

}  // namespace tdlme
