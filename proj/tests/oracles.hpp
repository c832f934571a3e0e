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

// Independent reference helpers for the unit tests: brute-force sums, random
// matrices and the reference configurations used throughout.

#include <cmath>
#include <functional>
#include <random>

#include "tdlme/model.hpp"

namespace oracle {

using tdlme::Complex;
using tdlme::ComplexMatrix;
using tdlme::Mat2;
using tdlme::Mat4;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234ULL);
  return gen;
}

inline double uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng());
}

inline ComplexMatrix random_matrix(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
  }
  return m;
}

inline ComplexMatrix random_hermitian(int n) {
  const ComplexMatrix a = random_matrix(n);
  return 0.5 * (a + a.adjoint());
}

/// Random full-rank density matrix A A^H / Tr.
inline Mat4 random_density() {
  const ComplexMatrix a = random_matrix(4);
  ComplexMatrix r = a * a.adjoint();
  r /= r.trace().real();
  return Mat4(0.5 * (r + r.adjoint()));
}

/// Midpoint rule with n panels.
inline double riemann(const std::function<double(double)>& f, double a, double b, long n) {
  const double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (long k = 0; k < n; ++k) sum += f(a + (static_cast<double>(k) + 0.5) * h);
  return sum * h;
}

inline Mat2 sx() { Mat2 m; m << 0, 1, 1, 0; return m; }
inline Mat2 sy() { Mat2 m; m << 0, Complex(0, -1), Complex(0, 1), 0; return m; }
inline Mat2 sz() { Mat2 m; m << 1, 0, 0, -1; return m; }

/// Written out element by element instead of through kron.
inline Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

inline tdlme::BathParams bath(double t, double kappa = 10.0, double cutoff = 1.0) {
  tdlme::BathParams b;
  b.temperature = t;
  b.kappa = kappa;
  b.cutoff = cutoff;
  return b;
}

inline tdlme::SystemConfig make_config(double e1, double e2, double t1, double t2, double lambda,
                                       double zeta2) {
  tdlme::SystemConfig c;
  c.qubit1.epsilon = e1;
  c.qubit2.epsilon = e2;
  c.bath1 = bath(t1);
  c.bath2 = bath(t2);
  c.lambda = lambda;
  c.zeta2 = zeta2;
  return c;
}

/// S0 from the Matsubara expansion of the bath correlation function, summed to
/// n = terms. Each term integrates in closed form against e^{-a s} sin(x s).
inline double s0_matsubara(double x, const tdlme::BathParams& b, int terms = 20000) {
  const double om = b.cutoff;
  const double kt = b.thermal_energy();
  double out = 2.0 * b.kappa * om * kt * x / (om * om + x * x) - b.kappa * om * om * om / (om * om + x * x);
  const double pref = 2.0 * b.kappa * om * om * kt;
  for (int n = 1; n <= terms; ++n) {
    const double nu = 2.0 * 3.14159265358979323846 * n * kt;
    out += 2.0 * pref * x * (om / (om * om + x * x) - nu / (nu * nu + x * x)) / (om * om - nu * nu);
  }
  return out;
}

/// eps = (10, 5), T = (15, 10), lambda = zeta2 = 0.5, kappa = 10, Omega = 1.
inline tdlme::SystemConfig crossing_config() { return make_config(10, 5, 15, 10, 0.5, 0.5); }

inline tdlme::SystemConfig driven_config() {
  tdlme::SystemConfig c = crossing_config();
  c.qubit1.drive_amplitude = c.qubit2.drive_amplitude = 2.0;
  c.qubit1.drive_frequency = c.qubit2.drive_frequency = 0.2;
  return c;
}

}  // namespace oracle
