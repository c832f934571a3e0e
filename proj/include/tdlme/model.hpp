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

#include <array>
#include <string>
#include <vector>

#include "tdlme/baths.hpp"
#include "tdlme/linalg.hpp"

namespace tdlme {

struct QubitParams {
  double epsilon = 1.0;          // half the bare gap
  double drive_amplitude = 0.0;  // f(t) = a sin(w t)
  double drive_frequency = 0.0;
};

struct SystemConfig {
  QubitParams qubit1;
  QubitParams qubit2;
  double lambda = 0.0;
  double zeta2 = 0.0;
  BathParams bath1;
  BathParams bath2;
  double k_b = 1.0;

  const QubitParams& qubit(int i) const;
  /// Bath i with k_B taken from this config.
  BathParams bath(int i) const;
  bool driven() const;

  /// Every invariant violation, each prefixed by its config key (e.g. "bath1.temperature").
  std::vector<std::string> violations() const;
  /// Throws ContractViolation listing all violations.
  void validate() const;
  /// Non-fatal notes, currently the weak-coupling check lambda <= min(eps_i).
  std::vector<std::string> warnings() const;
};

/// Two-qubit state in the basis {|uu>, |ud>, |du>, |dd>} (qubit 1 first).
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPositivityTol = 1e-8;

  /// Checks Hermiticity, unit trace and positivity. Throws ContractViolation or
  /// PositivityError.
  explicit DensityMatrix(const Mat4& m);

  static DensityMatrix maximally_mixed();
  /// Product of the bare Gibbs states of both qubits at their bath temperatures.
  static DensityMatrix gibbs_product(const SystemConfig& cfg);

  const Mat4& matrix() const { return m_; }

 private:
  Mat4 m_;
};

double drive(int i, double t, const SystemConfig& cfg);
double drive_rate(int i, double t, const SystemConfig& cfg);
/// theta_i = atan(f_i / eps_i).
double mixing_angle(int i, double t, const SystemConfig& cfg);
double mixing_angle_rate(int i, double t, const SystemConfig& cfg);
/// sqrt(eps_i^2 + f_i^2); the level splitting is twice this.
double instantaneous_gap(int i, double t, const SystemConfig& cfg);
/// -2 int_0^t sqrt(eps_i^2 + f_i^2) d tau.
double dynamic_phase_diff(int i, double t, const SystemConfig& cfg);

Mat4 hamiltonian(double t, const SystemConfig& cfg);
/// sum_i eps_i sz_i + f_i(t) sx_i.
Mat4 bare_hamiltonian(double t, const SystemConfig& cfg);
/// lambda (s1+ s2- + s1- s2+).
Mat4 interaction_hamiltonian(const SystemConfig& cfg);

struct JumpOperators {
  Mat4 z;
  Mat4 raise;
  Mat4 lower;
};

/// Jump operators of qubit i in its instantaneous eigenbasis, embedded in 4x4.
JumpOperators instantaneous_jump_ops(int i, double t, const SystemConfig& cfg);

struct Rates {
  double z = 0.0;
  double minus = 0.0;
  double plus = 0.0;
  bool any_negative() const { return z < 0.0 || minus < 0.0 || plus < 0.0; }
};

Rates dissipation_rates(int i, double t, const SystemConfig& cfg);

/// Frozen generator at one instant: -i[H, .] + zeta2 sum_i D_i.
class Generator {
 public:
  struct Channel {
    JumpOperators ops;
    Rates rates;
    Mat4 lower_dag_lower;  // s+ s-
    Mat4 raise_dag_raise;  // s- s+
  };

  Generator(Mat4 h, std::array<Channel, 2> channels, double zeta2);

  Mat4 apply(const Mat4& rho) const;
  /// D_i[rho] without the zeta2 prefactor.
  Mat4 dissipator(int i, const Mat4& rho) const;

  const Mat4& hamiltonian() const { return h_; }
  const Channel& channel(int i) const;
  double zeta2() const { return zeta2_; }
  bool rates_negative() const;

 private:
  Mat4 h_;
  std::array<Channel, 2> channels_;
  double zeta2_;
};

Generator tdlme_generator(double t, const SystemConfig& cfg);
/// Undriven generator with bare operators and rates gamma0(-/+ 2 eps_i); drive
/// amplitudes in cfg are ignored.
Generator lme_generator(const SystemConfig& cfg);

Mat4 tdlme_rhs(const DensityMatrix& rho, double t, const SystemConfig& cfg);
Mat4 lme_rhs(const DensityMatrix& rho, const SystemConfig& cfg);

}  // namespace tdlme
