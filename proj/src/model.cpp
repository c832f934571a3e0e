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

#include "tdlme/model.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

void check_index(int i) {
  if (i != 1 && i != 2) {
    throw ContractViolation("qubit index " + std::to_string(i) + " outside {1, 2}");
  }
}

struct QubitFrame {
  double f = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;
  double gap = 0.0;
};

QubitFrame frame(int i, double t, const SystemConfig& cfg, bool drive_on) {
  const QubitParams& q = cfg.qubit(i);
  QubitFrame out;
  double fdot = 0.0;
  if (drive_on) {
    out.f = q.drive_amplitude * std::sin(q.drive_frequency * t);
    fdot = q.drive_amplitude * q.drive_frequency * std::cos(q.drive_frequency * t);
  }
  out.theta = std::atan(out.f / q.epsilon);
  out.theta_dot = q.epsilon * fdot / (q.epsilon * q.epsilon + out.f * out.f);
  out.gap = std::hypot(q.epsilon, out.f);
  return out;
}

Mat4 bare_part(const QubitFrame& f1, const QubitFrame& f2, const SystemConfig& cfg) {
  return cfg.qubit1.epsilon * embed_qubit_op(pauli::z(), 1) + f1.f * embed_qubit_op(pauli::x(), 1) +
         cfg.qubit2.epsilon * embed_qubit_op(pauli::z(), 2) + f2.f * embed_qubit_op(pauli::x(), 2);
}

JumpOperators jump_ops(int i, const QubitFrame& fr) {
  const double c = std::cos(0.5 * fr.theta);
  const double s = std::sin(0.5 * fr.theta);
  Eigen::Vector2cd e(c, s);
  Eigen::Vector2cd g(-s, c);
  const Mat2 z = e * e.adjoint() - g * g.adjoint();
  const Mat2 raise = e * g.adjoint();
  return {embed_qubit_op(z, i), embed_qubit_op(raise, i), embed_qubit_op(raise.adjoint(), i)};
}

Rates rates(const QubitFrame& fr, const BathParams& b) {
  const double sn = std::sin(fr.theta);
  const double cs = std::cos(fr.theta);
  const double dsn = cs * fr.theta_dot;
  const double dcs = -sn * fr.theta_dot;
  const double w = 2.0 * fr.gap;
  Rates r;
  r.z = gamma0_closed(0.0, b) * sn * sn + gamma1_real(0.0, b) * sn * dsn;
  r.minus = gamma0_closed(w, b) * cs * cs + gamma1_real(w, b) * cs * dcs;
  r.plus = gamma0_closed(-w, b) * cs * cs + gamma1_real(-w, b) * cs * dcs;
  return r;
}

Generator::Channel make_channel(int i, const QubitFrame& fr, const BathParams& b) {
  Generator::Channel ch;
  ch.ops = jump_ops(i, fr);
  ch.rates = rates(fr, b);
  ch.lower_dag_lower = ch.ops.raise * ch.ops.lower;
  ch.raise_dag_raise = ch.ops.lower * ch.ops.raise;
  return ch;
}

// Shared by the TDLME and the LME so that zero drive gives bit-identical generators.
Generator build(double t, const SystemConfig& cfg, bool drive_on) {
  const QubitFrame f1 = frame(1, t, cfg, drive_on);
  const QubitFrame f2 = frame(2, t, cfg, drive_on);
  Mat4 h = bare_part(f1, f2, cfg) + interaction_hamiltonian(cfg);
  return Generator(h, {make_channel(1, f1, cfg.bath(1)), make_channel(2, f2, cfg.bath(2))},
                   cfg.zeta2);
}

}  // namespace

const QubitParams& SystemConfig::qubit(int i) const {
  check_index(i);
  return i == 1 ? qubit1 : qubit2;
}

BathParams SystemConfig::bath(int i) const {
  check_index(i);
  BathParams b = i == 1 ? bath1 : bath2;
  b.k_b = k_b;
  return b;
}

bool SystemConfig::driven() const {
  return qubit1.drive_amplitude != 0.0 || qubit2.drive_amplitude != 0.0;
}

std::vector<std::string> SystemConfig::violations() const {
  std::vector<std::string> out;
  auto need = [&](bool ok, const std::string& key, const char* what) {
    if (!ok) out.push_back(key + ": " + what);
  };
  for (int i = 1; i <= 2; ++i) {
    const std::string n = std::to_string(i);
    const QubitParams& p = qubit(i);
    need(std::isfinite(p.epsilon) && p.epsilon > 0.0, "system.epsilon" + n, "must be positive");
    need(std::isfinite(p.drive_amplitude) && p.drive_amplitude >= 0.0, "drive.amplitude" + n,
         "must be non-negative");
    need(std::isfinite(p.drive_frequency) && p.drive_frequency >= 0.0, "drive.frequency" + n,
         "must be non-negative");
    const std::string b = "bath" + n;
    const BathParams& bp = i == 1 ? bath1 : bath2;
    need(std::isfinite(bp.temperature) && bp.temperature > 0.0, b + ".temperature", "must be positive");
    need(std::isfinite(bp.kappa) && bp.kappa > 0.0, b + ".kappa", "must be positive");
    need(std::isfinite(bp.cutoff) && bp.cutoff > 0.0, b + ".cutoff", "must be positive");
  }
  need(std::isfinite(lambda) && lambda >= 0.0, "system.lambda", "must be non-negative");
  need(std::isfinite(zeta2) && zeta2 >= 0.0, "system.zeta2", "must be non-negative");
  need(std::isfinite(k_b) && k_b > 0.0, "system.k_b", "must be positive");
  return out;
}

void SystemConfig::validate() const {
  const auto v = violations();
  if (v.empty()) return;
  std::ostringstream msg;
  msg << "invalid system configuration:";
  for (const auto& s : v) msg << "\n  " << s;
  throw ContractViolation(msg.str());
}

std::vector<std::string> SystemConfig::warnings() const {
  std::vector<std::string> out;
  const double limit = 0.5 * std::min(2.0 * qubit1.epsilon, 2.0 * qubit2.epsilon);
  if (lambda > limit) {
    out.push_back("system.lambda = " + std::to_string(lambda) +
                  " exceeds half the smaller bare gap; the weak-coupling premise is doubtful");
  }
  return out;
}

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
  const double herr = hermiticity_error(m);
  if (herr > kHermitianTol) {
    throw ContractViolation("DensityMatrix: not Hermitian (max |rho - rho^H| = " +
                            std::to_string(herr) + ")");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ContractViolation("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
  }
  const double lo = min_eigenvalue(m);
  if (lo < -kPositivityTol) {
    throw PositivityError("DensityMatrix: eigenvalue " + std::to_string(lo) + " below tolerance", lo);
  }
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Mat4::Identity() / 4.0); }

DensityMatrix DensityMatrix::gibbs_product(const SystemConfig& cfg) {
  auto local = [&](int i) {
    const double be = cfg.bath(i).beta() * cfg.qubit(i).epsilon;
    // Populations of |u> and |d> for H = eps sz, written to stay finite at large beta eps.
    const double pu = 1.0 / (1.0 + std::exp(2.0 * be));
    Mat2 r = Mat2::Zero();
    r(0, 0) = pu;
    r(1, 1) = 1.0 - pu;
    return r;
  };
  Mat4 m = kron(local(1), local(2));
  return DensityMatrix(m);
}

double drive(int i, double t, const SystemConfig& cfg) {
  const QubitParams& q = cfg.qubit(i);
  return q.drive_amplitude * std::sin(q.drive_frequency * t);
}

double drive_rate(int i, double t, const SystemConfig& cfg) {
  const QubitParams& q = cfg.qubit(i);
  return q.drive_amplitude * q.drive_frequency * std::cos(q.drive_frequency * t);
}

double mixing_angle(int i, double t, const SystemConfig& cfg) { return frame(i, t, cfg, true).theta; }

double mixing_angle_rate(int i, double t, const SystemConfig& cfg) {
  return frame(i, t, cfg, true).theta_dot;
}

double instantaneous_gap(int i, double t, const SystemConfig& cfg) {
  return frame(i, t, cfg, true).gap;
}

double dynamic_phase_diff(int i, double t, const SystemConfig& cfg) {
  if (!(t >= 0.0)) throw ContractViolation("dynamic_phase_diff: t must be >= 0");
  if (t == 0.0) return 0.0;
  auto f = [&](double tau) { return instantaneous_gap(i, tau, cfg); };
  return -2.0 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, t, 20, 1e-10);
}

Mat4 hamiltonian(double t, const SystemConfig& cfg) {
  return bare_hamiltonian(t, cfg) + interaction_hamiltonian(cfg);
}

Mat4 bare_hamiltonian(double t, const SystemConfig& cfg) {
  return bare_part(frame(1, t, cfg, true), frame(2, t, cfg, true), cfg);
}

Mat4 interaction_hamiltonian(const SystemConfig& cfg) {
  const Mat4 up1 = embed_qubit_op(pauli::raising(), 1);
  const Mat4 dn1 = embed_qubit_op(pauli::lowering(), 1);
  const Mat4 up2 = embed_qubit_op(pauli::raising(), 2);
  const Mat4 dn2 = embed_qubit_op(pauli::lowering(), 2);
  return cfg.lambda * (up1 * dn2 + dn1 * up2);
}

JumpOperators instantaneous_jump_ops(int i, double t, const SystemConfig& cfg) {
  return jump_ops(i, frame(i, t, cfg, true));
}

Rates dissipation_rates(int i, double t, const SystemConfig& cfg) {
  return rates(frame(i, t, cfg, true), cfg.bath(i));
}

Generator::Generator(Mat4 h, std::array<Channel, 2> channels, double zeta2)
    : h_(std::move(h)), channels_(std::move(channels)), zeta2_(zeta2) {}

const Generator::Channel& Generator::channel(int i) const {
  check_index(i);
  return channels_[static_cast<std::size_t>(i - 1)];
}

Mat4 Generator::dissipator(int i, const Mat4& rho) const {
  const Channel& ch = channel(i);
  const JumpOperators& o = ch.ops;
  const Rates& r = ch.rates;
  Mat4 out = r.z * (o.z * rho * o.z - rho);
  out.noalias() += r.minus * (o.lower * rho * o.raise -
                              0.5 * (ch.lower_dag_lower * rho + rho * ch.lower_dag_lower));
  out.noalias() += r.plus * (o.raise * rho * o.lower -
                             0.5 * (ch.raise_dag_raise * rho + rho * ch.raise_dag_raise));
  return out;
}

Mat4 Generator::apply(const Mat4& rho) const {
  const Complex minus_i{0.0, -1.0};
  Mat4 out = minus_i * (h_ * rho - rho * h_);
  out.noalias() += zeta2_ * (dissipator(1, rho) + dissipator(2, rho));
  return out;
}

bool Generator::rates_negative() const {
  return channels_[0].rates.any_negative() || channels_[1].rates.any_negative();
}

Generator tdlme_generator(double t, const SystemConfig& cfg) { return build(t, cfg, true); }

Generator lme_generator(const SystemConfig& cfg) { return build(0.0, cfg, false); }

Mat4 tdlme_rhs(const DensityMatrix& rho, double t, const SystemConfig& cfg) {
  return tdlme_generator(t, cfg).apply(rho.matrix());
}

Mat4 lme_rhs(const DensityMatrix& rho, const SystemConfig& cfg) {
  return lme_generator(cfg).apply(rho.matrix());
}

}  // namespace tdlme
