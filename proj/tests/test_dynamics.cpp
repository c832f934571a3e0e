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
#include "tdlme/dynamics.hpp"
#include "tdlme/errors.hpp"
#include "tdlme/thermo.hpp"

using namespace tdlme;

TEST_CASE("rk4_step fixed point and unitary purity") {
  const IntegratorConfig ic;
  const Mat4 rho = oracle::random_density();
  auto zero = [](double, const Mat4&) -> Mat4 { return Mat4::Zero(); };
  CHECK(max_abs(rk4_step(rho, 0.0, 0.1, zero, ic) - rho) < 1e-16);

  SystemConfig c = oracle::crossing_config();
  c.zeta2 = 0.0;
  c.lambda = 0.8;
  const Generator g = lme_generator(c);
  auto unitary = [&](double, const Mat4& r) { return g.apply(r); };
  Eigen::Vector4cd psi(Complex(0.6, 0.1), Complex(0.2, -0.3), Complex(0.5, 0.0), Complex(0.1, 0.48));
  psi.normalize();
  Mat4 pure = psi * psi.adjoint();
  Mat4 mixed = 0.7 * pure + 0.3 * Mat4::Identity() / 4.0;
  for (const Mat4& start : {pure, mixed}) {
    Mat4 r = start;
    const double p0 = (r * r).trace().real();
    IntegratorConfig loose;
    loose.positivity_tol = 1e-6;
    // Per step the drift is far below (h |H|)^4 ~ 5e-8.
    double worst = 0.0;
    double prev = p0;
    for (int k = 0; k < 1000; ++k) {
      r = rk4_step(r, 1e-3 * k, 1e-3, unitary, loose);
      const double p = (r * r).trace().real();
      worst = std::max(worst, std::abs(p - prev));
      prev = p;
    }
    CHECK(worst < 1e-11);
    CHECK(std::abs(prev - p0) < 1e-8);
  }
}

TEST_CASE("RK4 convergence order on a smooth generator") {
  // Linear test problem y' = A(t) y with a time-dependent A; reference from a tiny step.
  Mat2 a0;
  a0 << Complex(-0.3, 1.0), Complex(0.5, 0.0), Complex(-0.2, 0.1), Complex(-0.1, -0.7);
  auto f = [&](double t, const Mat2& y) -> Mat2 { return (1.0 + 0.5 * std::sin(t)) * (a0 * y); };
  auto run = [&](double h, double t_end) {
    Mat2 y = Mat2::Identity();
    const int n = static_cast<int>(std::lround(t_end / h));
    for (int k = 0; k < n; ++k) y = rk4_raw(y, k * h, h, f);
    return y;
  };
  const Mat2 ref = run(1e-4, 2.0);
  const double e1 = max_abs(run(0.1, 2.0) - ref);
  const double e2 = max_abs(run(0.05, 2.0) - ref);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.2));

  // Single step: local error is fifth order.
  const Mat2 fine1 = run(1e-5, 0.2);
  const Mat2 fine2 = run(1e-5, 0.1);
  const double l1 = max_abs(rk4_raw(Mat2(Mat2::Identity()), 0.0, 0.2, f) - fine1);
  const double l2 = max_abs(rk4_raw(Mat2(Mat2::Identity()), 0.0, 0.1, f) - fine2);
  CHECK(l1 / l2 == doctest::Approx(32.0).epsilon(0.25));
}

TEST_CASE("positivity policy") {
  Mat4 rho = Mat4::Zero();
  rho(0, 0) = 1.0;
  Mat4 push = Mat4::Zero();
  push(0, 0) = 1.0;
  push(1, 1) = -1.0;
  auto rhs = [&](double, const Mat4&) { return push; };
  IntegratorConfig ic;
  CHECK_THROWS_AS(rk4_step(rho, 0.0, 0.01, rhs, ic), IntegrationError);
  ic.positivity = PositivityPolicy::kRecord;
  StepInfo info;
  rk4_step(rho, 0.0, 0.01, rhs, ic, &info);
  CHECK(info.min_eigenvalue == doctest::Approx(-0.01));
}

TEST_CASE("integrator config") {
  IntegratorConfig ic;
  const SystemConfig c = oracle::crossing_config();
  CHECK(ic.step_for(c) == doctest::Approx(5e-5));
  ic.step = 1e-3;
  CHECK(ic.step_for(c) == 1e-3);
  ic.record_stride = 0;
  CHECK_THROWS_AS(ic.validate(), ContractViolation);
  IntegratorConfig bad;
  bad.step = -1.0;
  CHECK_THROWS_AS(bad.validate(), ContractViolation);
}

TEST_CASE("single-qubit marginal relaxes to the detailed-balance population") {
  SystemConfig c = oracle::make_config(1.0, 0.5, 1.5, 1.0, 0.0, 0.5);
  IntegratorConfig ic;
  ic.step = 1e-3;
  ic.record_stride = 1000;
  const Trajectory tr = integrate(DensityMatrix::maximally_mixed(), 40.0, c, ic);
  const Mat4& r = tr.states.back();
  for (int i = 1; i <= 2; ++i) {
    const double excited = i == 1 ? (r(0, 0) + r(1, 1)).real() : (r(0, 0) + r(2, 2)).real();
    const double expect = 1.0 / (1.0 + std::exp(2.0 * c.bath(i).beta() * c.qubit(i).epsilon));
    CHECK(excited == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("undriven trajectory from I/4 keeps its invariants and settles by t = 20") {
  const SystemConfig c = oracle::crossing_config();
  IntegratorConfig ic;
  ic.record_stride = 100;
  const Trajectory tr = integrate(DensityMatrix::maximally_mixed(), 20.0, c, ic);
  CHECK(tr.renormalizations == 0);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    if (k) CHECK(tr.times[k] > tr.times[k - 1]);
    CHECK(std::abs(tr.states[k].trace().real() - 1.0) < 1e-10);
    CHECK(hermiticity_error(tr.states[k]) < 1e-10);
    CHECK(tr.min_eigenvalue[k] > -1e-8);
    CHECK_FALSE(tr.rate_negative[k]);
  }
  CHECK(tr.times.back() == 20.0);
  CHECK(max_abs(lme_generator(c).apply(tr.states.back())) < 1e-6);
}

TEST_CASE("step halving changes observables by less than 1e-8") {
  const SystemConfig c = oracle::crossing_config();
  IntegratorConfig ic;
  ic.record_stride = 1000000;
  const Trajectory a = integrate(DensityMatrix::maximally_mixed(), 3.0, c, ic);
  ic.step = 0.5 * ic.step_for(c);
  const Trajectory b = integrate(DensityMatrix::maximally_mixed(), 3.0, c, ic);
  const ThermoRecord ra = thermo_record(a.states.back(), 3.0, c);
  const ThermoRecord rb = thermo_record(b.states.back(), 3.0, c);
  CHECK(std::abs(ra.j1 - rb.j1) < 1e-8);
  CHECK(std::abs(ra.j2 - rb.j2) < 1e-8);
  CHECK(std::abs(ra.s - rb.s) < 1e-8);
  CHECK(std::abs(ra.sigma_dot - rb.sigma_dot) < 1e-8);
  CHECK(max_abs(a.states.back() - b.states.back()) < 1e-8);
}

TEST_CASE("driven trajectory records without throwing") {
  const SystemConfig d = oracle::driven_config();
  IntegratorConfig ic;
  ic.record_stride = 500;
  ic.positivity = PositivityPolicy::kRecord;
  const Trajectory tr = integrate(DensityMatrix::maximally_mixed(), 4.0, d, ic);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    CHECK(std::abs(tr.states[k].trace().real() - 1.0) < 1e-10);
    CHECK(hermiticity_error(tr.states[k]) < 1e-10);
  }
}

TEST_CASE("steady state by integration") {
  SystemConfig c = oracle::crossing_config();
  c.lambda = 0.0;
  IntegratorConfig ic;
  ic.step = 2e-3;
  const SteadyStateResult ss = steady_state_by_integration(DensityMatrix::maximally_mixed(), c, ic);
  CHECK(ss.residual < ic.steady_tol);
  CHECK(max_abs(lme_generator(c).apply(ss.state.matrix())) < ic.steady_tol);
  CHECK(max_abs(ss.state.matrix() - DensityMatrix::gibbs_product(c).matrix()) < 1e-8);

  IntegratorConfig short_run = ic;
  short_run.t_max = 0.5;
  CHECK_THROWS_AS(steady_state_by_integration(DensityMatrix::maximally_mixed(), c, short_run),
                  ConvergenceError);
  CHECK_THROWS_AS(steady_state_by_integration(DensityMatrix::maximally_mixed(), oracle::driven_config(), ic),
                  UnsupportedConfiguration);
  try {
    steady_state_by_integration(DensityMatrix::maximally_mixed(), c, short_run);
  } catch (const ConvergenceError& e) {
    CHECK(e.final_residual() > ic.steady_tol);
  }
}
