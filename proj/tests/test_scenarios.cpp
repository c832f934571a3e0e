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

#include <atomic>
#include <cmath>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tdlme/config.hpp"
#include "tdlme/errors.hpp"
#include "tdlme/scenarios.hpp"
#include "tdlme/thermo.hpp"

using namespace tdlme;

namespace {

ScenarioConfig base(ScenarioKind kind) {
  ScenarioConfig c;
  c.kind = kind;
  c.system = oracle::crossing_config();
  return c;
}

std::string render(const CsvTable& t) {
  std::ostringstream s;
  write_csv(t, s);
  return s.str();
}

std::size_t column(const CsvTable& t, const std::string& name) {
  for (std::size_t k = 0; k < t.header.size(); ++k) {
    if (t.header[k] == name) return k;
  }
  FAIL("missing column " << name);
  return 0;
}

double num(const CsvCell& c) { return std::get<double>(c); }

}  // namespace

TEST_CASE("parallel_for visits every index once") {
  for (unsigned threads : {1u, 2u, 4u}) {
    std::vector<std::atomic<int>> hits(37);
    parallel_for(hits.size(), threads, [&](std::size_t k) { ++hits[k]; });
    for (auto& h : hits) CHECK(h == 1);
  }
  CHECK_THROWS_AS(parallel_for(8, 2, [](std::size_t k) {
                    if (k == 5) throw NumericalError("boom", 1.0);
                  }),
                  NumericalError);
}

TEST_CASE("evolve columns") {
  ScenarioConfig c = base(ScenarioKind::kEvolve);
  c.t_end = 0.5;
  c.record_interval = 0.1;
  const ScenarioResult r = run_scenario(c);
  CHECK(r.table.header == std::vector<std::string>{"t", "J1", "J2", "Js1", "JI1", "Js2", "JI2", "S", "Sigma_dot",
                                                   "min_eig", "rate_neg_flag"});
  REQUIRE(r.table.rows.size() == 6);
  CHECK(num(r.table.rows.front()[0]) == 0.0);
  CHECK(num(r.table.rows.back()[0]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(num(r.table.rows.front()[column(r.table, "S")]) == doctest::Approx(std::log(4.0)));
  for (const auto& row : r.table.rows) {
    CHECK(std::get<long long>(row[10]) == 0);
    CHECK(std::abs(num(row[1]) - num(row[3]) - num(row[4])) < 1e-12);
  }
}

TEST_CASE("driven columns") {
  ScenarioConfig c = base(ScenarioKind::kDriven);
  c.system = oracle::driven_config();
  c.t_end = 0.2;
  c.record_interval = 0.1;
  const ScenarioResult r = run_scenario(c);
  CHECK(r.table.header.size() == 13);
  CHECK(r.table.header[11] == "beta_eff_dev1");
  for (const auto& row : r.table.rows) CHECK(num(row[11]) < 0.05);
}

TEST_CASE("steady scenario") {
  ScenarioConfig c = base(ScenarioKind::kSteady);
  c.integrator.step = 1e-3;
  const ScenarioResult r = run_scenario(c);
  REQUIRE(r.table.rows.size() == 1);
  CHECK(r.table.header.size() == 8 + 32 + 4);
  CHECK(std::get<std::string>(r.table.rows[0].back()) == "ok");
  const auto& row = r.table.rows[0];
  CHECK(num(row[column(r.table, "J1")]) < 0.0);
  CHECK(num(row[column(r.table, "C11_re")]) ==
        doctest::Approx(num(row[column(r.table, "rho11_re")]) + num(row[column(r.table, "rho22_re")])).epsilon(1e-6));
  CHECK(std::abs(num(row[column(r.table, "J1")]) + num(row[column(r.table, "J2")])) < 1e-9);
}

TEST_CASE("steady point falls back to integration for degenerate drift") {
  const SystemConfig c = oracle::make_config(5, 5, 10, 10, 0.0, 0.5);
  IntegratorConfig ic;
  ic.step = 1e-3;
  const SteadyPoint p = steady_point(c, ic);
  CHECK(p.status == "fallback_integration");
  CHECK(std::abs(p.j1) < 1e-9);
  CHECK(steady_point(oracle::crossing_config()).status == "ok");
}

TEST_CASE("sweeps are deterministic across thread counts") {
  ScenarioConfig c = base(ScenarioKind::kSweepBoundary);
  c.t_ratio = {1.0, 1.5, 2.0};
  c.eps_ratio = {0.5, 1.25, 2.0, 2.5};
  const ScenarioResult one = run_scenario(c, RunOptions{1, {}});
  const ScenarioResult three = run_scenario(c, RunOptions{3, {}});
  CHECK(render(one.table) == render(three.table));
  REQUIRE(one.table.rows.size() == 12);
  CHECK(one.table.header == std::vector<std::string>{"T1_over_T2", "eps1_over_eps2", "Sigma_dot_ss", "status"});
  for (const auto& row : one.table.rows) CHECK(std::get<std::string>(row[3]) == "ok");
  // Row order is T-major.
  CHECK(num(one.table.rows[4][0]) == 1.5);
  CHECK(num(one.table.rows[4][1]) == 0.5);
}

TEST_CASE("detuning and scaling sweeps") {
  ScenarioConfig d = base(ScenarioKind::kSweepDetuning);
  d.system = oracle::make_config(10, 10, 15, 10, 0.2, 0.1);
  d.delta_eps = {0.0, 0.9, 6.0};
  const ScenarioResult rd = run_scenario(d, RunOptions{2, {}});
  REQUIRE(rd.table.rows.size() == 3);
  CHECK(num(rd.table.rows[0][1]) > 0.0);
  CHECK(std::abs(num(rd.table.rows[1][1])) < 0.01);
  CHECK(num(rd.table.rows[2][1]) < 0.0);
  for (const auto& row : rd.table.rows) CHECK(std::get<std::string>(row[2]) == "ok");

  ScenarioConfig s = base(ScenarioKind::kSweepScaling);
  s.system = oracle::make_config(15, 10, 20, 10, 0.01, 0.5);
  s.scaling_axis = ScalingAxis::kLambda2;
  s.scaling_values = {1e-4, 1e-3, 1e-2};
  const ScenarioResult rs = run_scenario(s);
  CHECK(rs.table.header[0] == "lambda2");
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : rs.table.rows) {
    x.push_back(num(row[0]));
    y.push_back(num(row[1]));
  }
  CHECK(fit_power_law(x, y).slope == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("relaxation sweep") {
  ScenarioConfig c = base(ScenarioKind::kRelaxation);
  c.zeta2_values = {0.5};
  const ScenarioResult r = run_scenario(c);
  REQUIRE(r.table.rows.size() == 1);
  const auto& row = r.table.rows[0];
  CHECK(std::get<std::string>(row[4]) == "found");
  CHECK(num(row[1]) == doctest::Approx(2.23).epsilon(0.05));
  CHECK(num(row[3]) == doctest::Approx(num(row[1]) / num(row[2])));
}

TEST_CASE("run_scenario contracts") {
  ScenarioConfig c = base(ScenarioKind::kSteady);
  c.kind.reset();
  CHECK_THROWS_AS(run_scenario(c), ContractViolation);
  c = base(ScenarioKind::kSteady);
  c.system = oracle::driven_config();
  CHECK_THROWS_AS(run_scenario(c), UnsupportedConfiguration);
}
