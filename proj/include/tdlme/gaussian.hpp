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

#include <cstddef>
#include <vector>

#include "tdlme/model.hpp"

namespace tdlme {

/// C_ij = Tr(s_i+ s_j- rho), s_i the lowering operator of qubit i.
using CovarianceMatrix = Mat2;

struct DriftDiffusion {
  Mat2 w;  // drift
  Mat2 d;  // diffusion, real diagonal
};

/// Throws UnsupportedConfiguration for a driven configuration.
DriftDiffusion drift_diffusion(const SystemConfig& cfg);

/// W C + C W^H + D.
Mat2 covariance_rhs(const CovarianceMatrix& c, const DriftDiffusion& dd);

CovarianceMatrix steady_covariance(const DriftDiffusion& dd);

CovarianceMatrix covariance_from_density(const Mat4& rho);
CovarianceMatrix covariance_from_density(const DensityMatrix& rho);

/// 1 / |2 max_k Re w_k|. Throws StabilityError when W is not Hurwitz.
double relaxation_time(const DriftDiffusion& dd);

struct HeatCurrents {
  double j1 = 0.0;
  double j2 = 0.0;
};

HeatCurrents steady_heat_currents(const CovarianceMatrix& c, const SystemConfig& cfg);

struct CovarianceTrajectory {
  std::vector<double> times;
  std::vector<CovarianceMatrix> states;
};

/// RK4 integration of dC/dt = W C + C W^H + D over [0, t_end], recording every
/// stride-th step and the endpoint.
CovarianceTrajectory integrate_covariance(const CovarianceMatrix& c0, double t_end,
                                          const DriftDiffusion& dd, double step,
                                          std::size_t stride = 1);

}  // namespace tdlme
