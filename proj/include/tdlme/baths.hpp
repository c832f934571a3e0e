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

#include <optional>

#include "tdlme/linalg.hpp"

namespace tdlme {

struct BathParams {
  double temperature = 1.0;
  double kappa = 1.0;
  double cutoff = 1.0;
  double k_b = 1.0;

  /// Throws ContractViolation when T, kappa, cutoff or k_B is not strictly positive
  /// or when beta is not finite.
  void validate() const;
  double beta() const { return 1.0 / (k_b * temperature); }
  double thermal_energy() const { return k_b * temperature; }
  /// k_B T >= Omega. The closed-form S0 and Gamma1 are only trustworthy here.
  bool high_temperature_regime() const { return thermal_energy() >= cutoff; }
};

struct QuadratureConfig {
  std::optional<double> s_max;      // default 40 / Omega
  std::optional<double> omega_max;  // default 50 max(Omega, k_B T)
  double rel_tol = 1e-8;

  void validate() const;
  double s_max_for(const BathParams& b) const;
  double omega_max_for(const BathParams& b) const;
};

/// Lorentz-Drude damped Ohmic density (2 kappa / pi) w Omega^2 / (Omega^2 + w^2).
double spectral_density(double omega, const BathParams& b);

/// d J / d omega.
double spectral_density_derivative(double omega, const BathParams& b);

/// Bath correlation function C(s) = int_0^inf dw J(w) [coth(beta w / 2) cos(w s) - i sin(w s)].
///
/// For s > 0 both Fourier integrals run over the half line with a double-exponential
/// Fourier rule. At s = 0 the real part is integrated up to omega_max (it diverges
/// logarithmically without the cutoff) and the imaginary part is zero.
Complex correlation_function(double s, const BathParams& b, const QuadratureConfig& q = {});

/// pi J(x) (coth(beta x / 2) + 1), with the limit 4 kappa k_B T at |x| < 1e-9 Omega.
double gamma0_closed(double x, const BathParams& b);

/// 2 int ds Re[e^{i x s} C(s)] by nested quadrature, regularized with e^{-eps s}
/// (eps = 1e-3 Omega) and Richardson-extrapolated to eps -> 0. Throws NumericalError
/// for rates below 1e-8 kappa Omega (Omega + 2 k_B T), e.g. deep Boltzmann tails.
double gamma0_numeric(double x, const BathParams& b, const QuadratureConfig& q = {});

/// High-temperature closed form kappa Omega (2 k_B T x - Omega^2) / (x^2 + Omega^2).
double s0_closed(double x, const BathParams& b);

/// int ds Im[e^{i x s} C(s)] with the same regularization as gamma0_numeric.
double s0_numeric(double x, const BathParams& b, const QuadratureConfig& q = {});

/// gamma0 / 2 + i S0.
Complex gamma0_complex(double x, const BathParams& b);

/// First-order rate Gamma1 in closed form. Near x = 0 the imaginary part is
/// evaluated from its Taylor series to avoid cancellation.
Complex gamma1_closed(double x, const BathParams& b);

/// gamma1(x) = Gamma1 + conj(Gamma1) = 2 Re Gamma1.
double gamma1_real(double x, const BathParams& b);

}  // namespace tdlme
