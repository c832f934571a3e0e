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

#include "tdlme/baths.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

using boost::math::quadrature::gauss_kronrod;
using boost::math::quadrature::ooura_fourier_cos;
using boost::math::quadrature::ooura_fourier_sin;

constexpr double kPi = std::numbers::pi;

// J(w) coth(beta w / 2), continued to w = 0.
double symmetrized_density(double w, const BathParams& b) {
  const double om2 = b.cutoff * b.cutoff;
  if (std::abs(w) < 1e-6 * b.cutoff) {
    return (2.0 * b.kappa / kPi) * om2 / (om2 + w * w) * 2.0 * b.thermal_energy();
  }
  return spectral_density(w, b) / std::tanh(0.5 * b.beta() * w);
}

// The Fourier rules precompute node tables and are not const-callable.
ooura_fourier_cos<double>& cos_rule() {
  thread_local ooura_fourier_cos<double> rule(1e-9, 5);
  return rule;
}

ooura_fourier_sin<double>& sin_rule() {
  thread_local ooura_fourier_sin<double> rule(1e-9, 5);
  return rule;
}

// Absolute error allowance measured against the size of C near s = 0. Once the
// envelope e^{-Omega s} has dropped below the allowance the transform is negligible
// and the rule's level-difference estimate (very pessimistic there) is not used.
void check_fourier(std::pair<double, double> r, double s, const BathParams& b, const char* which) {
  const double scale = b.kappa * b.cutoff * (b.cutoff + 2.0 * b.thermal_energy());
  const double floor = 1e-7 * scale;
  const bool negligible = scale * std::exp(-b.cutoff * s) < floor;
  if (!std::isfinite(r.first) ||
      (!negligible && r.second > std::max(1e-4 * std::abs(r.first), floor))) {
    throw NumericalError(std::string("correlation_function: ") + which +
                             " Fourier integral did not converge",
                         r.second);
  }
}

// Integrates 2u g(u^2) e^{-eps u^2} over u in [0, sqrt(s_max)]; the substitution
// s = u^2 tames the logarithmic singularity of Re C at s = 0.
template <class F>
double regularized_time_integral(F&& g, double eps, const BathParams& b, const QuadratureConfig& q) {
  const double umax = std::sqrt(q.s_max_for(b));
  auto integrand = [&](double u) {
    const double s = u * u;
    if (s == 0.0) return 0.0;
    return 2.0 * u * g(s) * std::exp(-eps * s);
  };
  double err = 0.0;
  const double value = gauss_kronrod<double, 31>::integrate(integrand, 0.0, umax, 20, q.rel_tol, &err);
  const double scale = std::max(std::abs(value), 1e-9 * b.kappa * b.cutoff * b.cutoff);
  if (!std::isfinite(value) || err > 1e-4 * scale) {
    throw NumericalError("time integral did not converge", err / scale);
  }
  return value;
}

template <class F>
double richardson(F&& integral_at, const BathParams& b) {
  const double eps = 1e-3 * b.cutoff;
  return 2.0 * integral_at(0.5 * eps) - integral_at(eps);
}

}  // namespace

void BathParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ContractViolation(std::string("BathParams: ") + name + " must be positive and finite");
    }
  };
  positive(temperature, "temperature");
  positive(kappa, "kappa");
  positive(cutoff, "cutoff");
  positive(k_b, "k_b");
  if (!std::isfinite(beta())) throw ContractViolation("BathParams: beta is not finite");
}

void QuadratureConfig::validate() const {
  if (s_max && !(*s_max > 0.0)) throw ContractViolation("QuadratureConfig: s_max must be positive");
  if (omega_max && !(*omega_max > 0.0)) {
    throw ContractViolation("QuadratureConfig: omega_max must be positive");
  }
  if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
    throw ContractViolation("QuadratureConfig: rel_tol must lie in (0, 1e-2]");
  }
}

double QuadratureConfig::s_max_for(const BathParams& b) const {
  return s_max.value_or(40.0 / b.cutoff);
}

double QuadratureConfig::omega_max_for(const BathParams& b) const {
  return omega_max.value_or(50.0 * std::max(b.cutoff, b.thermal_energy()));
}

double spectral_density(double omega, const BathParams& b) {
  const double om2 = b.cutoff * b.cutoff;
  return (2.0 * b.kappa / kPi) * omega * om2 / (om2 + omega * omega);
}

double spectral_density_derivative(double omega, const BathParams& b) {
  const double om2 = b.cutoff * b.cutoff;
  const double den = om2 + omega * omega;
  return (2.0 * b.kappa / kPi) * om2 * (om2 - omega * omega) / (den * den);
}

Complex correlation_function(double s, const BathParams& b, const QuadratureConfig& q) {
  if (!(s >= 0.0)) throw ContractViolation("correlation_function: s must be >= 0");
  if (s == 0.0) {
    auto f = [&](double w) { return symmetrized_density(w, b); };
    double err = 0.0;
    const double re = gauss_kronrod<double, 61>::integrate(f, 0.0, q.omega_max_for(b), 25,
                                                           q.rel_tol, &err);
    if (!std::isfinite(re) || err > 1e-6 * std::abs(re)) {
      throw NumericalError("correlation_function: s = 0 integral did not converge", err);
    }
    return {re, 0.0};
  }
  auto fc = [&](double w) { return symmetrized_density(w, b); };
  auto fs = [&](double w) { return spectral_density(w, b); };
  const auto rc = cos_rule().integrate(fc, s);
  check_fourier(rc, s, b, "cosine");
  const auto rs = sin_rule().integrate(fs, s);
  check_fourier(rs, s, b, "sine");
  return {rc.first, -rs.first};
}

double gamma0_closed(double x, const BathParams& b) {
  if (std::abs(x) < 1e-9 * b.cutoff) return 4.0 * b.kappa * b.thermal_energy();
  // coth(y/2) + 1 = 2 / (1 - e^{-y}); this form keeps detailed balance to rounding.
  return 2.0 * kPi * spectral_density(x, b) / -std::expm1(-b.beta() * x);
}

double gamma0_numeric(double x, const BathParams& b, const QuadratureConfig& q) {
  auto at = [&](double eps) {
    auto g = [&](double s) {
      const Complex c = correlation_function(s, b, q);
      return 2.0 * (c.real() * std::cos(x * s) - c.imag() * std::sin(x * s));
    };
    return regularized_time_integral(g, eps, b, q);
  };
  const double value = richardson(at, b);
  // Below this the result is set by the noise of the inner Fourier transforms.
  const double resolution = 1e-8 * b.kappa * b.cutoff * (b.cutoff + 2.0 * b.thermal_energy());
  if (value < resolution) {
    throw NumericalError("rate below quadrature resolution", resolution / std::max(std::abs(value), 1e-300));
  }
  return value;
}

double s0_closed(double x, const BathParams& b) {
  const double om = b.cutoff;
  return b.kappa * om * (2.0 * b.thermal_energy() * x - om * om) / (x * x + om * om);
}

double s0_numeric(double x, const BathParams& b, const QuadratureConfig& q) {
  auto at = [&](double eps) {
    auto g = [&](double s) {
      const Complex c = correlation_function(s, b, q);
      return c.real() * std::sin(x * s) + c.imag() * std::cos(x * s);
    };
    return regularized_time_integral(g, eps, b, q);
  };
  return richardson(at, b);
}

Complex gamma0_complex(double x, const BathParams& b) {
  return {0.5 * gamma0_closed(x, b), s0_closed(x, b)};
}

Complex gamma1_closed(double x, const BathParams& b) {
  const double om = b.cutoff;
  const double om2 = om * om;
  const double kt = b.thermal_energy();
  const double beta = b.beta();
  const double den = x * x + om2;
  const double re = -2.0 * b.kappa * om * (kt * (om2 - x * x) + om2 * x) / (den * den);

  double im = 0.0;
  if (std::abs(x) < 1e-4 * std::min(om, kt)) {
    im = b.kappa * (1.0 + x * (beta / 3.0 - 4.0 / (beta * om2)) - 3.0 * x * x / om2);
  } else {
    const double y = beta * x;
    const double em1 = std::expm1(-y);
    const double coth_plus_one = -2.0 / em1;
    const double inv_sinh2 = 4.0 * std::exp(-y) / (em1 * em1);
    im = 0.5 * kPi *
         (spectral_density_derivative(x, b) * coth_plus_one -
          0.5 * beta * spectral_density(x, b) * inv_sinh2);
  }
  return {re, im};
}

double gamma1_real(double x, const BathParams& b) { return 2.0 * gamma1_closed(x, b).real(); }

}  // namespace tdlme
