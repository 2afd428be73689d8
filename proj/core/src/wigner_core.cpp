#include "phasewave/wigner_core.hpp"

#include <cmath>
#include <numbers>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// (1/(2^n n!)) (1/sqrt(pi)) exp(-xi^2) H_n(xi)^2 for dimensionless xi.
double hermite_density(StateIndex n, double xi) {
  const double h = hermite(n, xi);
  if (h == 0.0) return 0.0;
  const double log_value = log_weight(n) + 2.0 * std::log(std::abs(h)) - xi * xi;
  return std::exp(log_value) / std::sqrt(std::numbers::pi);
}

}  // namespace

double wigner_kernel(const OscillatorParams& params, StateIndex n, double rho) {
  const double z = params.m() * rho * rho / (params.hbar() * params.omega());
  return parity_sign(n) / (std::numbers::pi * params.hbar()) * std::exp(-z) *
         laguerre(n, 2.0 * z);
}

double wigner_stationary(const OscillatorParams& params, StateIndex n,
                         const PhasePoint& pt) {
  const double eps = energy(params, pt);
  return parity_sign(n) / (std::numbers::pi * params.hbar()) * std::exp(-2.0 * eps) *
         laguerre(n, 4.0 * eps);
}

PhaseField stationary_field(const OscillatorParams& params, StateIndex n) {
  return [params, n](const PhasePoint& pt, double) {
    return wigner_stationary(params, n, pt);
  };
}

double wavefunction(const OscillatorParams& params, StateIndex n, double x) {
  const double length = params.length_scale();
  const double xi = shifted_x(params, x) / length;
  const double h = hermite(n, xi);
  if (h == 0.0) return 0.0;
  const double magnitude =
      std::exp(0.5 * log_weight(n) + std::log(std::abs(h)) - 0.5 * xi * xi) /
      std::sqrt(std::sqrt(std::numbers::pi) * length);
  return std::copysign(magnitude, h);
}

double position_density(const OscillatorParams& params, StateIndex n, double x) {
  const double length = params.length_scale();
  return hermite_density(n, shifted_x(params, x) / length) / length;
}

double momentum_density(const OscillatorParams& params, StateIndex n, double p) {
  const double scale = params.momentum_scale();
  return hermite_density(n, p / scale) / scale;
}

Estimate wigner_from_wavefunction(const OscillatorParams& params, StateIndex n,
                                  const PhasePoint& pt, const QuadratureSpec& spec) {
  spec.validate();
  const double hbar = params.hbar();
  const double half_width = 2.0 * spec.line_window * params.length_scale();
  // The product Psi(x+s/2) Psi(x-s/2) is even in s for a real eigenfunction,
  // so only the cosine part of the kernel survives.
  const auto integrand = [&](double s) {
    return std::cos(pt.p * s / hbar) * wavefunction(params, n, pt.x + 0.5 * s) *
           wavefunction(params, n, pt.x - 0.5 * s);
  };
  const double prefactor = 1.0 / (2.0 * std::numbers::pi * hbar);
  const double coarse =
      prefactor * integrate_symmetric_trapezoid(integrand, half_width, spec.n_line / 2);
  const double nominal =
      prefactor * integrate_symmetric_trapezoid(integrand, half_width, spec.n_line);
  const double error = std::abs(nominal - coarse);
  if (error > spec.tol) {
    throw AccuracyError("wigner_from_wavefunction: halving estimate exceeds tolerance",
                        error, spec.tol);
  }
  return {nominal, error};
}

}  // namespace phasewave
