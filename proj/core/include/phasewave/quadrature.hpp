#pragma once

#include <functional>
#include <span>
#include <vector>

#include "phasewave/oscillator.hpp"
#include "phasewave/special_fn.hpp"

namespace phasewave {

// Discretization of the phase-space integrals.
//
// Lengths are in oscillator units so one spec serves any OscillatorParams:
// rho_max is measured in rho_scale() = sqrt(hbar w / m), and line_window in
// Gaussian widths (length_scale() for x-bar lines, momentum_scale() for p
// lines).
struct QuadratureSpec {
  double rho_max = 7.0;
  int n_rho = 512;        // radial Gauss-Legendre nodes, 8 per panel
  int n_phi = 512;        // periodic trapezoid nodes
  double line_window = 9.0;
  int n_line = 2048;      // trapezoid panels on [-window, window]
  double tol = 1e-8;      // absolute tolerance on the halving estimate

  // All counts >= 8, and exp(-rho_max^2) < 1e-14 so the Gaussian tail is
  // negligible. Throws ConfigError.
  void validate() const;
};

// An integral together with its mesh-halving error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Neumaier-compensated accumulator; fixed summation order gives
// bit-reproducible totals for a given input sequence.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int order);

// Composite Gauss-Legendre on [a, b] with `panels` panels of `order` nodes.
double integrate_gauss_legendre(const std::function<double(double)>& f, double a,
                                double b, int panels, int order = 8);

// Composite trapezoid on [-half_width, half_width], grid symmetric about 0.
double integrate_symmetric_trapezoid(const std::function<double(double)>& f,
                                     double half_width, int panels);

// Mean of a 2 pi periodic function from n equispaced samples on [0, 2 pi).
double periodic_mean(const std::function<double(double)>& f, int n);

// Double integral of W(., t) over the x-bar/p plane in polar coordinates,
// dx dp = (m/w) rho drho dphi. Throws AccuracyError if the halving estimate
// exceeds spec.tol after one refinement.
Estimate phase_space_integral(const PhaseField& w, const OscillatorParams& params,
                              const QuadratureSpec& spec = {}, double t = 0.0);

// Integral of W over p at fixed (unshifted) x.
Estimate marginal_over_p(const PhaseField& w, const OscillatorParams& params, double x,
                         double t, const QuadratureSpec& spec = {});

// Integral of W over x at fixed p.
Estimate marginal_over_x(const PhaseField& w, const OscillatorParams& params, double p,
                         double t, const QuadratureSpec& spec = {});

// Dimensionless mean energy, the integral of eps(x-bar, p) W over the plane.
// Multiply by hbar w for physical units.
Estimate mean_energy(const PhaseField& w, const OscillatorParams& params, double t,
                     const QuadratureSpec& spec = {});

// Integral over [0, 40] of exp(-2e) L_n(4e) e de; the closed form is
// (-1)^n (2n+1)/4.
Estimate laguerre_energy_identity(PolyOrder n, const QuadratureSpec& spec = {});

}  // namespace phasewave
