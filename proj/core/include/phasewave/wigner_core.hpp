#pragma once

#include "phasewave/oscillator.hpp"
#include "phasewave/quadrature.hpp"
#include "phasewave/special_fn.hpp"

namespace phasewave {

// Index of an oscillator eigenstate; same bound as polynomial orders.
using StateIndex = PolyOrder;

// Radial Wigner kernel ((-1)^n / (pi hbar)) exp(-m rho^2/(hbar w)) L_n(2 m rho^2/(hbar w)).
double wigner_kernel(const OscillatorParams& params, StateIndex n, double rho);

// Stationary Wigner function of eigenstate n,
// ((-1)^n / (pi hbar)) exp(-2 eps) L_n(4 eps).
double wigner_stationary(const OscillatorParams& params, StateIndex n,
                         const PhasePoint& pt);

// W_n as a (time-independent) PhaseField.
PhaseField stationary_field(const OscillatorParams& params, StateIndex n);

// Real eigenfunction Psi_n(x-bar) in the position representation.
double wavefunction(const OscillatorParams& params, StateIndex n, double x);

// |Psi_n(x-bar)|^2. Uses log_weight to avoid overflow of H_n^2 / (2^n n!).
double position_density(const OscillatorParams& params, StateIndex n, double x);

// |Psi~_n(p)|^2, the mirror image of the position density under
// x-bar sqrt(m w / hbar) <-> p / sqrt(m hbar w).
double momentum_density(const OscillatorParams& params, StateIndex n, double p);

// Fourier-transform construction
//   (1/(2 pi hbar)) Int exp(-i p s / hbar) Psi_n(x-bar + s/2) Psi_n(x-bar - s/2) ds
// evaluated by trapezoid on s in [-2 L, 2 L], L = spec.line_window length
// scales. Independent of the Laguerre closed form; used as its oracle.
// Throws AccuracyError if the halving estimate exceeds spec.tol.
Estimate wigner_from_wavefunction(const OscillatorParams& params, StateIndex n,
                                  const PhasePoint& pt, const QuadratureSpec& spec = {});

}  // namespace phasewave
