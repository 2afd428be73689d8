#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "phasewave/oscillator.hpp"
#include "phasewave/wigner_core.hpp"

namespace phasewave {

// Polar grid: rho_i = i rho_max / (n_rho - 1), i = 0..n_rho-1 (rho in
// velocity units, includes the origin), phi_j = 2 pi j / n_phi (periodic).
struct GridSpec {
  double rho_max = 4.0;
  int n_rho = 64;
  int n_phi = 128;
  double dt = 0.01;

  // n_rho >= 2, n_phi >= 1, rho_max > 0, dt >= 0, all finite.
  void validate() const;
  // Additionally n_phi >= 16 and the CFL bound w dt / dphi <= 1.
  void validate_for_evolution(const OscillatorParams& params) const;

  double d_rho() const noexcept { return rho_max / (n_rho - 1); }
  double d_phi() const noexcept;
  double rho(int i) const noexcept { return i * d_rho(); }
  double phi(int j) const noexcept { return j * d_phi(); }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(n_rho) * static_cast<std::size_t>(n_phi);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// W(rho_i, phi_j) stored rho-major: each ring of fixed rho is contiguous.
class Field2D {
 public:
  Field2D() = default;
  Field2D(GridSpec grid, double time);
  Field2D(GridSpec grid, std::vector<double> values, double time);

  const GridSpec& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }
  void set_time(double t) noexcept { time_ = t; }

  double& at(int i, int j) { return values_[index(i, j)]; }
  double at(int i, int j) const { return values_[index(i, j)]; }

  std::span<double> ring(int i);
  std::span<const double> ring(int i) const;
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double max_abs() const;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * grid_.n_phi + j;
  }

  GridSpec grid_;
  std::vector<double> values_;
  double time_ = 0.0;
};

// Largest |a - b| over all nodes; grids must match.
double max_abs_difference(const Field2D& a, const Field2D& b);

// Exact solution of W_t = w W_phi: W(rho, phi, t) = W0(rho, phi + w t).
// The initial field is evaluated at time 0.
PhaseField propagate_exact(PhaseField initial, const OscillatorParams& params);

// Grid version: a cyclic shift of every ring. Requires w t to be an integer
// multiple of dphi (within 1e-9 of a step); throws ConfigError otherwise.
Field2D propagate_exact(const Field2D& initial, const OscillatorParams& params, double t);

struct EvolveResult {
  Field2D field;
  std::size_t steps = 0;
  double step = 0.0;  // dt actually used, t_final / steps
};

// First-order upwind, forward-Euler integration of W_t = w W_phi with a
// periodic phi boundary. Information moves towards decreasing phi, so the
// stencil is the forward difference (W_{j+1} - W_j)/dphi. The grid dt is an
// upper bound; it is shrunk so an integer number of steps reaches t_final.
// Throws ConfigError on CFL violation and NumericalBlowupError on NaN.
EvolveResult evolve_fd(const Field2D& initial, const OscillatorParams& params,
                       double t_final);

// Central-difference estimates of W_tt - w^2 W_phiphi and W_t - w W_phi at
// the middle field, interior radial nodes only (rows 0 and n_rho-1 are 0).
// Fields must share a grid and be uniformly spaced in time.
Field2D wave_residual(const Field2D& before, const Field2D& now, const Field2D& after,
                      const OscillatorParams& params);
Field2D transport_residual(const Field2D& before, const Field2D& now, const Field2D& after,
                           const OscillatorParams& params);

inline constexpr int kMaxPotentialDegree = 12;

// U(x) = sum c_k x^k, degree <= 12.
class PolynomialPotential {
 public:
  PolynomialPotential() = default;
  explicit PolynomialPotential(std::vector<double> coeffs);

  // m w^2 x^2/2 + alpha x + alpha^2/(2 m w^2).
  static PolynomialPotential harmonic(const OscillatorParams& params);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

PolynomialPotential poly_derivative(const PolynomialPotential& u, int order);

// A field together with its p-derivatives. When p_derivative is empty,
// derivatives are taken by fourth-order central differences.
struct DifferentiableField {
  PhaseField value;
  std::function<double(const PhasePoint&, double t, int order)> p_derivative;
};

// Step used for a p-derivative of the given order at momentum p:
// max(1e-3, 1e-3 |p|) for order <= 3; for higher orders at least
// eps^(1/(order+4)) max(1, |p|) to bound cancellation.
double fd_momentum_step(int order, double p);

// Fourth-order accurate central-difference d^order W / dp^order.
double fd_p_derivative(const PhaseField& w, const PhasePoint& pt, double t, int order);

// W_n with exact p-derivatives (Gaussian times polynomial in p).
DifferentiableField stationary_differentiable_field(const OscillatorParams& params,
                                                    StateIndex n);

// Right-hand side
//   sum_{k>=1} (-1)^k (hbar/2)^{2k} / (2k+1)! U^{(2k+1)}(x) d^{2k+1}W/dp^{2k+1}.
// Terms whose potential derivative is the zero polynomial are skipped, so
// the result is exactly 0 for degree <= 2.
double moyal_rhs(const PolynomialPotential& u, const DifferentiableField& w,
                 const PhasePoint& pt, double t, double hbar);

}  // namespace phasewave
