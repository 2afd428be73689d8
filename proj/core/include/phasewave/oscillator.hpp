#pragma once

#include <functional>

namespace phasewave {

// Mass, frequency, Planck constant and the linear coefficient alpha of the
// shifted potential U(x) = m w^2 x^2/2 + alpha x + alpha^2/(2 m w^2).
// Default-constructed parameters are natural units with alpha = 0.
class OscillatorParams {
 public:
  OscillatorParams() = default;
  OscillatorParams(double m, double omega, double hbar, double alpha = 0.0);

  static OscillatorParams natural() { return {}; }

  double m() const noexcept { return m_; }
  double omega() const noexcept { return omega_; }
  double hbar() const noexcept { return hbar_; }
  double alpha() const noexcept { return alpha_; }

  // alpha / (m w^2): offset between x and the shifted coordinate x-bar.
  double shift() const noexcept { return alpha_ / (m_ * omega_ * omega_); }

  // sqrt(hbar w / m), the radius at which m rho^2 / (hbar w) = 1.
  double rho_scale() const noexcept;
  // sqrt(hbar / (m w)) and sqrt(m hbar w): Gaussian widths in x and p.
  double length_scale() const noexcept;
  double momentum_scale() const noexcept;

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;

 private:
  double m_ = 1.0;
  double omega_ = 1.0;
  double hbar_ = 1.0;
  double alpha_ = 0.0;
};

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

// rho >= 0 in velocity units (rho^2 = u^2 + v^2), phi in [0, 2 pi).
struct PolarPoint {
  double rho = 0.0;
  double phi = 0.0;
};

enum class ReflectAxis { x_bar, p, both };

// A time-dependent function on phase space, W(x, p, t). Callables must be
// reentrant; quadrature and sampling call them from tight loops.
using PhaseField = std::function<double(const PhasePoint&, double t)>;

// Maps any finite angle into [0, 2 pi).
double normalize_angle(double phi);

double shifted_x(const OscillatorParams& params, double x);

// u = w x-bar, v = p/m, rho = |(u, v)|, phi = atan2(v, u) in [0, 2 pi).
// phi is 0 at the origin.
PolarPoint to_polar(const OscillatorParams& params, const PhasePoint& pt);
PhasePoint from_polar(const OscillatorParams& params, const PolarPoint& pt);

// Dimensionless energy (p^2/2m + m w^2 x-bar^2/2) / (hbar w).
double energy(const OscillatorParams& params, const PhasePoint& pt);

// Reflection of a point given in shifted coordinates (x-bar, p).
PhasePoint reflect(const PhasePoint& shifted, ReflectAxis axis);
// Reflection of a point in unshifted coordinates about x-bar = 0, i.e. about
// x = -alpha/(m w^2).
PhasePoint reflect(const OscillatorParams& params, const PhasePoint& pt,
                   ReflectAxis axis);

}  // namespace phasewave
