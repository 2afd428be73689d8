#include "phasewave/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

OscillatorParams::OscillatorParams(double m, double omega, double hbar, double alpha)
    : m_(m), omega_(omega), hbar_(hbar), alpha_(alpha) {
  if (!std::isfinite(m) || !std::isfinite(omega) || !std::isfinite(hbar) ||
      !std::isfinite(alpha)) {
    throw DomainError("oscillator parameters must be finite");
  }
  if (m <= 0.0 || omega <= 0.0 || hbar <= 0.0) {
    throw DomainError("oscillator m, omega and hbar must be positive");
  }
}

double OscillatorParams::rho_scale() const noexcept {
  return std::sqrt(hbar_ * omega_ / m_);
}

double OscillatorParams::length_scale() const noexcept {
  return std::sqrt(hbar_ / (m_ * omega_));
}

double OscillatorParams::momentum_scale() const noexcept {
  return std::sqrt(m_ * hbar_ * omega_);
}

double normalize_angle(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double shifted_x(const OscillatorParams& params, double x) {
  return x + params.shift();
}

PolarPoint to_polar(const OscillatorParams& params, const PhasePoint& pt) {
  const double u = params.omega() * shifted_x(params, pt.x);
  const double v = pt.p / params.m();
  const double rho = std::hypot(u, v);
  if (rho == 0.0) return {0.0, 0.0};
  return {rho, normalize_angle(std::atan2(v, u))};
}

PhasePoint from_polar(const OscillatorParams& params, const PolarPoint& pt) {
  return {pt.rho / params.omega() * std::cos(pt.phi) - params.shift(),
          params.m() * pt.rho * std::sin(pt.phi)};
}

double energy(const OscillatorParams& params, const PhasePoint& pt) {
  const double xb = shifted_x(params, pt.x);
  const double m = params.m();
  const double w = params.omega();
  return (pt.p * pt.p / (2.0 * m) + 0.5 * m * w * w * xb * xb) / (params.hbar() * w);
}

PhasePoint reflect(const PhasePoint& shifted, ReflectAxis axis) {
  switch (axis) {
    case ReflectAxis::x_bar:
      return {-shifted.x, shifted.p};
    case ReflectAxis::p:
      return {shifted.x, -shifted.p};
    case ReflectAxis::both:
      break;
  }
  return {-shifted.x, -shifted.p};
}

PhasePoint reflect(const OscillatorParams& params, const PhasePoint& pt,
                   ReflectAxis axis) {
  const PhasePoint image = reflect(PhasePoint{shifted_x(params, pt.x), pt.p}, axis);
  return {image.x - params.shift(), image.p};
}

}  // namespace phasewave
