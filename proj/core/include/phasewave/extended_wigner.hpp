#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "phasewave/oscillator.hpp"
#include "phasewave/wigner_core.hpp"

namespace phasewave {

using AngularFunction = std::function<double(double)>;

inline constexpr std::uint64_t kDefaultSeed = 20210614;

// Angular modulation C + f(W t + k phi) + g(W t - k phi), W = w k.
//
// f and g must be 2 pi k periodic; this is verified at construction by
// sampling 128 random arguments. The callables are shared between copies
// and must be reentrant.
class WaveProfile {
 public:
  WaveProfile(AngularFunction f, AngularFunction g, double c, int kappa);

  // f = g = 0, C = 1.
  static WaveProfile stationary();
  // Running wave A cos(W t - k phi): g(theta) = A cos(theta), f = 0.
  static WaveProfile running_wave(double amplitude, double c, int kappa);

  const AngularFunction& f() const noexcept { return f_; }
  const AngularFunction& g() const noexcept { return g_; }
  double c() const noexcept { return c_; }
  int kappa() const noexcept { return kappa_; }
  double wave_frequency(double omega) const noexcept { return omega * kappa_; }

  // f(W t + k phi) + g(W t - k phi).
  double oscillating_part(double phi, double t, double omega) const;
  // C + oscillating_part.
  double modulation(double phi, double t, double omega) const;

 private:
  AngularFunction f_;
  AngularFunction g_;
  double c_;
  int kappa_;
};

struct Normalization {
  double n = 1.0;
  double mean_f = 0.0;
  double mean_g = 0.0;
};

inline constexpr int kNormalizationPanels = 4096;

// N = 1 / (C + <f> + <g>), means taken over phi in [0, 2 pi] by periodic
// trapezoid. Evaluated at two distinct times and required to agree.
// Throws DegenerateProfileError if |C + <f> + <g>| < 1e-12.
Normalization normalization(const WaveProfile& profile, double omega = 1.0,
                            int panels = kNormalizationPanels);

// Standing wave 2A cos(W t) sin(2 l phi) with k = 2l, W = 2 w l.
class StandingWaveSpec {
 public:
  StandingWaveSpec(int ell, double amplitude, double c);

  int ell() const noexcept { return ell_; }
  double amplitude() const noexcept { return amplitude_; }
  double c() const noexcept { return c_; }
  int kappa() const noexcept { return 2 * ell_; }
  double frequency(double omega) const noexcept { return 2.0 * omega * ell_; }
  double period(double omega) const noexcept;

  // f(theta) = A sin(theta), g(theta) = -A sin(theta).
  WaveProfile profile() const;

 private:
  int ell_;
  double amplitude_;
  double c_;
};

double phi_standing(const StandingWaveSpec& spec, double phi, double t, double omega);

// Extended Wigner function
//   N W_n-kernel(rho) [C + f(W t + k phi) + g(W t - k phi)].
// At rho = 0 the angular factor is undefined; the value there is the
// node-line limit N C W_n-kernel(0).
class ExtendedWigner {
 public:
  ExtendedWigner(const OscillatorParams& params, StateIndex n, WaveProfile profile);

  double operator()(const PhasePoint& pt, double t) const;

  const OscillatorParams& params() const noexcept { return params_; }
  StateIndex state() const noexcept { return n_; }
  const WaveProfile& profile() const noexcept { return profile_; }
  const Normalization& normalization() const noexcept { return norm_; }

  PhaseField field() const;

 private:
  OscillatorParams params_;
  StateIndex n_;
  WaveProfile profile_;
  Normalization norm_;
};

double extended_eval(const OscillatorParams& params, StateIndex n,
                     const WaveProfile& profile, const PhasePoint& pt, double t);

// Closed form W_n-kernel(rho) [1 + (2A/C) cos(2 w l t) sin(2 l phi)]; equals
// W_n at rho = 0.
double standing_wave_eval(const OscillatorParams& params, StateIndex n,
                          const StandingWaveSpec& spec, const PhasePoint& pt, double t);

PhaseField standing_wave_field(const OscillatorParams& params, StateIndex n,
                               const StandingWaveSpec& spec);

// pi k / (2l) and pi (2k+1) / (4l), k = 0 .. 4l-1.
std::vector<double> node_angles(const StandingWaveSpec& spec);
std::vector<double> antinode_angles(const StandingWaveSpec& spec);

struct ParityReport {
  bool passed = false;
  bool odd_in_x = false;
  bool odd_in_p = false;
  double max_x_violation = 0.0;
  double max_p_violation = 0.0;
  int samples = 0;
  std::vector<double> times;
  std::uint64_t seed = kDefaultSeed;
};

// Samples Phi = f + g at random (x-bar, p) in [-3, 3]^2 scaled to the
// oscillator widths, at several times, and compares with the reflected
// points. Passes iff Phi(-x,p) = -Phi(x,p) and Phi(x,-p) = -Phi(x,p)
// within tol everywhere.
ParityReport check_parity(const OscillatorParams& params, const WaveProfile& profile,
                          int samples = 256, double tol = 1e-12,
                          std::uint64_t seed = kDefaultSeed);
ParityReport check_parity(const OscillatorParams& params, const StandingWaveSpec& spec,
                          int samples = 256, double tol = 1e-12,
                          std::uint64_t seed = kDefaultSeed);

}  // namespace phasewave
