#include "phasewave/extended_wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPeriodicitySamples = 128;
constexpr double kPeriodicityTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;

void require_periodic(const AngularFunction& h, int kappa, const char* name) {
  if (!h) throw DomainError(std::string("wave profile: ") + name + " is empty");
  std::mt19937_64 rng(kDefaultSeed);
  const double period = kTwoPi * kappa;
  std::uniform_real_distribution<double> theta_dist(-2.0 * period, 2.0 * period);
  for (int i = 0; i < kPeriodicitySamples; ++i) {
    const double theta = theta_dist(rng);
    const double a = h(theta);
    const double b = h(theta + period);
    if (!std::isfinite(a) || !std::isfinite(b) ||
        std::abs(b - a) > kPeriodicityTol * std::max(1.0, std::abs(a))) {
      throw DomainError(std::string("wave profile: ") + name + " is not 2 pi k periodic (k = " +
                        std::to_string(kappa) + ")");
    }
  }
}

double zero(double) { return 0.0; }

}  // namespace

WaveProfile::WaveProfile(AngularFunction f, AngularFunction g, double c, int kappa)
    : f_(std::move(f)), g_(std::move(g)), c_(c), kappa_(kappa) {
  if (kappa < 1) throw DomainError("wave number must be a positive integer");
  if (!std::isfinite(c)) throw DomainError("wave profile constant must be finite");
  require_periodic(f_, kappa_, "f");
  require_periodic(g_, kappa_, "g");
}

WaveProfile WaveProfile::stationary() { return {zero, zero, 1.0, 1}; }

WaveProfile WaveProfile::running_wave(double amplitude, double c, int kappa) {
  return {zero, [amplitude](double theta) { return amplitude * std::cos(theta); }, c, kappa};
}

double WaveProfile::oscillating_part(double phi, double t, double omega) const {
  const double phase = wave_frequency(omega) * t;
  const double k_phi = kappa_ * phi;
  return f_(phase + k_phi) + g_(phase - k_phi);
}

double WaveProfile::modulation(double phi, double t, double omega) const {
  return c_ + oscillating_part(phi, t, omega);
}

Normalization normalization(const WaveProfile& profile, double omega, int panels) {
  if (panels < 8) throw ConfigError("normalization needs at least 8 panels");
  const double big_omega = profile.wave_frequency(omega);
  const int kappa = profile.kappa();
  const auto means_at = [&](double t) {
    const double phase = big_omega * t;
    const double mean_f =
        periodic_mean([&](double phi) { return profile.f()(phase + kappa * phi); }, panels);
    const double mean_g =
        periodic_mean([&](double phi) { return profile.g()(phase - kappa * phi); }, panels);
    return Normalization{0.0, mean_f, mean_g};
  };

  Normalization first = means_at(0.0);
  const Normalization second = means_at(0.3712 * kTwoPi / omega);
  const double denom = profile.c() + first.mean_f + first.mean_g;
  const double denom_later = profile.c() + second.mean_f + second.mean_g;
  if (std::abs(denom) < kDegenerateTol) {
    throw DegenerateProfileError("wave profile: C + <f> + <g> vanishes");
  }
  if (std::abs(denom - denom_later) > 1e-10 * std::max(1.0, std::abs(denom))) {
    throw DomainError("wave profile: normalization depends on time");
  }
  first.n = 1.0 / denom;
  return first;
}

StandingWaveSpec::StandingWaveSpec(int ell, double amplitude, double c)
    : ell_(ell), amplitude_(amplitude), c_(c) {
  if (ell < 1) throw DomainError("standing wave: ell must be >= 1");
  if (!std::isfinite(amplitude)) throw DomainError("standing wave: amplitude must be finite");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("standing wave: C must be positive");
}

double StandingWaveSpec::period(double omega) const noexcept {
  return kTwoPi / frequency(omega);
}

WaveProfile StandingWaveSpec::profile() const {
  const double a = amplitude_;
  return {[a](double theta) { return a * std::sin(theta); },
          [a](double theta) { return -a * std::sin(theta); }, c_, kappa()};
}

double phi_standing(const StandingWaveSpec& spec, double phi, double t, double omega) {
  return 2.0 * spec.amplitude() * std::cos(spec.frequency(omega) * t) *
         std::sin(2.0 * spec.ell() * phi);
}

ExtendedWigner::ExtendedWigner(const OscillatorParams& params, StateIndex n,
                               WaveProfile profile)
    : params_(params),
      n_(n),
      profile_(std::move(profile)),
      norm_(phasewave::normalization(profile_, params.omega())) {}

double ExtendedWigner::operator()(const PhasePoint& pt, double t) const {
  const PolarPoint polar = to_polar(params_, pt);
  // Same arithmetic as W_n so the f = g = 0 profile reproduces it exactly.
  const double kernel = wigner_stationary(params_, n_, pt);
  if (polar.rho == 0.0) return norm_.n * profile_.c() * kernel;
  return norm_.n * kernel * profile_.modulation(polar.phi, t, params_.omega());
}

PhaseField ExtendedWigner::field() const {
  return [self = *this](const PhasePoint& pt, double t) { return self(pt, t); };
}

double extended_eval(const OscillatorParams& params, StateIndex n,
                     const WaveProfile& profile, const PhasePoint& pt, double t) {
  return ExtendedWigner(params, n, profile)(pt, t);
}

double standing_wave_eval(const OscillatorParams& params, StateIndex n,
                          const StandingWaveSpec& spec, const PhasePoint& pt, double t) {
  const PolarPoint polar = to_polar(params, pt);
  const double kernel = wigner_stationary(params, n, pt);
  if (polar.rho == 0.0) return kernel;
  return kernel * (1.0 + 2.0 * spec.amplitude() / spec.c() *
                             std::cos(spec.frequency(params.omega()) * t) *
                             std::sin(2.0 * spec.ell() * polar.phi));
}

PhaseField standing_wave_field(const OscillatorParams& params, StateIndex n,
                               const StandingWaveSpec& spec) {
  return [params, n, spec](const PhasePoint& pt, double t) {
    return standing_wave_eval(params, n, spec, pt, t);
  };
}

std::vector<double> node_angles(const StandingWaveSpec& spec) {
  std::vector<double> angles;
  const int count = 4 * spec.ell();
  angles.reserve(count);
  for (int k = 0; k < count; ++k) {
    angles.push_back(normalize_angle(kPi * k / (2.0 * spec.ell())));
  }
  return angles;
}

std::vector<double> antinode_angles(const StandingWaveSpec& spec) {
  std::vector<double> angles;
  const int count = 4 * spec.ell();
  angles.reserve(count);
  for (int k = 0; k < count; ++k) {
    angles.push_back(normalize_angle(kPi * (2.0 * k + 1.0) / (4.0 * spec.ell())));
  }
  return angles;
}

ParityReport check_parity(const OscillatorParams& params, const WaveProfile& profile,
                          int samples, double tol, std::uint64_t seed) {
  if (samples < 1) throw ConfigError("check_parity: samples must be >= 1");
  ParityReport report;
  report.samples = samples;
  report.seed = seed;
  const double rotation = kTwoPi / params.omega();
  for (const double fraction : {0.0, 1.0 / 8.0, 0.2137, 0.5, 0.8311}) {
    report.times.push_back(fraction * rotation);
  }

  const double omega = params.omega();
  const auto phi_at = [&](const PhasePoint& shifted, double t) {
    const PhasePoint pt{shifted.x - params.shift(), shifted.p};
    return profile.oscillating_part(to_polar(params, pt).phi, t, omega);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  for (int i = 0; i < samples; ++i) {
    const PhasePoint shifted{unit(rng) * params.length_scale(),
                             unit(rng) * params.momentum_scale()};
    for (const double t : report.times) {
      const double value = phi_at(shifted, t);
      const double x_image = phi_at(reflect(shifted, ReflectAxis::x_bar), t);
      const double p_image = phi_at(reflect(shifted, ReflectAxis::p), t);
      report.max_x_violation = std::max(report.max_x_violation, std::abs(x_image + value));
      report.max_p_violation = std::max(report.max_p_violation, std::abs(p_image + value));
    }
  }
  report.odd_in_x = report.max_x_violation <= tol;
  report.odd_in_p = report.max_p_violation <= tol;
  report.passed = report.odd_in_x && report.odd_in_p;
  return report;
}

ParityReport check_parity(const OscillatorParams& params, const StandingWaveSpec& spec,
                          int samples, double tol, std::uint64_t seed) {
  return check_parity(params, spec.profile(), samples, tol, seed);
}

}  // namespace phasewave
