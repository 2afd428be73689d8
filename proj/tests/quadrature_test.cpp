#include "phasewave/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "phasewave/errors.hpp"
#include "phasewave/extended_wigner.hpp"
#include "phasewave/wigner_core.hpp"

namespace {

using phasewave::OscillatorParams;
using phasewave::PhaseField;
using phasewave::PhasePoint;
using phasewave::QuadratureSpec;
constexpr double kPi = std::numbers::pi;

// Cartesian tensor-grid oracle: trapezoid in x-bar and p over a box of
// +-9 widths, independent of the polar Jacobian.
double cartesian_integral(const PhaseField& w, const OscillatorParams& params, int n) {
  const double lx = 9.0 * params.length_scale();
  const double lp = 9.0 * params.momentum_scale();
  const double hx = 2 * lx / n;
  const double hp = 2 * lp / n;
  phasewave::CompensatedSum sum;
  for (int i = 0; i <= n; ++i) {
    const double xb = -lx + i * hx;
    const double wi = (i == 0 || i == n) ? 0.5 : 1.0;
    for (int j = 0; j <= n; ++j) {
      const double wj = (j == 0 || j == n) ? 0.5 : 1.0;
      const double p = -lp + j * hp;
      sum.add(wi * wj * w({xb - params.shift(), p}, 0.0));
    }
  }
  return sum.value() * hx * hp;
}

TEST(GaussLegendre, ExactForDegree15) {
  const auto rule = phasewave::gauss_legendre(8);
  ASSERT_EQ(rule.nodes.size(), 8u);
  double wsum = 0.0;
  for (double w : rule.weights) wsum += w;
  EXPECT_NEAR(wsum, 2.0, 4e-15);
  for (int k = 0; k <= 15; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * std::pow(rule.nodes[i], k);
    }
    EXPECT_NEAR(s, k % 2 == 0 ? 2.0 / (k + 1) : 0.0, 1e-14) << k;
  }
}

TEST(CompensatedSum, RecoversCancelledTerms) {
  phasewave::CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  EXPECT_EQ(s.value(), 2.0);
}

TEST(PeriodicMean, SpectralAccuracy) {
  EXPECT_NEAR(phasewave::periodic_mean([](double t) { return 1.0 + std::sin(t); }, 64), 1.0,
              1e-15);
  EXPECT_NEAR(phasewave::periodic_mean([](double t) { return std::exp(std::cos(t)); }, 64),
              std::cyl_bessel_i(0.0, 1.0), 1e-14);
}

TEST(QuadratureSpec, Validation) {
  QuadratureSpec spec;
  EXPECT_NO_THROW(spec.validate());
  spec.n_phi = 4;
  EXPECT_THROW(spec.validate(), phasewave::ConfigError);
  spec = {};
  spec.rho_max = 5.0;
  EXPECT_THROW(spec.validate(), phasewave::ConfigError);
  spec = {};
  spec.tol = 0.0;
  EXPECT_THROW(spec.validate(), phasewave::ConfigError);
}

TEST(PhaseSpaceIntegral, StationaryStatesNormalized) {
  const OscillatorParams nat;
  for (int n = 0; n <= 8; ++n) {
    const auto est = phasewave::phase_space_integral(phasewave::stationary_field(nat, n), nat);
    EXPECT_NEAR(est.value, 1.0, 1e-8) << n;
  }
}

TEST(PhaseSpaceIntegral, GeneralParameters) {
  const OscillatorParams params{2.0, 3.0, 0.5, 1.5};
  for (int n : {0, 4}) {
    const auto est =
        phasewave::phase_space_integral(phasewave::stationary_field(params, n), params);
    EXPECT_NEAR(est.value, 1.0, 1e-8);
  }
}

TEST(PhaseSpaceIntegral, ZeroFieldIsExactlyZero) {
  const auto est = phasewave::phase_space_integral(
      [](const PhasePoint&, double) { return 0.0; }, OscillatorParams{});
  EXPECT_EQ(est.value, 0.0);
  EXPECT_EQ(est.error, 0.0);
}

TEST(PhaseSpaceIntegral, StandingWaveNormalizedAtAnyTime) {
  const OscillatorParams nat;
  const phasewave::StandingWaveSpec spec(3, 2.0, 5.0);
  const auto field = phasewave::standing_wave_field(nat, 2, spec);
  for (double t : {0.0, 0.37, 1.9}) {
    EXPECT_NEAR(phasewave::phase_space_integral(field, nat, {}, t).value, 1.0, 1e-8);
  }
}

TEST(PhaseSpaceIntegral, MatchesCartesianOracle) {
  for (const OscillatorParams& params : {OscillatorParams{}, OscillatorParams{1.5, 0.7, 1.2, -1.0}}) {
    for (int n : {0, 3}) {
      const auto field = phasewave::stationary_field(params, n);
      const double polar = phasewave::phase_space_integral(field, params).value;
      EXPECT_NEAR(polar, cartesian_integral(field, params, 600), 1e-8) << n;
    }
  }
}

TEST(PhaseSpaceIntegral, HalvingEstimateBoundsMeshDifference) {
  const OscillatorParams nat;
  const auto field = phasewave::stationary_field(nat, 5);
  QuadratureSpec coarse;
  coarse.n_rho = 128;
  coarse.n_phi = 64;
  coarse.tol = 1e-6;
  QuadratureSpec fine = coarse;
  fine.n_rho *= 2;
  fine.n_phi *= 2;
  const auto a = phasewave::phase_space_integral(field, nat, coarse);
  const auto b = phasewave::phase_space_integral(field, nat, fine);
  EXPECT_LE(std::abs(a.value - b.value), std::max(a.error, 1e-14) + 1e-15);
  EXPECT_LE(a.error, coarse.tol);
}

TEST(PhaseSpaceIntegral, UnresolvableIntegrandRaisesAccuracyError) {
  const OscillatorParams nat;
  QuadratureSpec spec;
  spec.n_rho = 16;
  spec.n_phi = 16;
  spec.tol = 1e-14;
  const auto rough = [](const PhasePoint& pt, double) {
    return std::exp(-pt.x * pt.x - pt.p * pt.p) * std::cos(40.0 * pt.x);
  };
  EXPECT_THROW(phasewave::phase_space_integral(rough, nat, spec), phasewave::AccuracyError);
}

TEST(Marginals, StationaryMatchesDensities) {
  const OscillatorParams nat;
  for (int n : {0, 1, 5}) {
    const auto field = phasewave::stationary_field(nat, n);
    for (double s : {-2.3, -0.4, 0.0, 1.1, 3.0}) {
      EXPECT_NEAR(phasewave::marginal_over_p(field, nat, s, 0.0).value,
                  phasewave::position_density(nat, n, s), 1e-10);
      EXPECT_NEAR(phasewave::marginal_over_x(field, nat, s, 0.0).value,
                  phasewave::momentum_density(nat, n, s), 1e-10);
    }
  }
}

TEST(Marginals, StandingWaveOscillationCancels) {
  const OscillatorParams params{1.0, 2.0, 1.0, 0.8};
  const phasewave::StandingWaveSpec spec(1, 2.0, 5.0);
  const auto field = phasewave::standing_wave_field(params, 1, spec);
  for (double x : {-1.7, -0.4, 0.9}) {
    const double xs = x - params.shift();
    EXPECT_NEAR(phasewave::marginal_over_p(field, params, xs, 0.1).value,
                phasewave::position_density(params, 1, xs), 1e-6);
  }
}

TEST(Marginals, ParityPassingProfileHasZeroPhiMarginals) {
  const OscillatorParams nat;
  const phasewave::StandingWaveSpec spec(2, 1.0, 1.0);
  ASSERT_TRUE(phasewave::check_parity(nat, spec).passed);
  const auto profile = spec.profile();
  // Kernel times Phi alone, without C.
  const PhaseField phi_part = [&](const PhasePoint& pt, double t) {
    const auto polar = phasewave::to_polar(nat, pt);
    return phasewave::wigner_kernel(nat, 3, polar.rho) *
           profile.oscillating_part(polar.phi, t, nat.omega());
  };
  for (double s : {-1.3, 0.2, 2.4}) {
    EXPECT_NEAR(phasewave::marginal_over_p(phi_part, nat, s, 0.0).value, 0.0, 1e-10);
    EXPECT_NEAR(phasewave::marginal_over_x(phi_part, nat, s, 0.0).value, 0.0, 1e-10);
  }
}

TEST(MeanEnergy, StationarySpectrum) {
  const OscillatorParams nat;
  for (int n = 0; n <= 8; ++n) {
    EXPECT_NEAR(phasewave::mean_energy(phasewave::stationary_field(nat, n), nat, 0.0).value,
                n + 0.5, 1e-6);
  }
}

TEST(MeanEnergy, StandingWaveTimeIndependent) {
  const OscillatorParams nat;
  const phasewave::StandingWaveSpec spec(3, 2.0, 5.0);
  const double period = spec.period(nat.omega());
  const auto field = phasewave::standing_wave_field(nat, 2, spec);
  for (double t : {0.0, period / 8, period / 4}) {
    EXPECT_NEAR(phasewave::mean_energy(field, nat, t).value, 2.5, 1e-6);
  }
}

TEST(MeanEnergy, DimensionlessUnderDoubledFrequency) {
  const OscillatorParams doubled{1.0, 2.0, 1.0};
  EXPECT_NEAR(phasewave::mean_energy(phasewave::stationary_field(doubled, 0), doubled, 0.0).value,
              0.5, 1e-6);
}

TEST(LaguerreEnergyIdentity, Examples) {
  EXPECT_NEAR(phasewave::laguerre_energy_identity(0).value, 0.25, 1e-10);
  EXPECT_NEAR(phasewave::laguerre_energy_identity(1).value, -0.75, 1e-9);
  // (-1)^5 (2*5+1)/4.
  EXPECT_NEAR(phasewave::laguerre_energy_identity(5).value, -2.75, 1e-9);
  for (int n = 0; n <= 8; ++n) {
    const double expected = (n % 2 == 0 ? 1.0 : -1.0) * (2 * n + 1) / 4.0;
    EXPECT_NEAR(phasewave::laguerre_energy_identity(n).value, expected, 1e-9) << n;
  }
}

}  // namespace
