#include "phasewave/wigner_core.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "phasewave/errors.hpp"
#include "phasewave/quadrature.hpp"

namespace {

using phasewave::OscillatorParams;
using phasewave::PhasePoint;
constexpr double kPi = std::numbers::pi;

TEST(WignerStationary, Examples) {
  const OscillatorParams nat;
  EXPECT_DOUBLE_EQ(phasewave::wigner_stationary(nat, 0, {0.0, 0.0}), 1.0 / kPi);
  EXPECT_DOUBLE_EQ(phasewave::wigner_stationary(nat, 1, {0.0, 0.0}), -1.0 / kPi);
  // L_2(2) = -1, so W_2 = -e^{-1}/pi; frozen oracle value.
  EXPECT_NEAR(phasewave::wigner_stationary(nat, 2, {1.0, 0.0}), -0.11709966304863834, 1e-15);
}

TEST(WignerStationary, SignAtOrigin) {
  for (const OscillatorParams& params : {OscillatorParams{}, OscillatorParams{2.0, 0.5, 0.3, 1.0}}) {
    const PhasePoint origin{-params.shift(), 0.0};
    for (int n = 0; n <= 64; ++n) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      EXPECT_DOUBLE_EQ(phasewave::wigner_stationary(params, n, origin),
                       sign / (kPi * params.hbar()));
    }
  }
}

TEST(WignerStationary, RadialSymmetry) {
  const OscillatorParams params{1.3, 0.8, 0.9, -0.6};
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int n : {0, 3, 7}) {
    const double rho = 1.7 * params.rho_scale();
    const double ref = phasewave::wigner_stationary(
        params, n, phasewave::from_polar(params, {rho, 0.0}));
    for (int i = 0; i < 64; ++i) {
      const auto pt = phasewave::from_polar(params, {rho, angle(rng)});
      EXPECT_NEAR(phasewave::wigner_stationary(params, n, pt), ref, 1e-12);
    }
  }
}

TEST(Densities, Examples) {
  const OscillatorParams nat;
  EXPECT_NEAR(phasewave::position_density(nat, 0, 0.0), 1.0 / std::sqrt(kPi), 1e-15);
  EXPECT_EQ(phasewave::position_density(nat, 1, 0.0), 0.0);
  EXPECT_NEAR(phasewave::momentum_density(nat, 0, 0.0), 1.0 / std::sqrt(kPi), 1e-15);
  EXPECT_EQ(phasewave::momentum_density(nat, 1, 0.0), 0.0);
  // Quadrature oracles: integrals of W_0 over p and over x-bar.
  const auto w0 = phasewave::stationary_field(nat, 0);
  EXPECT_NEAR(phasewave::marginal_over_p(w0, nat, 0.0, 0.0).value, 1.0 / std::sqrt(kPi), 1e-12);
  EXPECT_NEAR(phasewave::marginal_over_x(w0, nat, 0.0, 0.0).value, 1.0 / std::sqrt(kPi), 1e-12);
}

TEST(Densities, WavefunctionSquared) {
  const OscillatorParams params{2.0, 1.5, 0.7, 0.4};
  for (int n : {0, 2, 9}) {
    for (double x : {-1.1, 0.0, 0.35, 1.8}) {
      const double psi = phasewave::wavefunction(params, n, x);
      EXPECT_NEAR(phasewave::position_density(params, n, x), psi * psi, 1e-13);
    }
  }
}

TEST(Densities, NonNegativeAndNormalized) {
  for (const OscillatorParams& params : {OscillatorParams{}, OscillatorParams{2.0, 3.0, 0.5, 1.0}}) {
    for (int n = 0; n <= 8; ++n) {
      const double lx = 12.0 * params.length_scale();
      const double lp = 12.0 * params.momentum_scale();
      const double px = phasewave::integrate_gauss_legendre(
          [&](double x) {
            const double d = phasewave::position_density(params, n, x);
            EXPECT_GE(d, 0.0);
            return d;
          },
          -lx - params.shift(), lx - params.shift(), 64);
      const double pp = phasewave::integrate_gauss_legendre(
          [&](double p) {
            const double d = phasewave::momentum_density(params, n, p);
            EXPECT_GE(d, 0.0);
            return d;
          },
          -lp, lp, 64);
      EXPECT_NEAR(px, 1.0, 1e-8) << n;
      EXPECT_NEAR(pp, 1.0, 1e-8) << n;
    }
  }
}

TEST(Densities, HighIndexStaysFinite) {
  const OscillatorParams nat;
  for (double x : {0.0, 3.0, 11.0}) {
    EXPECT_TRUE(std::isfinite(phasewave::position_density(nat, 64, x)));
    EXPECT_TRUE(std::isfinite(phasewave::momentum_density(nat, 64, x)));
  }
}

TEST(WignerFromWavefunction, Examples) {
  const OscillatorParams nat;
  EXPECT_NEAR(phasewave::wigner_from_wavefunction(nat, 0, {0.0, 0.0}).value, 1.0 / kPi, 1e-8);
  EXPECT_NEAR(phasewave::wigner_from_wavefunction(nat, 1, {0.0, 0.0}).value, -1.0 / kPi, 1e-8);
  const PhasePoint pt{0.7, -1.1};
  EXPECT_NEAR(phasewave::wigner_from_wavefunction(nat, 3, pt).value,
              phasewave::wigner_stationary(nat, 3, pt), 1e-7);
}

TEST(WignerFromWavefunction, AgreesWithClosedFormOnGrid) {
  const OscillatorParams nat;
  for (int n : {0, 1, 2, 3, 5}) {
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        const PhasePoint pt{-3.0 + 0.75 * i, -3.0 + 0.75 * j};
        EXPECT_NEAR(phasewave::wigner_from_wavefunction(nat, n, pt).value,
                    phasewave::wigner_stationary(nat, n, pt), 1e-7);
      }
    }
  }
}

TEST(WignerFromWavefunction, GeneralParameters) {
  const OscillatorParams params{0.5, 2.0, 1.5, -2.0};
  for (int n : {0, 4}) {
    const PhasePoint pt{0.3 - params.shift(), 0.8};
    EXPECT_NEAR(phasewave::wigner_from_wavefunction(params, n, pt).value,
                phasewave::wigner_stationary(params, n, pt), 1e-7);
  }
}

TEST(WignerStationary, RejectsStateIndexAboveCap) {
  EXPECT_THROW(phasewave::wigner_stationary({}, 65, {0.0, 0.0}), phasewave::DomainError);
}

}  // namespace
