#include "phasewave/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPanelOrder = 8;
constexpr double kIdentityUpper = 40.0;

int scaled(int n, double factor) {
  return std::max(1, static_cast<int>(std::lround(n * factor)));
}

// Integrates at half, nominal and (if needed) doubled resolution. The
// returned error is the difference between the last two meshes.
Estimate with_halving_estimate(const std::function<double(double)>& integrate,
                               double tol, const char* what) {
  const double coarse = integrate(0.5);
  const double nominal = integrate(1.0);
  double error = std::abs(nominal - coarse);
  if (error <= tol) return {nominal, error};

  const double fine = integrate(2.0);
  error = std::abs(fine - nominal);
  if (error <= tol) return {fine, error};
  throw AccuracyError(std::string(what) + ": halving estimate " +
                          std::to_string(error) + " exceeds tolerance " +
                          std::to_string(tol),
                      error, tol);
}

// hbar * integral over s in [0, s_max], phi in [0, 2 pi) of
// weight(s) * W * s, where rho = s * rho_scale. The factor hbar is the
// Jacobian (m/w) rho_scale^2.
double polar_integral(const PhaseField& w, const OscillatorParams& params, double t,
                      const QuadratureSpec& spec, double factor,
                      const std::function<double(double)>& radial_weight) {
  const int panels = std::max(1, scaled(spec.n_rho, factor) / kPanelOrder);
  const int n_phi = scaled(spec.n_phi, factor);
  const QuadratureRule rule = gauss_legendre(kPanelOrder);
  const double scale = params.rho_scale();
  const double width = spec.rho_max / panels;
  const double dphi = kTwoPi / n_phi;

  CompensatedSum total;
  for (int panel = 0; panel < panels; ++panel) {
    const double mid = (panel + 0.5) * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double s = mid + 0.5 * width * rule.nodes[k];
      CompensatedSum ring;
      for (int j = 0; j < n_phi; ++j) {
        const PhasePoint pt = from_polar(params, {s * scale, j * dphi});
        ring.add(w(pt, t));
      }
      total.add(0.5 * width * rule.weights[k] * s * radial_weight(s) * ring.value() * dphi);
    }
  }
  return params.hbar() * total.value();
}

}  // namespace

void QuadratureSpec::validate() const {
  if (n_rho < 8 || n_phi < 8 || n_line < 8) {
    throw ConfigError("quadrature counts must be at least 8");
  }
  if (!std::isfinite(rho_max) || !std::isfinite(line_window) || !std::isfinite(tol) ||
      line_window <= 0.0 || tol <= 0.0) {
    throw ConfigError("quadrature window and tolerance must be positive and finite");
  }
  // exp(-rho_max^2) < 1e-14
  if (rho_max * rho_max <= 14.0 * std::numbers::ln10) {
    throw ConfigError("rho_max " + std::to_string(rho_max) +
                      " leaves a Gaussian tail above 1e-14 of the peak");
  }
}

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    compensation_ += (sum_ - t) + v;
  } else {
    compensation_ += (v - t) + sum_;
  }
  sum_ = t;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw ConfigError("Gauss-Legendre order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a,
                                double b, int panels, int order) {
  const QuadratureRule rule = gauss_legendre(order);
  const double width = (b - a) / panels;
  CompensatedSum sum;
  for (int panel = 0; panel < panels; ++panel) {
    const double mid = a + (panel + 0.5) * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      sum.add(rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]));
    }
  }
  return 0.5 * width * sum.value();
}

double integrate_symmetric_trapezoid(const std::function<double(double)>& f,
                                     double half_width, int panels) {
  // Nodes (2j - panels) * h/2 are exact negatives of each other, so odd
  // integrands cancel to rounding.
  const double half_step = half_width / panels;
  CompensatedSum sum;
  sum.add(0.5 * f(-half_width));
  for (int j = 1; j < panels; ++j) sum.add(f((2 * j - panels) * half_step));
  sum.add(0.5 * f(half_width));
  return 2.0 * half_step * sum.value();
}

double periodic_mean(const std::function<double(double)>& f, int n) {
  CompensatedSum sum;
  const double step = kTwoPi / n;
  for (int j = 0; j < n; ++j) sum.add(f(j * step));
  return sum.value() / n;
}

Estimate phase_space_integral(const PhaseField& w, const OscillatorParams& params,
                              const QuadratureSpec& spec, double t) {
  spec.validate();
  return with_halving_estimate(
      [&](double factor) {
        return polar_integral(w, params, t, spec, factor, [](double) { return 1.0; });
      },
      spec.tol, "phase_space_integral");
}

Estimate marginal_over_p(const PhaseField& w, const OscillatorParams& params, double x,
                         double t, const QuadratureSpec& spec) {
  spec.validate();
  const double half_width = spec.line_window * params.momentum_scale();
  return with_halving_estimate(
      [&](double factor) {
        return integrate_symmetric_trapezoid(
            [&](double p) { return w(PhasePoint{x, p}, t); }, half_width,
            scaled(spec.n_line, factor));
      },
      spec.tol, "marginal_over_p");
}

Estimate marginal_over_x(const PhaseField& w, const OscillatorParams& params, double p,
                         double t, const QuadratureSpec& spec) {
  spec.validate();
  const double half_width = spec.line_window * params.length_scale();
  const double shift = params.shift();
  return with_halving_estimate(
      [&](double factor) {
        return integrate_symmetric_trapezoid(
            [&](double x_bar) { return w(PhasePoint{x_bar - shift, p}, t); },
            half_width, scaled(spec.n_line, factor));
      },
      spec.tol, "marginal_over_x");
}

Estimate mean_energy(const PhaseField& w, const OscillatorParams& params, double t,
                     const QuadratureSpec& spec) {
  spec.validate();
  // eps = m rho^2 / (2 hbar w) = s^2 / 2 in scaled radius.
  return with_halving_estimate(
      [&](double factor) {
        return polar_integral(w, params, t, spec, factor,
                              [](double s) { return 0.5 * s * s; });
      },
      spec.tol, "mean_energy");
}

Estimate laguerre_energy_identity(PolyOrder n, const QuadratureSpec& spec) {
  spec.validate();
  return with_halving_estimate(
      [&](double factor) {
        const int panels = std::max(1, scaled(spec.n_rho, factor) / kPanelOrder);
        return integrate_gauss_legendre(
            [n](double e) { return std::exp(-2.0 * e) * laguerre(n, 4.0 * e) * e; }, 0.0,
            kIdentityUpper, panels);
      },
      spec.tol, "laguerre_energy_identity");
}

}  // namespace phasewave
