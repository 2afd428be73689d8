#include "phasewave/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "phasewave/errors.hpp"
#include "phasewave/evolution.hpp"
#include "phasewave/extended_wigner.hpp"
#include "phasewave/field_io.hpp"
#include "phasewave/quadrature.hpp"
#include "phasewave/wigner_core.hpp"

namespace phasewave {

namespace {

constexpr double kPi = std::numbers::pi;

// Value of one check before thresholds and timing are applied.
struct Outcome {
  double metric = 0.0;
  bool extra_ok = true;  // secondary conditions of compound checks
  std::string detail;
};

struct CheckDef {
  const char* id;
  const char* description;
  const char* target;
  double threshold;
  Comparison comparison;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

const char* comparison_symbol(Comparison c) {
  switch (c) {
    case Comparison::at_most:
      return "<=";
    case Comparison::at_least:
      return ">=";
    case Comparison::greater_than:
      break;
  }
  return ">";
}

double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

Outcome stationary_normalization() {
  const OscillatorParams params;
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const Estimate e = phase_space_integral(stationary_field(params, n), params);
    worst = std::max(worst, std::abs(e.value - 1.0));
  }
  return {worst, true, "n = 0..8"};
}

Outcome extended_normalization() {
  double worst = 0.0;
  for (const int ell : {1, 2, 3}) {
    for (const double c : {1.0, 5.0}) {
      const StandingWaveSpec spec(ell, 0.4 * c, c);
      worst = std::max(worst, std::abs(normalization(spec.profile()).n - 1.0 / c));
    }
  }
  return {worst, true, "ell in {1,2,3}, C in {1,5}"};
}

Outcome marginal_matrix() {
  const OscillatorParams params;
  const auto xs = linspace(-3.0, 3.0, 21);
  double worst_x = 0.0;
  double worst_p = 0.0;
  for (const int n : {0, 1, 5}) {
    for (const int ell : {1, 3}) {
      const StandingWaveSpec spec(ell, 2.0, 5.0);
      const PhaseField w = ExtendedWigner(params, n, spec.profile()).field();
      const double period = spec.period(params.omega());
      for (const double frac : {0.0, 0.125, 0.25, 0.5}) {
        const double t = frac * period;
        for (const double s : xs) {
          worst_x = std::max(worst_x, std::abs(marginal_over_p(w, params, s, t).value -
                                               position_density(params, n, s)));
          worst_p = std::max(worst_p, std::abs(marginal_over_x(w, params, s, t).value -
                                               momentum_density(params, n, s)));
        }
      }
    }
  }
  return {std::max(worst_x, worst_p), true,
          "max |int W dp - |Psi|^2| = " + fmt(worst_x) + ", max |int W dx - |Psi~|^2| = " +
              fmt(worst_p)};
}

Outcome energy_spectrum() {
  const OscillatorParams params;
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const Estimate e = mean_energy(stationary_field(params, n), params, 0.0);
    worst = std::max(worst, std::abs(e.value - (n + 0.5)));
  }
  double spread = 0.0;
  const StandingWaveSpec spec(3, 2.0, 5.0);
  for (const int n : {0, 5}) {
    const PhaseField w = ExtendedWigner(params, n, spec.profile()).field();
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const double frac : {0.0, 0.125, 0.25, 0.5}) {
      const double e = mean_energy(w, params, frac * spec.period(params.omega())).value;
      worst = std::max(worst, std::abs(e - (n + 0.5)));
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    spread = std::max(spread, hi - lo);
  }
  return {std::max(worst, spread), true,
          "max |<<eps>> - (n+1/2)| = " + fmt(worst) + ", standing-wave time spread = " +
              fmt(spread)};
}

Outcome laguerre_identity() {
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n) {
    const double exact = ((n % 2 == 0) ? 1.0 : -1.0) * (2.0 * n + 1.0) / 4.0;
    worst = std::max(worst, std::abs(laguerre_energy_identity(n).value - exact));
  }
  return {worst, true, "n = 0..8"};
}

Outcome oracle_equivalence() {
  const OscillatorParams params;
  const auto axis = linspace(-3.0, 3.0, 9);
  double worst = 0.0;
  for (const int n : {0, 1, 2, 3, 5}) {
    for (const double x : axis) {
      for (const double p : axis) {
        const PhasePoint pt{x, p};
        worst = std::max(worst, std::abs(wigner_from_wavefunction(params, n, pt).value -
                                         wigner_stationary(params, n, pt)));
      }
    }
  }
  return {worst, true, "9x9 grid on [-3,3]^2, n in {0,1,2,3,5}"};
}

Outcome node_structure() {
  const OscillatorParams params;
  double node_dev = 0.0;
  int antinode_mismatches = 0;
  constexpr int kGrid = 720;
  for (const int ell : {1, 2, 3}) {
    const StandingWaveSpec spec(ell, 2.0, 5.0);
    const double period = spec.period(params.omega());
    for (const int n : {0, 5}) {
      for (const double rho : linspace(0.05, 3.0, 12)) {
        for (const double phi : node_angles(spec)) {
          const PhasePoint pt = from_polar(params, {rho, phi});
          for (const double t : linspace(0.0, period, 9)) {
            node_dev = std::max(node_dev, std::abs(standing_wave_eval(params, n, spec, pt, t) -
                                                   wigner_stationary(params, n, pt)));
          }
        }
      }
      for (const double rho : {0.8, 1.7}) {
        std::vector<double> dev(kGrid);
        for (int j = 0; j < kGrid; ++j) {
          const PhasePoint pt = from_polar(params, {rho, 2.0 * kPi * j / kGrid});
          dev[j] = std::abs(standing_wave_eval(params, n, spec, pt, 0.0) -
                            wigner_stationary(params, n, pt));
        }
        const double peak = *std::max_element(dev.begin(), dev.end());
        const int stride = kGrid / (8 * ell);  // antinodes at (2k+1) * stride
        for (int j = 0; j < kGrid; ++j) {
          const bool is_max = dev[j] >= peak * (1.0 - 1e-9);
          const bool is_antinode = (kGrid % (8 * ell) == 0) && (j % stride == 0) &&
                                   ((j / stride) % 2 == 1);
          if (is_max != is_antinode) ++antinode_mismatches;
        }
      }
    }
  }
  return {node_dev, antinode_mismatches == 0,
          "max node-line |W_l - W_n| = " + fmt(node_dev) +
              ", antinode/argmax mismatches on 720-point grid = " +
              std::to_string(antinode_mismatches)};
}

Outcome snapshot_identities() {
  const OscillatorParams params;
  const StandingWaveSpec spec(3, 2.0, 5.0);
  const double period = spec.period(params.omega());
  const GridSpec grid{4.0, 64, 128, 0.0};
  double quarter_dev = 0.0;
  double period_dev = 0.0;
  for (const int n : {0, 5}) {
    const PhaseField w = standing_wave_field(params, n, spec);
    const Field2D stationary = sample_field(stationary_field(params, n), params, grid, 0.0);
    for (const double frac : {0.25, 0.75}) {
      quarter_dev = std::max(quarter_dev, max_abs_difference(
                                              sample_field(w, params, grid, frac * period),
                                              stationary));
    }
    period_dev = std::max(period_dev, max_abs_difference(sample_field(w, params, grid, 0.0),
                                                         sample_field(w, params, grid, period)));
  }
  return {std::max(quarter_dev, period_dev), true,
          "max |W(T/4 or 3T/4) - W_n| = " + fmt(quarter_dev) + ", max |W(0) - W(T)| = " +
              fmt(period_dev)};
}

Outcome hudson_positivity() {
  const OscillatorParams params;
  const GridSpec grid{7.0, 512, 512, 0.0};
  const auto min_over = [&](double amplitude) {
    const StandingWaveSpec spec(3, amplitude, 5.0);
    const PhaseField w = standing_wave_field(params, 0, spec);
    double lo = INFINITY;
    for (const double frac : {0.0, 0.25, 0.5}) {
      const Field2D f = sample_field(w, params, grid, frac * spec.period(params.omega()));
      for (const double v : f.values()) lo = std::min(lo, v);
    }
    return lo;
  };
  const double min_ok = min_over(2.0);
  const double min_negative = min_over(3.0);
  return {min_ok, min_negative < 0.0,
          "min W (A=2, C=5) = " + fmt(min_ok) + ", min W (A=3, C=5) = " + fmt(min_negative)};
}

std::vector<double> residual_maxima(const PhaseField& w, const OscillatorParams& params,
                                    bool wave, const std::vector<int>& n_phis) {
  std::vector<double> maxima;
  const double t0 = 0.3;
  for (const int n_phi : n_phis) {
    GridSpec grid{3.0, 12, n_phi, 0.0};
    grid.dt = 0.5 * grid.d_phi() / params.omega();
    const Field2D before = sample_field(w, params, grid, t0 - grid.dt);
    const Field2D now = sample_field(w, params, grid, t0);
    const Field2D after = sample_field(w, params, grid, t0 + grid.dt);
    const Field2D r = wave ? wave_residual(before, now, after, params)
                           : transport_residual(before, now, after, params);
    maxima.push_back(r.max_abs());
  }
  return maxima;
}

Outcome residual_discrimination() {
  const OscillatorParams params;
  const std::vector<int> n_phis{32, 64, 128};
  const StandingWaveSpec spec(1, 2.0, 5.0);
  const PhaseField standing = ExtendedWigner(params, 0, spec.profile()).field();
  const double a = 2.0;
  const PhaseField chiral =
      ExtendedWigner(params, 0,
                     WaveProfile([a](double th) { return a * std::sin(th); },
                                 [](double) { return 0.0; }, 5.0, 2))
          .field();

  const auto sw = residual_maxima(standing, params, true, n_phis);
  const auto st = residual_maxima(standing, params, false, n_phis);
  const auto cw = residual_maxima(chiral, params, true, n_phis);
  const auto ct = residual_maxima(chiral, params, false, n_phis);

  double worst_ratio = INFINITY;
  for (const auto* seq : {&sw, &cw, &ct}) {
    for (std::size_t k = 0; k + 1 < seq->size(); ++k) {
      worst_ratio = std::min(worst_ratio, (*seq)[k] / (*seq)[k + 1]);
    }
  }
  const bool transport_persists = st.back() > 0.1 * st.front();
  std::ostringstream d;
  d << "standing wave residual " << fmt(sw[0]) << " " << fmt(sw[1]) << " " << fmt(sw[2])
    << "; standing transport residual " << fmt(st[0]) << " " << fmt(st[1]) << " "
    << fmt(st[2]) << "; single-chirality wave " << fmt(cw[0]) << " " << fmt(cw[2])
    << ", transport " << fmt(ct[0]) << " " << fmt(ct[2])
    << "; the standing wave solves the second-order equation but not W_t = w W_phi";
  return {worst_ratio, transport_persists, d.str()};
}

Outcome solver_convergence() {
  const OscillatorParams params;
  const PhaseField initial = [params](const PhasePoint& pt, double) {
    const PolarPoint polar = to_polar(params, pt);
    return wigner_kernel(params, 0, polar.rho) * std::sin(2.0 * polar.phi);
  };
  const PhaseField exact = propagate_exact(initial, params);
  const double period = 2.0 * kPi / params.omega();
  std::vector<double> errors;
  for (const int n_phi : {256, 512, 1024}) {
    GridSpec grid{3.0, 8, n_phi, 0.0};
    grid.dt = 0.5 * grid.d_phi() / params.omega();
    const Field2D start = sample_field(initial, params, grid, 0.0);
    const EvolveResult r = evolve_fd(start, params, period);
    errors.push_back(max_abs_difference(r.field, sample_field(exact, params, grid, period)));
  }
  const double o1 = observed_order(errors[0], errors[1]);
  const double o2 = observed_order(errors[1], errors[2]);
  const double worst = std::max(std::abs(o1 - 1.0), std::abs(o2 - 1.0));
  return {worst, true,
          "errors " + fmt(errors[0]) + " " + fmt(errors[1]) + " " + fmt(errors[2]) +
              ", observed orders " + std::to_string(o1) + " " + std::to_string(o2)};
}

Outcome running_wave_negative() {
  const OscillatorParams params;
  const WaveProfile running = WaveProfile::running_wave(2.0, 5.0, 2);
  const ParityReport parity = check_parity(params, running);
  const PhaseField w = ExtendedWigner(params, 0, running).field();
  double worst = 0.0;
  // Midpoints of 20 cells on [-3, 3]; the line x = 0 runs through the
  // origin, where a non-odd profile makes the integrand discontinuous.
  for (int k = 0; k < 20; ++k) {
    const double x = -3.0 + 6.0 * (k + 0.5) / 20.0;
    worst = std::max(worst, std::abs(marginal_over_p(w, params, x, 0.0).value -
                                     position_density(params, 0, x)));
  }
  return {worst, !parity.passed,
          std::string("parity check ") + (parity.passed ? "passed" : "failed") +
              " (x-violation " + fmt(parity.max_x_violation) + ", p-violation " +
              fmt(parity.max_p_violation) + "), max marginal deviation " + fmt(worst)};
}

Outcome moyal_degeneration() {
  double quadratic_max = 0.0;
  double cubic_dev = 0.0;
  double quartic_dev = 0.0;
  const std::vector<PhasePoint> points{{0.3, -0.7}, {-1.1, 0.4}, {0.0, 1.3}, {2.0, -0.2},
                                       {-0.6, -1.5}};
  for (const double alpha : {0.0, 0.7, -1.3}) {
    const OscillatorParams params(1.0, 1.0, 1.0, alpha);
    const PolynomialPotential u = PolynomialPotential::harmonic(params);
    for (const int n : {0, 1, 3}) {
      const DifferentiableField exact = stationary_differentiable_field(params, n);
      const DifferentiableField numeric{exact.value, {}};
      for (const PhasePoint& pt : points) {
        quadratic_max = std::max({quadratic_max, std::abs(moyal_rhs(u, exact, pt, 0.0, 1.0)),
                                  std::abs(moyal_rhs(u, numeric, pt, 0.0, 1.0))});
      }
    }
  }
  for (const double hbar : {1.0, 0.5}) {
    const OscillatorParams params(1.0, 1.0, hbar, 0.0);
    const DifferentiableField w = stationary_differentiable_field(params, 0);
    for (const PhasePoint& pt : points) {
      // d^3/dp^3 of exp(-p^2/hbar) is -(hbar^-3/2) H_3(p/sqrt(hbar)) exp(-p^2/hbar).
      const double s = pt.p / std::sqrt(hbar);
      const double h3 = 8.0 * s * s * s - 12.0 * s;
      const double w_ppp = std::exp(-pt.x * pt.x / hbar) / (kPi * hbar) *
                           (-h3 * std::exp(-s * s)) / std::pow(hbar, 1.5);
      const double cubic = moyal_rhs(PolynomialPotential({0.0, 0.0, 0.0, 1.0}), w, pt, 0.0, hbar);
      const double quartic =
          moyal_rhs(PolynomialPotential({0.0, 0.0, 0.0, 0.0, 1.0}), w, pt, 0.0, hbar);
      cubic_dev = std::max(cubic_dev, std::abs(cubic - (-hbar * hbar / 4.0) * w_ppp));
      quartic_dev = std::max(quartic_dev, std::abs(quartic - (-hbar * hbar * pt.x) * w_ppp));
    }
  }
  return {std::max(cubic_dev, quartic_dev), quadratic_max == 0.0,
          "quadratic max |rhs| = " + fmt(quadratic_max) + " (must be exactly 0), x^3 dev " +
              fmt(cubic_dev) + ", x^4 dev " + fmt(quartic_dev)};
}

const std::vector<CheckDef>& definitions() {
  static const std::vector<CheckDef> defs{
      {"normalization", "stationary W_n integrate to 1 over phase space",
       "|int W_n - 1| (unit normalization)", 1e-8, Comparison::at_most, 5.0,
       stationary_normalization},
      {"extended-normalization", "standing-wave normalization factor",
       "|N - 1/C| (odd profile has zero mean)", 1e-10, Comparison::at_most, 1.0,
       extended_normalization},
      {"marginals", "marginals of the standing-wave Wigner function",
       "|marginal - oscillator density| (odd profile averages out)", 1e-6,
       Comparison::at_most, 60.0, marginal_matrix},
      {"energy", "mean energy of stationary and standing-wave states",
       "|<<eps>> - (n + 1/2)| and time spread", 1e-6, Comparison::at_most, 30.0,
       energy_spectrum},
      {"laguerre-identity", "weighted Laguerre integral",
       "|int exp(-2e) L_n(4e) e de - (-1)^n (2n+1)/4|", 1e-9, Comparison::at_most, 1.0,
       laguerre_identity},
      {"oracle", "Fourier-transform construction vs Laguerre closed form",
       "|W_fourier - W_n|", 1e-7, Comparison::at_most, 30.0, oracle_equivalence},
      {"nodes", "node lines and antinode extremality",
       "|W_l - W_n| on node lines; argmax at antinodes", 1e-12, Comparison::at_most, 5.0,
       node_structure},
      {"snapshots", "quarter-period and full-period snapshots",
       "|W(T/4) - W_n|, |W(3T/4) - W_n|, |W(0) - W(T)|", 1e-12, Comparison::at_most, 5.0,
       snapshot_identities},
      {"positivity", "ground-state positivity for 2A/C < 1",
       "min W >= 0 for A=2, C=5; min W < 0 for A=3", 0.0, Comparison::at_least, 5.0,
       hudson_positivity},
      {"residuals", "wave vs transport residuals under refinement",
       "residual reduction per halving >= 3.5; standing transport residual persists", 3.5,
       Comparison::at_least, 60.0, residual_discrimination},
      {"solver", "upwind solver vs exact rotation",
       "|observed order - 1| over three grids", 0.2, Comparison::at_most, 60.0,
       solver_convergence},
      {"negative", "running wave violates parity and marginals",
       "max marginal deviation > 1e-3 and parity check fails", 1e-3, Comparison::greater_than,
       10.0, running_wave_negative},
      {"moyal", "Moyal right-hand side for polynomial potentials",
       "0 exactly for quadratic U; single-term closed forms for x^3, x^4", 1e-6,
       Comparison::at_most, 5.0, moyal_degeneration},
  };
  return defs;
}

CheckResult execute(const CheckDef& def, const SuiteOptions& options) {
  CheckResult r;
  r.id = def.id;
  r.description = def.description;
  r.target = def.target;
  r.comparison = def.comparison;
  r.threshold = def.threshold;
  r.budget_seconds = def.budget_seconds;
  if (options.tolerance_override && def.comparison == Comparison::at_most) {
    r.threshold = *options.tolerance_override;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  bool ran = true;
  try {
    outcome = def.run();
  } catch (const Error& e) {
    ran = false;
    outcome.metric = NAN;
    outcome.detail = std::string("error: ") + e.what();
  }
  r.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.computed = outcome.metric;
  r.detail = outcome.detail;

  bool metric_ok = false;
  if (def.comparison == Comparison::at_most) {
    metric_ok = outcome.metric <= r.threshold;
  } else if (def.comparison == Comparison::greater_than) {
    metric_ok = outcome.metric > r.threshold;
  } else {
    metric_ok = outcome.metric >= r.threshold;
  }
  r.passed = ran && metric_ok && outcome.extra_ok && r.runtime_seconds <= r.budget_seconds;
  return r;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["target"] = c.target;
    j["computed"] = std::isfinite(c.computed) ? nlohmann::json(c.computed) : nlohmann::json();
    j["threshold"] = c.threshold;
    j["comparison"] = comparison_symbol(c.comparison);
    j["passed"] = c.passed;
    j["runtime_seconds"] = c.runtime_seconds;
    j["budget_seconds"] = c.budget_seconds;
    j["detail"] = c.detail;
    doc["checks"].push_back(std::move(j));
  }
  return doc.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ": computed " << fmt(c.computed)
        << ' ' << comparison_symbol(c.comparison) << ' ' << fmt(c.threshold)
        << " (" << std::fixed;
    out.precision(2);
    out << c.runtime_seconds << " s of " << c.budget_seconds << " s)" << std::defaultfloat
        << " | " << c.detail << '\n';
  }
  return out.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all"};
  for (const CheckDef& def : definitions()) names.emplace_back(def.id);
  return names;
}

VerificationReport run_suite(std::string_view name, const SuiteOptions& options) {
  VerificationReport report;
  report.suite = std::string(name);
  bool matched = false;
  for (const CheckDef& def : definitions()) {
    if (name == "all" || name == def.id) {
      matched = true;
      report.checks.push_back(execute(def, options));
    }
  }
  if (!matched) throw ConfigError("unknown suite '" + std::string(name) + "'");
  return report;
}

}  // namespace phasewave
