#include "phasewave/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "phasewave/errors.hpp"

namespace phasewave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_grid(const Field2D& a, const Field2D& b, const char* op) {
  if (!(a.grid() == b.grid())) {
    throw ConfigError(std::string(op) + ": field grids differ");
  }
}

// Weights of the finite-difference approximation to the m-th derivative at
// x0 on arbitrary nodes (Fornberg's recursion).
std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  std::vector<std::vector<double>> c(n + 1, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> weights(n + 1);
  for (int i = 0; i <= n; ++i) weights[i] = c[i][m];
  return weights;
}

using Poly = std::vector<double>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_axpy(double alpha, const Poly& x, const Poly& y) {
  Poly out(std::max(x.size(), y.size()), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

double poly_eval(const Poly& a, double x) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

void GridSpec::validate() const {
  if (n_rho < 2 || n_phi < 1) throw ConfigError("grid needs n_rho >= 2 and n_phi >= 1");
  if (!std::isfinite(rho_max) || rho_max <= 0.0) {
    throw ConfigError("grid rho_max must be positive and finite");
  }
  if (!std::isfinite(dt) || dt < 0.0) throw ConfigError("grid dt must be finite and >= 0");
}

void GridSpec::validate_for_evolution(const OscillatorParams& params) const {
  validate();
  if (n_phi < 16) throw ConfigError("evolution grid needs n_phi >= 16");
  if (dt <= 0.0) throw ConfigError("evolution grid needs dt > 0");
  const double cfl = params.omega() * dt / d_phi();
  if (cfl > 1.0 + 1e-12) {
    throw ConfigError("CFL number " + std::to_string(cfl) + " exceeds 1");
  }
}

double GridSpec::d_phi() const noexcept { return kTwoPi / n_phi; }

Field2D::Field2D(GridSpec grid, double time)
    : grid_(grid), values_(grid.size(), 0.0), time_(time) {
  grid_.validate();
}

Field2D::Field2D(GridSpec grid, std::vector<double> values, double time)
    : grid_(grid), values_(std::move(values)), time_(time) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw ConfigError("field value count does not match grid");
  }
}

std::span<double> Field2D::ring(int i) {
  return std::span<double>(values_).subspan(index(i, 0), grid_.n_phi);
}

std::span<const double> Field2D::ring(int i) const {
  return std::span<const double>(values_).subspan(index(i, 0), grid_.n_phi);
}

double Field2D::max_abs() const {
  double m = 0.0;
  for (const double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_difference(const Field2D& a, const Field2D& b) {
  require_same_grid(a, b, "max_abs_difference");
  double m = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t k = 0; k < va.size(); ++k) m = std::max(m, std::abs(va[k] - vb[k]));
  return m;
}

PhaseField propagate_exact(PhaseField initial, const OscillatorParams& params) {
  return [initial = std::move(initial), params](const PhasePoint& pt, double t) {
    const double angle = params.omega() * t;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double u = params.omega() * shifted_x(params, pt.x);
    const double v = pt.p / params.m();
    const double u_rot = u * c - v * s;
    const double v_rot = u * s + v * c;
    return initial(PhasePoint{u_rot / params.omega() - params.shift(), params.m() * v_rot},
                   0.0);
  };
}

Field2D propagate_exact(const Field2D& initial, const OscillatorParams& params, double t) {
  const GridSpec& grid = initial.grid();
  const double steps = params.omega() * t / grid.d_phi();
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9) {
    throw ConfigError("propagate_exact on a grid needs w t to be a multiple of dphi");
  }
  const long n = grid.n_phi;
  const long shift = ((static_cast<long>(rounded) % n) + n) % n;
  Field2D out(grid, initial.time() + t);
  for (int i = 0; i < grid.n_rho; ++i) {
    const auto src = initial.ring(i);
    auto dst = out.ring(i);
    for (long j = 0; j < n; ++j) dst[j] = src[(j + shift) % n];
  }
  return out;
}

EvolveResult evolve_fd(const Field2D& initial, const OscillatorParams& params,
                       double t_final) {
  const GridSpec& grid = initial.grid();
  grid.validate_for_evolution(params);
  if (!std::isfinite(t_final) || t_final < 0.0) {
    throw ConfigError("evolve_fd: t_final must be finite and >= 0");
  }

  EvolveResult result{initial, 0, 0.0};
  if (t_final == 0.0) return result;

  const auto steps = static_cast<std::size_t>(std::ceil(t_final / grid.dt - 1e-9));
  const double step = t_final / static_cast<double>(steps);
  const double courant = params.omega() * step / grid.d_phi();
  const int n = grid.n_phi;

  Field2D& field = result.field;
  std::vector<double> scratch(n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (int i = 0; i < grid.n_rho; ++i) {
      auto ring = field.ring(i);
      std::copy(ring.begin(), ring.end(), scratch.begin());
      for (int j = 0; j < n - 1; ++j) {
        ring[j] = scratch[j] + courant * (scratch[j + 1] - scratch[j]);
      }
      ring[n - 1] = scratch[n - 1] + courant * (scratch[0] - scratch[n - 1]);
    }
    for (const double v : field.values()) {
      if (!std::isfinite(v)) {
        throw NumericalBlowupError("evolve_fd: non-finite value after step " +
                                   std::to_string(s + 1));
      }
    }
  }
  field.set_time(initial.time() + t_final);
  result.steps = steps;
  result.step = step;
  return result;
}

namespace {

double uniform_step(const Field2D& before, const Field2D& now, const Field2D& after,
                    const char* op) {
  require_same_grid(before, now, op);
  require_same_grid(now, after, op);
  const double dt = now.time() - before.time();
  const double dt_after = after.time() - now.time();
  if (!(dt > 0.0) || std::abs(dt_after - dt) > 1e-9 * dt) {
    throw ConfigError(std::string(op) + ": fields must be uniformly spaced in time");
  }
  return dt;
}

}  // namespace

Field2D wave_residual(const Field2D& before, const Field2D& now, const Field2D& after,
                      const OscillatorParams& params) {
  const double dt = uniform_step(before, now, after, "wave_residual");
  const GridSpec& grid = now.grid();
  const double dphi = grid.d_phi();
  const double w2 = params.omega() * params.omega();
  const int n = grid.n_phi;
  Field2D out(grid, now.time());
  for (int i = 1; i + 1 < grid.n_rho; ++i) {
    const auto prev = before.ring(i);
    const auto cur = now.ring(i);
    const auto next = after.ring(i);
    auto res = out.ring(i);
    for (int j = 0; j < n; ++j) {
      const double w_tt = (next[j] - 2.0 * cur[j] + prev[j]) / (dt * dt);
      const double w_pp =
          (cur[(j + 1) % n] - 2.0 * cur[j] + cur[(j + n - 1) % n]) / (dphi * dphi);
      res[j] = w_tt - w2 * w_pp;
    }
  }
  return out;
}

Field2D transport_residual(const Field2D& before, const Field2D& now, const Field2D& after,
                           const OscillatorParams& params) {
  const double dt = uniform_step(before, now, after, "transport_residual");
  const GridSpec& grid = now.grid();
  const double dphi = grid.d_phi();
  const int n = grid.n_phi;
  Field2D out(grid, now.time());
  for (int i = 1; i + 1 < grid.n_rho; ++i) {
    const auto prev = before.ring(i);
    const auto cur = now.ring(i);
    const auto next = after.ring(i);
    auto res = out.ring(i);
    for (int j = 0; j < n; ++j) {
      const double w_t = (next[j] - prev[j]) / (2.0 * dt);
      const double w_p = (cur[(j + 1) % n] - cur[(j + n - 1) % n]) / (2.0 * dphi);
      res[j] = w_t - params.omega() * w_p;
    }
  }
  return out;
}

PolynomialPotential::PolynomialPotential(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("potential coefficients must be finite");
  }
  if (degree() > kMaxPotentialDegree) {
    throw ConfigError("potential degree " + std::to_string(degree()) + " exceeds " +
                      std::to_string(kMaxPotentialDegree));
  }
}

PolynomialPotential PolynomialPotential::harmonic(const OscillatorParams& params) {
  const double k = params.m() * params.omega() * params.omega();
  return PolynomialPotential(
      {params.alpha() * params.alpha() / (2.0 * k), params.alpha(), 0.5 * k});
}

int PolynomialPotential::degree() const noexcept {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] != 0.0) return k;
  }
  return -1;
}

double PolynomialPotential::operator()(double x) const { return poly_eval(coeffs_, x); }

PolynomialPotential poly_derivative(const PolynomialPotential& u, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  std::vector<double> c(u.coeffs().begin(), u.coeffs().end());
  for (int d = 0; d < order && !c.empty(); ++d) {
    std::vector<double> next;
    for (std::size_t k = 1; k < c.size(); ++k) next.push_back(static_cast<double>(k) * c[k]);
    c = std::move(next);
  }
  return PolynomialPotential(std::move(c));
}

double fd_momentum_step(int order, double p) {
  const double rule = std::max(1e-3, 1e-3 * std::abs(p));
  if (order <= 3) return rule;
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(rule, std::pow(eps, 1.0 / (order + 4)) * std::max(1.0, std::abs(p)));
}

double fd_p_derivative(const PhaseField& w, const PhasePoint& pt, double t, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (order == 0) return w(pt, t);
  const int half = (order + 3) / 2;
  const double h = fd_momentum_step(order, pt.p);
  std::vector<double> offsets;
  for (int k = -half; k <= half; ++k) offsets.push_back(static_cast<double>(k));
  const std::vector<double> weights = fornberg_weights(0.0, offsets, order);
  CompensatedSum sum;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (weights[k] == 0.0) continue;
    sum.add(weights[k] * w(PhasePoint{pt.x, pt.p + offsets[k] * h}, t));
  }
  return sum.value() / std::pow(h, order);
}

DifferentiableField stationary_differentiable_field(const OscillatorParams& params,
                                                    StateIndex n) {
  DifferentiableField field;
  field.value = stationary_field(params, n);
  field.p_derivative = [params, n](const PhasePoint& pt, double, int order) {
    // W = c exp(-beta p^2) Q(p), Q(p) = exp(-m w xb^2 / hbar) L_n(a p^2 + b).
    const double m = params.m();
    const double w = params.omega();
    const double hbar = params.hbar();
    const double xb = shifted_x(params, pt.x);
    const double beta = 1.0 / (m * hbar * w);
    const double a = 2.0 * beta;
    const double b = 2.0 * m * w * xb * xb / hbar;

    const Poly y{b, 0.0, a};
    Poly prev{1.0};
    Poly cur{1.0 - b, 0.0, -a};
    if (n.value() == 0) cur = prev;
    for (int k = 1; k < n.value(); ++k) {
      // (k+1) L_{k+1} = (2k+1) L_k - y L_k - k L_{k-1}
      Poly next = poly_axpy(2.0 * k + 1.0, cur, poly_axpy(-1.0, poly_mul(y, cur),
                                                        poly_axpy(-k, prev, Poly{0.0})));
      for (double& c : next) c /= (k + 1.0);
      prev = std::move(cur);
      cur = std::move(next);
    }
    // d/dp [exp(-beta p^2) D] = exp(-beta p^2) (D' - 2 beta p D)
    Poly d = cur;
    for (int k = 0; k < order; ++k) {
      Poly next(d.size() + 1, 0.0);
      for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] += static_cast<double>(i) * d[i];
      for (std::size_t i = 0; i < d.size(); ++i) next[i + 1] -= 2.0 * beta * d[i];
      d = std::move(next);
    }
    const double sign = (n.value() % 2 == 0) ? 1.0 : -1.0;
    return sign / (std::numbers::pi * hbar) * std::exp(-m * w * xb * xb / hbar) *
           std::exp(-beta * pt.p * pt.p) * poly_eval(d, pt.p);
  };
  return field;
}

double moyal_rhs(const PolynomialPotential& u, const DifferentiableField& w,
                 const PhasePoint& pt, double t, double hbar) {
  if (u.degree() > kMaxPotentialDegree) throw ConfigError("potential degree too large");
  double total = 0.0;
  double factorial = 6.0;  // (2k+1)! for k = 1
  double half_hbar_pow = (0.5 * hbar) * (0.5 * hbar);
  for (int k = 1; 2 * k + 1 <= std::max(u.degree(), 0); ++k) {
    const int order = 2 * k + 1;
    const PolynomialPotential derivative = poly_derivative(u, order);
    if (!derivative.is_zero()) {
      const double w_p = w.p_derivative ? w.p_derivative(pt, t, order)
                                        : fd_p_derivative(w.value, pt, t, order);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      total += sign * half_hbar_pow / factorial * derivative(pt.x) * w_p;
    }
    factorial *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    half_hbar_pow *= (0.5 * hbar) * (0.5 * hbar);
  }
  return total;
}

}  // namespace phasewave
