#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "phasewave/errors.hpp"
#include "phasewave/evolution.hpp"
#include "phasewave/extended_wigner.hpp"
#include "phasewave/verification.hpp"
#include "phasewave/wigner_core.hpp"

namespace phasewave::cli {

namespace {

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError("invalid time '" + std::string(whole) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Context {
  OscillatorParams params;
  StandingWaveSpec spec;
  GridSpec grid;
  std::vector<double> times;
};

Context validate(const RunConfig& config) {
  try {
    const OscillatorParams params(config.m, config.omega, config.hbar, config.alpha);
    const StandingWaveSpec spec(config.ell, config.amplitude, config.c);
    static_cast<void>(StateIndex(config.n));
    GridSpec grid{config.rho_max, config.n_rho, config.n_phi, 0.0};
    grid.validate();
    grid.dt = config.dt.value_or(0.5 * grid.d_phi() / params.omega());
    grid.validate();
    if (config.tol && !(*config.tol > 0.0)) throw UsageError("--tol must be positive");
    std::vector<double> times;
    for (const std::string& token : config.times) {
      times.push_back(parse_time(token, spec.period(params.omega())));
    }
    return {params, spec, grid, std::move(times)};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return ".";
}

std::string extension(FileFormat format) { return "." + std::string(format_name(format)); }

// One output path per time: --out as given for a single time, otherwise
// suffixed with the time index.
std::filesystem::path output_path(const RunConfig& config, const std::string& stem,
                                  std::size_t index, std::size_t count) {
  if (config.out) {
    if (count == 1) return *config.out;
    std::filesystem::path p = *config.out;
    const std::string ext = p.has_extension() ? p.extension().string() : extension(config.format);
    p.replace_filename(p.stem().string() + "_t" + std::to_string(index) + ext);
    return p;
  }
  return default_output_dir() / (stem + "_t" + std::to_string(index) + extension(config.format));
}

FieldMetadata metadata(const RunConfig& config, const Context& ctx, double t) {
  return {config.n, config.ell, config.amplitude, config.c, ctx.params, t};
}

int cmd_eval(const RunConfig& config, const Context& ctx, std::ostream& out) {
  std::ostringstream table;
  table << "t,x,p,rho,phi,W_n,W_ext\n";
  const PhasePoint pt{config.x, config.p};
  const PolarPoint polar = to_polar(ctx.params, pt);
  const ExtendedWigner ext(ctx.params, config.n, ctx.spec.profile());
  for (const double t : ctx.times) {
    table << format_double(t) << ',' << format_double(pt.x) << ',' << format_double(pt.p) << ','
          << format_double(polar.rho) << ',' << format_double(polar.phi) << ','
          << format_double(wigner_stationary(ctx.params, config.n, pt)) << ','
          << format_double(ext(pt, t)) << '\n';
  }
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open for writing", config.out->string());
    file << table.str();
  } else {
    out << table.str();
  }
  return kExitOk;
}

int cmd_grid(const RunConfig& config, const Context& ctx, std::ostream& out) {
  const PhaseField w = standing_wave_field(ctx.params, config.n, ctx.spec);
  const std::string stem = "field_n" + std::to_string(config.n) + "_l" + std::to_string(config.ell);
  for (std::size_t k = 0; k < ctx.times.size(); ++k) {
    const double t = ctx.times[k];
    const auto path = output_path(config, stem, k, ctx.times.size());
    export_field(sample_field(w, ctx.params, ctx.grid, t), metadata(config, ctx, t),
                 config.format, path);
    out << "wrote " << path.string() << " (t=" << format_double(t) << ")\n";
  }
  return kExitOk;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  SuiteOptions options;
  options.tolerance_override = config.tol;
  VerificationReport report;
  try {
    report = run_suite(config.suite, options);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  out << report.to_text();
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open for writing", config.out->string());
    file << report.to_json() << '\n';
  }
  const bool ok = report.passed();
  out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_evolve(const RunConfig& config, const Context& ctx, std::ostream& out) {
  try {
    ctx.grid.validate_for_evolution(ctx.params);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const PhaseField standing = standing_wave_field(ctx.params, config.n, ctx.spec);
  const PhaseField rotated = propagate_exact(standing, ctx.params);
  const Field2D initial = sample_field(standing, ctx.params, ctx.grid, 0.0);
  const std::string stem = "evolved_n" + std::to_string(config.n) + "_l" + std::to_string(config.ell);
  out << "t,steps,max_dev_exact_rotation,max_dev_standing_wave\n";
  for (std::size_t k = 0; k < ctx.times.size(); ++k) {
    const double t = ctx.times[k];
    const EvolveResult r = evolve_fd(initial, ctx.params, t);
    const double vs_exact =
        max_abs_difference(r.field, sample_field(rotated, ctx.params, ctx.grid, t));
    const double vs_standing =
        max_abs_difference(r.field, sample_field(standing, ctx.params, ctx.grid, t));
    out << format_double(t) << ',' << r.steps << ',' << format_double(vs_exact) << ','
        << format_double(vs_standing) << '\n';
    if (config.out) {
      export_field(r.field, metadata(config, ctx, t), config.format,
                   output_path(config, stem, k, ctx.times.size()));
    }
  }
  return kExitOk;
}

int cmd_nodes(const RunConfig& config, const Context& ctx, std::ostream& out) {
  out << "kind,k,phi,expression\n";
  const auto nodes = node_angles(ctx.spec);
  const auto antinodes = antinode_angles(ctx.spec);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out << "node," << k << ',' << format_double(nodes[k]) << ",pi*" << k << '/'
        << 2 * config.ell << '\n';
  }
  for (std::size_t k = 0; k < antinodes.size(); ++k) {
    out << "antinode," << k << ',' << format_double(antinodes[k]) << ",pi*" << 2 * k + 1
        << '/' << 4 * config.ell << '\n';
  }
  return kExitOk;
}

int cmd_figures(const RunConfig& config, const Context& ctx, std::ostream& out) {
  const std::filesystem::path dir = config.out.value_or(default_output_dir());
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory", dir.string());

  const double period = ctx.spec.period(ctx.params.omega());
  struct Snapshot {
    double fraction;
    const char* label;
  };
  constexpr Snapshot snapshots[] = {{0.0, "t0"}, {0.25, "tT4"}, {0.5, "tT2"}};
  int figure = 1;
  for (const int n : {0, 5}) {
    const PhaseField w = standing_wave_field(ctx.params, n, ctx.spec);
    for (const Snapshot& s : snapshots) {
      const double t = s.fraction * period;
      const auto path = dir / ("figure" + std::to_string(figure) + "_n" + std::to_string(n) +
                               "_l" + std::to_string(config.ell) + "_" + s.label +
                               extension(config.format));
      FieldMetadata meta = metadata(config, ctx, t);
      meta.n = n;
      export_field(sample_field(w, ctx.params, ctx.grid, t), meta, config.format, path);
      out << "wrote " << path.string() << '\n';
      ++figure;
    }
  }
  return kExitOk;
}

}  // namespace

double parse_time(std::string_view token, double period) {
  const std::string_view s = trim(token);
  if (s.empty()) throw UsageError("empty time value");
  const auto t_pos = s.find('T');
  if (t_pos == std::string_view::npos) return parse_number(s, token);

  const std::string_view coef_text = s.substr(0, t_pos);
  std::string_view rest = s.substr(t_pos + 1);
  double coef = coef_text.empty() ? 1.0 : parse_number(coef_text, token);
  if (coef_text == "-") coef = -1.0;
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw UsageError("invalid time '" + std::string(token) + "'");
    denom = parse_number(rest.substr(1), token);
    if (denom == 0.0) throw UsageError("invalid time '" + std::string(token) + "'");
  }
  return coef * period / denom;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig config;
  CLI::App app{"Extended time-dependent Wigner functions of the harmonic oscillator", "phasewave"};
  app.require_subcommand(1);
  app.fallthrough();

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {
      {"eval", "evaluate W_n and the standing-wave function at --x, --p for each --t",
       Command::eval},
      {"grid", "sample the standing-wave function on a polar grid and export it", Command::grid},
      {"check", "run a verification suite (--suite NAME, default all)", Command::check},
      {"evolve", "integrate the transport equation from the t=0 standing wave", Command::evolve},
      {"nodes", "print node and antinode angles for --ell", Command::nodes},
      {"figures", "write the six figure grids (n in {0,5}, t in {0,T/4,T/2})", Command::figures},
  };
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const Sub& s : subs) commands.emplace_back(app.add_subcommand(s.name, s.help), s.command);

  std::string format = "csv";
  std::string out_path;
  double dt = 0.0;
  double tol = 0.0;
  app.add_option("--n", config.n, "oscillator state index");
  app.add_option("--ell", config.ell, "standing-wave index l (k = 2l)");
  app.add_option("--A", config.amplitude, "standing-wave amplitude");
  app.add_option("--C", config.c, "profile constant C");
  app.add_option("--m", config.m, "mass");
  app.add_option("--omega", config.omega, "angular frequency");
  app.add_option("--hbar", config.hbar, "Planck constant");
  app.add_option("--alpha", config.alpha, "linear potential coefficient");
  app.add_option("--x", config.x, "position for eval");
  app.add_option("--p", config.p, "momentum for eval");
  app.add_option("--rho-max", config.rho_max, "grid radius (velocity units)");
  app.add_option("--n-rho", config.n_rho, "radial grid nodes");
  app.add_option("--n-phi", config.n_phi, "angular grid nodes");
  auto* dt_opt = app.add_option("--dt", dt, "time step for evolve (default CFL 0.5)");
  app.add_option("--t", config.times, "times, comma separated; accepts T/4, 3T/4, ...")
      ->delimiter(',');
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  auto* out_opt = app.add_option("--out", out_path, "output file or directory");
  auto* tol_opt = app.add_option("--tol", tol, "override check tolerances");
  app.add_option("--suite", config.suite, "verification suite name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.format = parse_format(format);
  if (*out_opt) config.out = out_path;
  if (*dt_opt) config.dt = dt;
  if (*tol_opt) config.tol = tol;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::check) return cmd_check(config, out);
    const Context ctx = validate(config);
    switch (config.command) {
      case Command::eval:
        return cmd_eval(config, ctx, out);
      case Command::grid:
        return cmd_grid(config, ctx, out);
      case Command::evolve:
        return cmd_evolve(config, ctx, out);
      case Command::nodes:
        return cmd_nodes(config, ctx, out);
      case Command::figures:
        return cmd_figures(config, ctx, out);
      case Command::check:
        break;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "phasewave: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "phasewave: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "phasewave: " << e.what() << "\nrun 'phasewave --help' for usage\n";
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace phasewave::cli
