#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phasewave/field_io.hpp"
#include "phasewave/oscillator.hpp"

namespace phasewave::cli {

enum class Command { eval, grid, check, evolve, nodes, figures };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "PHASEWAVE_OUTPUT_DIR";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults are the natural-unit figure configuration: n = 0, l = 3, A = 2, C = 5.
struct RunConfig {
  Command command = Command::check;
  int n = 0;
  int ell = 3;
  double amplitude = 2.0;
  double c = 5.0;
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double alpha = 0.0;
  double x = 0.0;
  double p = 0.0;
  double rho_max = 4.0;
  int n_rho = 64;
  int n_phi = 128;
  std::optional<double> dt;
  std::vector<std::string> times{"0"};
  FileFormat format = FileFormat::csv;
  std::optional<std::filesystem::path> out;
  std::optional<double> tol;
  std::string suite = "all";
};

// Accepts absolute times ("0.5") and multiples of the standing-wave period
// ("T", "T/4", "3T/4", "0.5T"). Throws UsageError.
double parse_time(std::string_view token, double period);

// Parses the command line. --help throws nothing and returns std::nullopt
// after printing usage to `out`. Throws UsageError for invalid arguments.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

// Validates and dispatches. Returns 0 on success, 1 when a requested check
// fails or an artifact cannot be produced, 2 for an invalid configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with exit-code mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasewave::cli
