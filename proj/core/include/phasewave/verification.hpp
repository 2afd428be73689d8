#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phasewave {

enum class Comparison { at_most, at_least, greater_than };

// Outcome of one verification check. `computed` is the worst-case metric
// over everything the check sampled and is compared against `threshold`.
struct CheckResult {
  std::string id;
  std::string description;
  std::string target;      // what was expected, and where the value comes from
  double computed = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::at_most;
  bool passed = false;
  double runtime_seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
  // One line per check: status, id, metric, threshold, runtime.
  std::string to_text() const;
};

struct SuiteOptions {
  // Replaces the threshold of every "at most" tolerance check.
  std::optional<double> tolerance_override;
};

// "all" plus one name per check, in execution order.
std::vector<std::string> suite_names();

// Throws ConfigError for an unknown suite name.
VerificationReport run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace phasewave
