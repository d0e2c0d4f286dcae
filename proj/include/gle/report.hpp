#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gle/gauge.hpp"

namespace gle {

struct CheckResult {
  std::string name;
  std::string reference;  // short pointer into the verified statement
  bool pass = false;
  std::string witness;    // ranks, minors, residuals
  double seconds = 0;
};

struct SuiteConfig {
  uint64_t seed = 20240817;
  std::string only;        // glob over check names; empty runs everything
  int jobs = 0;            // 0 = hardware concurrency
  bool tamper_ideal = false;  // self-test hook: flips one sign in the ideal
};

struct Report {
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Deterministic JSON; timing fields only when requested.
  std::string to_json(bool with_timing) const;
};

/// Names of all registered checks, in execution order.
std::vector<std::string> check_names();

/// Run the verification suite. Deterministic given the seed; the worker pool
/// merges results in registration order.
Report run_suite(const SuiteConfig& config);

/// Criterion groups of the acceptance suite: id, title, member checks.
struct CriterionGroup {
  int id;
  std::string title;
  std::vector<std::string> checks;
};
const std::vector<CriterionGroup>& acceptance_criteria();

/// Simple '*' glob.
bool glob_match(const std::string& pattern, const std::string& name);

/// Machine-readable tables for the `ranks` subcommand.
std::string ranks_json();
/// Gauge data as JSON: bases and the B^k matrices, exact rational strings.
std::string gauge_json(const GaugeData& g);

}  // namespace gle
