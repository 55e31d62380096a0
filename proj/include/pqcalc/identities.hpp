#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pq {

struct IdentityOutcome {
  std::string label;
  std::string description;
  int passed = 0;
  int trials = 0;
  /// Extra lines for the report, e.g. the Heine MATCH/MISMATCH verdict.
  std::vector<std::string> notes;

  bool ok() const { return passed == trials; }
};

struct SuiteOptions {
  std::uint64_t seed = 20240501;
  int trials = 50;
  /// Run a single identity by label.
  std::optional<std::string> only;
  /// Adds an identity that is false by construction, to prove failures surface.
  bool inject_failure = false;
};

struct SuiteReport {
  std::vector<IdentityOutcome> outcomes;

  bool all_passed() const;
};

/// Every label run_identity_suite knows, in report order.
std::vector<std::string> identity_labels();

/// Runs the seeded identity checks. Each label draws from its own generator
/// (seed mixed with the label), so --only reproduces the full run's trials.
/// Throws Error(InvalidArgument) for an unknown label or trials < 1.
SuiteReport run_identity_suite(const SuiteOptions& options);

}  // namespace pq
