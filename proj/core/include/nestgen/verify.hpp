#pragma once

// Verification harness: every counting route checked against the others
// and against the embedded tables.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestgen/serialize.hpp"

namespace nestgen {

enum class Suite { Tables, CrossMethods, Baxter, Egf, Formula, All };

std::string to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

enum class CheckStatus { Pass, Fail, ExperimentalMismatch };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double runtime_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  /// False iff some non-experimental check failed.
  bool passed() const;
};

struct VerifyOptions {
  /// Caps the largest n of every check; each suite has its own default.
  std::optional<int> max_n;
  std::size_t max_labels = 20'000'000;
};

/// Throws ResourceExceeded when a DP outgrows its label budget.
VerificationReport run_suite(Suite suite, const VerifyOptions& options = {});

Json to_json(const VerificationReport& report);

}  // namespace nestgen
