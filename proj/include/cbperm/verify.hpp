#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cbperm {

struct CheckResult {
  std::string name;
  std::string range;   // e.g. "n=1..10"
  bool passed = false;
  std::string detail;  // first counterexample on failure, a short note otherwise
};

struct VerifyReport {
  int max_n = 0;
  int truncation = 0;
  std::vector<CheckResult> checks;
  /// Smallest n <= max_n at which asc is distributed differently over the
  /// two classes.
  std::optional<int> first_ascent_difference;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  /// One line per check: "PASS name [range] detail".
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every exhaustive check up to max_n (path-side checks scale with it:
/// prefixes up to length 2*max_n - 2). Series are compared at x-degree
/// `truncation`, which is raised to max_n if smaller. Checks run
/// concurrently; the report order is fixed. Throws std::invalid_argument for
/// max_n < 4.
VerifyReport verify_suite(int max_n, int truncation = 12);

}  // namespace cbperm
