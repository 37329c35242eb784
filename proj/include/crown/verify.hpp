#pragma once

#include <string>
#include <vector>

#include "crown/types.hpp"

namespace crown {

/// One acceptance check: name, expected/got/tolerance, verdict.
struct CheckResult {
  std::string name;
  double expected;
  double got;
  double tol;
  bool pass;
  std::string note;
};

struct SuiteResult {
  int criterion;            // 1..15
  std::string suite;        // short name used by the CLI
  std::vector<CheckResult> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// The acceptance criteria, numbered 1..15.  Each runs its full check list
/// with pinned seeds and tolerances and never throws on a mere failure
/// (numerical failures are converted into failing checks).
SuiteResult run_criterion(int k);

/// All criteria in order.
std::vector<SuiteResult> run_all_criteria();

/// Map a suite name ("gamma", "planewave", ...) to its criterion number;
/// returns 0 when unknown.
int criterion_for_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace crown
