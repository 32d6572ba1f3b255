#pragma once

#include <string>
#include <vector>

#include "lie/decomp.hpp"

namespace lie {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or summary
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Suites: rootsys, bds, cascade, schmid, lspath, series. Throws std::invalid_argument otherwise.
SuiteResult run_suite(const std::string& name, std::size_t guard = kDefaultGuard);
const std::vector<std::string>& suite_names();

}  // namespace lie
