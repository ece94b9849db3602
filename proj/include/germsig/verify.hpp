#pragma once

#include <string>
#include <vector>

#include "germsig/json_io.hpp"

namespace germsig {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool pass() const;
  std::size_t failures() const;
};

// The suite manifest shared by the CLI and the acceptance tests.
const Json& verify_manifest();
std::vector<std::string> suite_names();
// Throws Error("BadSpec") for an unknown suite.
SuiteResult run_suite(const std::string& name);

Json suite_to_json(const SuiteResult& r);

}  // namespace germsig
