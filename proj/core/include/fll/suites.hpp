#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fll/config.hpp"
#include "fll/report.hpp"

namespace fll {

/// One named check inside a suite. Expected-fail fixtures declare the
/// witness they must reproduce: a matching failure counts as the suite
/// passing, anything else does not.
struct CheckSpec {
  std::string name;
  bool expect_fail = false;
  nlohmann::json expected_witness;  // subset match against the report witness
  std::function<CheckReport(const SuiteConfig&)> run;
};

struct SuiteSpec {
  std::string name;
  std::string description;
  std::vector<CheckSpec> checks;
};

/// All registered suites, in the order the CLI runs them.
const std::vector<SuiteSpec>& suite_registry();

const SuiteSpec* find_suite(const std::string& name);

struct SuiteOutcome {
  CheckReport report;
  bool expect_fail = false;
  bool as_expected = false;
};

/// True when every key/value in `expected` occurs in `actual` (recursively
/// for nested objects).
bool witness_matches(const nlohmann::json& expected, const nlohmann::json& actual);

std::vector<SuiteOutcome> run_suite(const SuiteSpec& suite, const SuiteConfig& config);

/// Runs the named suites ("all" expands to the whole registry) in registry
/// order. Unknown names raise ConfigError.
std::vector<SuiteOutcome> run_suites(const std::vector<std::string>& names,
                                     const SuiteConfig& config);

std::vector<std::string> suite_names();

}  // namespace fll
