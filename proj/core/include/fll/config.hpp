#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fll {

/// Raised on malformed configuration input; the message names the offending
/// key so the CLI can surface it verbatim.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Effective parameters for the verification suites. Defaults are the pinned
/// values the acceptance criteria run at; a config file merges over them and
/// unknown keys are rejected.
struct SuiteConfig {
  unsigned lmax = 8;
  unsigned circle_nodes = 64;
  std::array<unsigned, 3> euler_nodes = {32, 32, 32};
  unsigned pairs = 200;
  unsigned gate_samples = 10000;
  double tol_fe = 1e-10;
  double tol_conv = 1e-6;
  double tol_eig = 1e-3;
  std::uint64_t seed = 42;
  unsigned grid_q = 10;
  unsigned pbw_trials = 1000;
  unsigned pbw_degree = 5;
  unsigned sym_degree = 4;
  double step = 1e-4;
  unsigned trunc = 20;
  std::string algebra;              // builtin name or JSON file; empty = all built-ins
  std::vector<std::string> checks;  // suite names; empty = chosen on the CLI
  std::string format = "text";      // "text" | "json"

  /// Strict merge: every key must be known and well-typed.
  void merge_json(const nlohmann::json& j);

  static SuiteConfig from_json(const nlohmann::json& j) {
    SuiteConfig c;
    c.merge_json(j);
    return c;
  }

  nlohmann::json to_json() const;
};

}  // namespace fll
