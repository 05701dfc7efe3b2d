#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace fll {

enum class CheckStatus { Pass, Fail, Error };

std::string to_string(CheckStatus s);

/// Outcome of a single verifier run. Every checker in the library returns
/// one of these: pass/fail, the largest error seen (when numeric), and a
/// concrete witness that reproduces the violation on failure.
struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::optional<double> max_error;
  nlohmann::json witness;  // null unless a violation (or datum) was recorded
  nlohmann::json params = nlohmann::json::object();
  std::int64_t duration_ms = 0;

  bool passed() const { return status == CheckStatus::Pass; }

  /// Serialized form; timings are opt-in so that repeated runs with the
  /// same config and seed emit byte-identical reports.
  nlohmann::json to_json(bool include_timing = false) const;

  static CheckReport pass(std::string name);
  static CheckReport fail(std::string name, nlohmann::json witness);
};

}  // namespace fll
