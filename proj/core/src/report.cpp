#include "fll/report.hpp"

namespace fll {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

nlohmann::json CheckReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["name"] = name;
  j["status"] = to_string(status);
  if (max_error) j["max_error"] = *max_error;
  j["witness"] = witness;
  j["params"] = params;
  if (include_timing) j["duration_ms"] = duration_ms;
  return j;
}

CheckReport CheckReport::pass(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

CheckReport CheckReport::fail(std::string name, nlohmann::json witness) {
  CheckReport r;
  r.name = std::move(name);
  r.status = CheckStatus::Fail;
  r.witness = std::move(witness);
  return r;
}

}  // namespace fll
