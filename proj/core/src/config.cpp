#include "fll/config.hpp"

namespace fll {

namespace {

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

unsigned get_positive(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0)
    throw ConfigError("config key '" + key + "' must be a positive integer");
  return j.get<unsigned>();
}

double get_tol(const nlohmann::json& j, const std::string& key) {
  const double v = get_as<double>(j, key);
  if (!(v > 0)) throw ConfigError("config key '" + key + "' must be positive");
  return v;
}

}  // namespace

void SuiteConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "lmax")
      lmax = get_positive(value, key);
    else if (key == "circle_nodes")
      circle_nodes = get_positive(value, key);
    else if (key == "euler_nodes") {
      if (!value.is_array() || value.size() != 3)
        throw ConfigError("config key 'euler_nodes' must be an array of three node counts");
      for (std::size_t i = 0; i < 3; ++i) euler_nodes[i] = get_positive(value[i], key);
    } else if (key == "pairs")
      pairs = get_positive(value, key);
    else if (key == "gate_samples")
      gate_samples = get_positive(value, key);
    else if (key == "tol_fe")
      tol_fe = get_tol(value, key);
    else if (key == "tol_conv")
      tol_conv = get_tol(value, key);
    else if (key == "tol_eig")
      tol_eig = get_tol(value, key);
    else if (key == "seed")
      seed = get_as<std::uint64_t>(value, key);
    else if (key == "grid_q")
      grid_q = get_positive(value, key);
    else if (key == "pbw_trials")
      pbw_trials = get_positive(value, key);
    else if (key == "pbw_degree")
      pbw_degree = get_positive(value, key);
    else if (key == "sym_degree")
      sym_degree = get_positive(value, key);
    else if (key == "step")
      step = get_tol(value, key);
    else if (key == "trunc")
      trunc = get_positive(value, key);
    else if (key == "algebra")
      algebra = get_as<std::string>(value, key);
    else if (key == "checks")
      checks = get_as<std::vector<std::string>>(value, key);
    else if (key == "format") {
      format = get_as<std::string>(value, key);
      if (format != "text" && format != "json")
        throw ConfigError("config key 'format' must be \"text\" or \"json\"");
    } else
      throw ConfigError("unknown config key '" + key + "'");
  }
}

nlohmann::json SuiteConfig::to_json() const {
  return {{"lmax", lmax},
          {"circle_nodes", circle_nodes},
          {"euler_nodes", euler_nodes},
          {"pairs", pairs},
          {"gate_samples", gate_samples},
          {"tol_fe", tol_fe},
          {"tol_conv", tol_conv},
          {"tol_eig", tol_eig},
          {"seed", seed},
          {"grid_q", grid_q},
          {"pbw_trials", pbw_trials},
          {"pbw_degree", pbw_degree},
          {"sym_degree", sym_degree},
          {"step", step},
          {"trunc", trunc},
          {"algebra", algebra},
          {"checks", checks},
          {"format", format}};
}

}  // namespace fll
