// fll: verification CLI. `fll check <suite>` runs the named suites against
// the merged configuration and emits machine-readable reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fll/config.hpp"
#include "fll/serialization.hpp"
#include "fll/suites.hpp"
#include "json.hpp"

namespace {

struct CheckFlags {
  std::string algebra;
  unsigned degree = 0;
  unsigned lmax = 0;
};

int run_check(const std::vector<std::string>& suites, const std::string& config_path,
              const std::string& format_flag, bool list_only, bool timings,
              const std::string& seed_flag, const CheckFlags& flags) {
  fll::SuiteConfig config;

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file '" << config_path << "'\n";
      return 2;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "error: config parse failure: " << e.what() << "\n";
      return 2;
    }
    config.merge_json(j);
  }

  // precedence: defaults < config file < FLL_SEED < --seed
  if (const char* env_seed = std::getenv("FLL_SEED")) {
    try {
      config.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: FLL_SEED is not an integer\n";
      return 2;
    }
  }
  if (!seed_flag.empty()) {
    try {
      config.seed = std::stoull(seed_flag);
    } catch (const std::exception&) {
      std::cerr << "error: --seed is not an integer\n";
      return 2;
    }
  }
  if (!format_flag.empty()) config.format = format_flag;
  if (!flags.algebra.empty()) {
    config.algebra = flags.algebra;
    fll::select_algebras(config.algebra);  // fail fast on a bad selector
  }
  if (flags.degree > 0) {
    config.pbw_degree = flags.degree;
    config.sym_degree = flags.degree;
  }
  if (flags.lmax > 0) config.lmax = flags.lmax;

  if (list_only) {
    for (const auto& suite : fll::suite_registry()) {
      std::cout << suite.name << ": " << suite.description << "\n";
      for (const auto& check : suite.checks)
        std::cout << "  " << check.name << (check.expect_fail ? " [expected-fail]" : "")
                  << "\n";
    }
    return 0;
  }

  std::vector<std::string> selected = suites;
  if (selected.empty()) selected = config.checks;

  const auto outcomes = fll::run_suites(selected, config);

  bool ok = true;
  if (config.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& o : outcomes) {
      nlohmann::json j = o.report.to_json(timings);
      j["expected_fail"] = o.expect_fail;
      j["as_expected"] = o.as_expected;
      out.push_back(std::move(j));
      ok = ok && o.as_expected;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) {
      std::cout << o.report.name << " " << fll::to_string(o.report.status);
      if (o.report.max_error) std::cout << " " << *o.report.max_error;
      if (o.expect_fail) std::cout << (o.as_expected ? " (expected)" : " (UNEXPECTED)");
      if (timings) std::cout << " [" << o.report.duration_ms << " ms]";
      std::cout << "\n";
      ok = ok && o.as_expected;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy Lie theory verification toolkit"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run verification suites");
  std::vector<std::string> suites;
  std::string config_path, format, seed;
  bool list_only = false, timings = false;
  CheckFlags flags;
  check->add_option("suite", suites,
                    "suite names (fuzzy-core, topology, lie, fuzzy-lie, pbw, symmetrize, "
                    "adjoint, spherical, gate, example-2-2, all)");
  check->add_option("--config", config_path, "JSON config merged over the defaults");
  check->add_option("--format", format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--seed", seed, "seed override (also FLL_SEED)");
  check->add_option("--algebra", flags.algebra,
                    "restrict algebra-generic checks to a built-in name or an algebra "
                    "JSON file");
  check->add_option("--degree", flags.degree,
                    "degree bound for straightening/bijectivity checks");
  check->add_option("--lmax", flags.lmax, "largest zonal degree for the spherical checks");
  check->add_flag("--list", list_only, "list registered suites and checks");
  check->add_flag("--timings", timings, "include durations in the output");

  CLI11_PARSE(app, argc, argv);

  try {
    return run_check(suites, config_path, format, list_only, timings, seed, flags);
  } catch (const fll::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
