#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "doctest.h"
#include "fll/config.hpp"
#include "fll/suites.hpp"

using namespace fll;

TEST_CASE("config parsing is strict and names the offending key") {
  SuiteConfig config;
  CHECK_NOTHROW(config.merge_json({{"lmax", 4}, {"seed", 7}}));
  CHECK(config.lmax == 4);
  CHECK(config.seed == 7);

  try {
    config.merge_json({{"lmaxx", 4}});
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("lmaxx") != std::string::npos);
  }
  CHECK_THROWS_AS(config.merge_json({{"euler_nodes", {32, 32}}}), ConfigError);
  CHECK_THROWS_AS(config.merge_json({{"circle_nodes", 0}}), ConfigError);
  CHECK_THROWS_AS(config.merge_json({{"tol_fe", -1.0}}), ConfigError);
  CHECK_THROWS_AS(config.merge_json({{"format", "yaml"}}), ConfigError);
  CHECK_THROWS_AS(config.merge_json(nlohmann::json::array()), ConfigError);

  // defaults are the pinned acceptance parameters
  const SuiteConfig defaults;
  CHECK(defaults.lmax == 8);
  CHECK(defaults.circle_nodes == 64);
  CHECK(defaults.euler_nodes == std::array<unsigned, 3>{32, 32, 32});
  CHECK(defaults.pairs == 200);
  CHECK(defaults.gate_samples == 10000);
  CHECK(defaults.tol_fe == 1e-10);
  CHECK(defaults.tol_conv == 1e-6);
  CHECK(defaults.tol_eig == 1e-3);
  CHECK(defaults.seed == 42);
}

TEST_CASE("registry names every cli suite") {
  const std::vector<std::string> expected = {"fuzzy-core", "topology",   "lie",  "fuzzy-lie",
                                             "pbw",        "symmetrize", "adjoint",
                                             "spherical",  "gate",       "example-2-2"};
  CHECK(suite_names() == expected);
  for (const auto& name : expected) CHECK(find_suite(name) != nullptr);
  CHECK(find_suite("bogus") == nullptr);
  CHECK_THROWS_AS(run_suites({"bogus"}, SuiteConfig{}), ConfigError);

  // every check has a runner and a unique name
  std::set<std::string> seen;
  for (const auto& suite : suite_registry())
    for (const auto& check : suite.checks) {
      CHECK(check.run != nullptr);
      CHECK(seen.insert(check.name).second);
    }
}

TEST_CASE("witness subset matching") {
  const nlohmann::json actual = {{"kind", "bracket-dominance"},
                                 {"s", {"1", "0", "0"}},
                                 {"extra", 5},
                                 {"nested", {{"a", 1}, {"b", 2}}}};
  CHECK(witness_matches({{"kind", "bracket-dominance"}}, actual));
  CHECK(witness_matches({{"nested", {{"a", 1}}}}, actual));
  CHECK_FALSE(witness_matches({{"kind", "other"}}, actual));
  CHECK_FALSE(witness_matches({{"missing", 1}}, actual));
  CHECK_FALSE(witness_matches({{"s", {"1", "0"}}}, actual));
}

TEST_CASE("expected-fail fixtures count as suite passes") {
  SuiteConfig config;
  const auto outcomes = run_suites({"example-2-2"}, config);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].report.status == CheckStatus::Pass);
  CHECK(outcomes[0].as_expected);
  CHECK(outcomes[1].report.status == CheckStatus::Fail);
  CHECK(outcomes[1].expect_fail);
  CHECK(outcomes[1].as_expected);
}

TEST_CASE("reports are byte-identical across runs with one seed") {
  SuiteConfig config;
  config.gate_samples = 500;  // keep the repeated run cheap
  const auto render = [&config]() {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& o : run_suites({"gate", "pbw"}, config))
      out.push_back(o.report.to_json(false));
    return out.dump();
  };
  CHECK(render() == render());
}

#ifdef FLL_CLI_PATH
namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FLL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string run_cli_capture(const std::string& args, int* exit_code = nullptr) {
  const std::string path = "/tmp/fll_cli_capture.txt";
  const std::string cmd =
      std::string(FLL_CLI_PATH) + " " + args + " > " + path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (exit_code) *exit_code = WEXITSTATUS(status);
  std::ifstream in(path);
  std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::remove(path.c_str());
  return out;
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run_cli("check example-2-2") == 0);
  CHECK(run_cli("check gate --format json") == 0);
  CHECK(run_cli("check bogus-suite") == 2);

  // malformed config: unknown key is a config error (exit 2)
  const std::string path = "/tmp/fll_bad_config.json";
  {
    std::ofstream out(path);
    out << "{\"lmaxx\": 3}";
  }
  CHECK(run_cli("check gate --config " + path) == 2);
  std::remove(path.c_str());

  // unparsable JSON too
  {
    std::ofstream out(path);
    out << "{nope";
  }
  CHECK(run_cli("check gate --config " + path) == 2);
  std::remove(path.c_str());

  // an unreachable tolerance makes the suite fail: exit 1
  {
    std::ofstream out(path);
    out << "{\"tol_fe\": 1e-300}";
  }
  CHECK(run_cli("check spherical --config " + path) == 1);
  std::remove(path.c_str());

  // flags from the module interfaces
  CHECK(run_cli("check pbw --algebra heisenberg --degree 4") == 0);
  CHECK(run_cli("check lie --algebra so3_cross") == 0);
  CHECK(run_cli("check pbw --algebra not-an-algebra") == 2);
}

TEST_CASE("cli unknown config key names the culprit") {
  const std::string path = "/tmp/fll_bad_key.json";
  {
    std::ofstream out(path);
    out << "{\"lmaxx\": 3}";
  }
  const std::string cmd = std::string(FLL_CLI_PATH) + " check gate --config " + path +
                          " 2> /tmp/fll_cli_err.txt >/dev/null";
  const int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 2);
  std::ifstream err("/tmp/fll_cli_err.txt");
  std::string msg((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
  CHECK(msg.find("lmaxx") != std::string::npos);
  std::remove(path.c_str());
  std::remove("/tmp/fll_cli_err.txt");
}

TEST_CASE("cli --list covers the whole registry") {
  int code = 0;
  const std::string listing = run_cli_capture("check --list", &code);
  CHECK(code == 0);
  for (const auto& suite : suite_registry()) {
    CHECK(listing.find(suite.name + ":") != std::string::npos);
    for (const auto& check : suite.checks)
      CHECK(listing.find(check.name) != std::string::npos);
  }
}

TEST_CASE("cli reports are byte-identical for one seed") {
  const std::string a = run_cli_capture("check gate --format json --seed 123");
  const std::string b = run_cli_capture("check gate --format json --seed 123");
  CHECK(a == b);
  CHECK_FALSE(a.empty());

  // FLL_SEED is honored and equals the flag route
  const std::string env_cmd = std::string("FLL_SEED=123 ") + FLL_CLI_PATH +
                              " check gate --format json > /tmp/fll_env_out.txt 2>/dev/null";
  const int env_rc = std::system(env_cmd.c_str());
  CHECK(WEXITSTATUS(env_rc) == 0);
  std::ifstream in("/tmp/fll_env_out.txt");
  std::string env_out((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  std::remove("/tmp/fll_env_out.txt");
  CHECK(env_out == a);
}
#endif
