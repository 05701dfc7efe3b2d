// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fll/config.hpp"
#include "fll/report.hpp"
#include "fll/suites.hpp"

namespace {

using fll::CheckReport;
using fll::CheckStatus;
using fll::SuiteConfig;
using fll::SuiteOutcome;

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string& detail)> run;
};

const fll::CheckSpec* find_check(const std::string& name) {
  for (const auto& suite : fll::suite_registry())
    for (const auto& check : suite.checks)
      if (check.name == name) return &check;
  return nullptr;
}

/// Runs a registered check under the default (pinned) configuration and
/// demands the outcome the registry declares for it.
bool run_registered(const std::string& name, std::string& detail,
                    const SuiteConfig& config) {
  const fll::CheckSpec* spec = find_check(name);
  if (!spec) {
    detail += name + ": not registered; ";
    return false;
  }
  CheckReport report;
  try {
    report = spec->run(config);
  } catch (const std::exception& e) {
    detail += name + ": exception " + e.what() + "; ";
    return false;
  }
  bool ok;
  if (spec->expect_fail)
    ok = report.status == CheckStatus::Fail &&
         fll::witness_matches(spec->expected_witness, report.witness);
  else
    ok = report.status == CheckStatus::Pass;
  if (!ok) {
    detail += name + ": " + fll::to_string(report.status);
    if (!report.witness.is_null()) detail += " " + report.witness.dump();
    detail += "; ";
  } else if (report.max_error) {
    detail += name + " max_err=" + std::to_string(*report.max_error) + "; ";
  }
  return ok;
}

bool run_all(const std::vector<std::string>& names, std::string& detail,
             const SuiteConfig& config) {
  bool ok = true;
  for (const auto& n : names) ok = run_registered(n, detail, config) && ok;
  return ok;
}

}  // namespace

int main() {
  const SuiteConfig config;  // defaults are the pinned acceptance parameters

  std::vector<Criterion> criteria = {
      {1, "cross-product fixture: subalgebra passes, ideal fails with the exact witness", 1.0,
       [&](std::string& d) {
         if (!run_all({"example-2-2/subalgebra", "example-2-2/ideal"}, d, config)) return false;
         // exact rational strings of the pinned witness
         const CheckReport ideal = find_check("example-2-2/ideal")->run(config);
         const auto& w = ideal.witness;
         return w.at("s") == nlohmann::json({"1", "0", "0"}) &&
                w.at("t") == nlohmann::json({"1", "1", "1"}) &&
                w.at("bracket") == nlohmann::json({"0", "-1", "1"}) && w.at("lhs") == "0" &&
                w.at("rhs") == "1/2";
       }},
      {2, "PBW straightening is confluent across rewrite strategies", 10.0,
       [&](std::string& d) { return run_registered("pbw/confluence", d, config); }},
      {3, "symmetrization is a filtration-unitriangular bijection", 10.0,
       [&](std::string& d) {
         if (!run_all({"symmetrize/bijectivity", "symmetrize/generator-powers"}, d, config))
           return false;
         const CheckReport r = find_check("symmetrize/bijectivity")->run(config);
         const auto sizes = r.params.at("basis_sizes");
         return sizes.at("so3_cross") == 35 && sizes.at("sl2") == 35 &&
                sizes.at("heisenberg") == 35;
       }},
      {4, "Ad(exp X) agrees with the exp(ad X) series on vectors and operators", 10.0,
       [&](std::string& d) {
         return run_all({"lie/exp-ad", "adjoint/group-vs-series"}, d, config);
       }},
      {5, "exp(ad X) is an automorphism and ad X a derivation", 10.0,
       [&](std::string& d) {
         return run_all({"adjoint/exp-ad-automorphism", "adjoint/ad-derivation"}, d, config);
       }},
      {6, "coordinate-chart derivatives match composed invariant fields", 30.0,
       [&](std::string& d) { return run_registered("symmetrize/mixed-partial", d, config); }},
      {7, "circle-average functional equation holds exactly for zonals only", 5.0,
       [&](std::string& d) { return run_registered("spherical/functional-equation", d, config); }},
      {8, "zonal functionals are multiplicative under convolution", 60.0,
       [&](std::string& d) {
         return run_registered("spherical/convolution-homomorphism", d, config);
       }},
      {9, "zonals satisfy the spherical definition: normalization, invariance, eigenvalues",
       30.0,
       [&](std::string& d) { return run_registered("spherical/definition-conditions", d, config); }},
      {10, "field commutators equal bracket fields; collinear fields commute exactly", 10.0,
       [&](std::string& d) {
         return run_registered("adjoint/vector-field-bracket", d, config);
       }},
      {11, "threshold gate branches and exact t-cut nesting", 5.0,
       [&](std::string& d) {
         return run_all({"gate/branches", "gate/tcut-nesting"}, d, config);
       }},
      {12, "fuzzy topology axioms, union witness, compatible group topology", 5.0,
       [&](std::string& d) {
         return run_all({"topology/axioms", "topology/axioms-missing-union",
                         "topology/group-compatible"},
                        d, config);
       }},
  };

  int failures = 0;
  double total = 0.0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    if (seconds > criterion.budget_seconds) {
      ok = false;
      detail += "over time budget (" + std::to_string(seconds) + "s > " +
                std::to_string(criterion.budget_seconds) + "s); ";
    }
    if (!ok) ++failures;
    std::printf("criterion %02d [%s] %s (%.2fs)\n", criterion.id, ok ? "pass" : "FAIL",
                criterion.title.c_str(), seconds);
    if (!ok && !detail.empty()) std::printf("             %s\n", detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed in %.1fs\n", criteria.size() - failures,
              criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
