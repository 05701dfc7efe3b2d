#include "fll/suites.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "suite_checks.hpp"

namespace fll {

namespace {

CheckSpec simple(std::string name, CheckReport (*fn)(const SuiteConfig&)) {
  CheckSpec spec;
  spec.name = std::move(name);
  spec.run = fn;
  return spec;
}

CheckSpec expected_fail(std::string name, nlohmann::json witness,
                        CheckReport (*fn)(const SuiteConfig&)) {
  CheckSpec spec;
  spec.name = std::move(name);
  spec.expect_fail = true;
  spec.expected_witness = std::move(witness);
  spec.run = fn;
  return spec;
}

std::vector<SuiteSpec> build_registry() {
  std::vector<SuiteSpec> suites;

  suites.push_back(
      {"fuzzy-core",
       "exact fuzzy-set algebra: lattice laws, cuts, images, serialization",
       {
           simple("fuzzy-core/ops-oracle", checks::fuzzy_core_oracle),
           simple("fuzzy-core/lattice-laws", checks::lattice_laws),
           simple("fuzzy-core/tcut-antitone", checks::tcut_antitone),
           simple("fuzzy-core/image-preimage", checks::image_preimage_properties),
           simple("fuzzy-core/serialization-roundtrip", checks::set_serialization_roundtrip),
       }});

  suites.push_back(
      {"topology",
       "decidable fuzzy-topology predicates on finite carriers",
       {
           simple("topology/axioms", checks::topology_axioms_pass),
           expected_fail("topology/axioms-missing-union",
                         {{"axiom", "union"}, {"i", 0}, {"j", 1}},
                         checks::topology_axioms_missing_union),
           simple("topology/open-base", checks::topology_open_base),
           simple("topology/hausdorff", checks::topology_hausdorff_pass),
           expected_fail("topology/hausdorff-indiscrete", {{"x", "p"}, {"y", "q"}},
                         checks::topology_hausdorff_indiscrete),
           simple("topology/compact", checks::topology_compact),
           simple("topology/separated", checks::topology_separation),
           simple("topology/connected", checks::topology_connected),
           simple("topology/continuity", checks::topology_continuity),
           simple("topology/continuity-composition", checks::topology_composition),
           simple("topology/group-compatible", checks::topology_group_pass),
           expected_fail("topology/group-singleton",
                         {{"map", "multiplication"}, {"open_set", 1}},
                         checks::topology_group_fail),
       }});

  suites.push_back({"lie",
                    "structure constants, brackets, Jacobi, Ad/ad calculus",
                    {
                        simple("lie/jacobi-builtins", checks::lie_jacobi_builtins),
                        expected_fail("lie/jacobi-violation", {{"axiom", "antisymmetry"}},
                                      checks::lie_jacobi_violation),
                        simple("lie/bracket-oracle", checks::lie_bracket_oracle),
                        simple("lie/ad-matrix", checks::lie_ad_matrix),
                        simple("lie/Ad-automorphism", checks::lie_ad_automorphism),
                        simple("lie/exp-ad", checks::lie_exp_ad),
                    }});

  suites.push_back({"fuzzy-lie",
                    "fuzzy subspace / subalgebra / ideal checkers",
                    {
                        simple("fuzzy-lie/subspace", checks::fuzzy_lie_subspace),
                        simple("fuzzy-lie/subalgebra", checks::fuzzy_lie_subalgebra),
                        simple("fuzzy-lie/ideal-center", checks::fuzzy_lie_ideal_center),
                        simple("fuzzy-lie/implication-chain", checks::fuzzy_lie_implications),
                    }});

  suites.push_back({"pbw",
                    "enveloping-algebra normal forms and composition",
                    {
                        simple("pbw/normal-form-oracle", checks::pbw_normal_form_oracle),
                        simple("pbw/confluence", checks::pbw_confluence),
                        simple("pbw/composition", checks::pbw_env_mul),
                        simple("pbw/bijectivity", checks::pbw_bijectivity),
                    }});

  suites.push_back(
      {"symmetrize",
       "the symmetrization bijection and its coordinate-chart contract",
       {
           simple("symmetrize/generator-powers", checks::sym_powers),
           simple("symmetrize/oracle", checks::sym_oracle),
           simple("symmetrize/graded-symbol", checks::sym_graded_symbol),
           simple("symmetrize/bijectivity", checks::sym_bijectivity),
           simple("symmetrize/mixed-partial", checks::sym_mixed_partial),
       }});

  suites.push_back(
      {"adjoint",
       "operator-level Ad/ad: derivation, automorphism, bracket identity",
       {
           simple("adjoint/ad-derivation", checks::adj_derivation),
           simple("adjoint/exp-ad-automorphism", checks::adj_exp_automorphism),
           simple("adjoint/group-vs-series", checks::adj_group_vs_series),
           simple("adjoint/vector-field-bracket", checks::adj_vector_field_bracket),
       }});

  suites.push_back(
      {"spherical",
       "zonal spherical functions: functional equation, convolution, eigenvalues",
       {
           simple("spherical/definition-conditions", checks::sph_def_conditions),
           simple("spherical/functional-equation", checks::sph_functional_equation),
           simple("spherical/convolution-homomorphism", checks::sph_convolution),
           simple("spherical/resolution-consistency", checks::sph_resolution_consistency),
           simple("spherical/quadrature-consistency", checks::sph_quadrature_consistency),
       }});

  suites.push_back({"gate",
                    "threshold-gated circle average and t-cut nesting",
                    {
                        simple("gate/branches", checks::gate_branches),
                        simple("gate/tcut-nesting", checks::gate_tcut_nesting),
                    }});

  suites.push_back(
      {"example-2-2",
       "the cross-product fixture: subalgebra yes, ideal no",
       {
           simple("example-2-2/subalgebra", checks::example22_subalgebra),
           expected_fail("example-2-2/ideal",
                         {{"kind", "bracket-dominance"},
                          {"s", {"1", "0", "0"}},
                          {"t", {"1", "1", "1"}},
                          {"bracket", {"0", "-1", "1"}},
                          {"lhs", "0"},
                          {"rhs", "1/2"}},
                         checks::example22_ideal),
       }});

  return suites;
}

}  // namespace

const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> registry = build_registry();
  return registry;
}

const SuiteSpec* find_suite(const std::string& name) {
  for (const auto& suite : suite_registry())
    if (suite.name == name) return &suite;
  return nullptr;
}

bool witness_matches(const nlohmann::json& expected, const nlohmann::json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [key, value] : expected.items()) {
      if (!actual.contains(key)) return false;
      if (!witness_matches(value, actual.at(key))) return false;
    }
    return true;
  }
  return expected == actual;
}

std::vector<SuiteOutcome> run_suite(const SuiteSpec& suite, const SuiteConfig& config) {
  std::vector<SuiteOutcome> outcomes;
  outcomes.reserve(suite.checks.size());
  for (const CheckSpec& check : suite.checks) {
    SuiteOutcome outcome;
    outcome.expect_fail = check.expect_fail;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome.report = check.run(config);
    } catch (const std::exception& e) {
      outcome.report = CheckReport::pass(check.name);
      outcome.report.status = CheckStatus::Error;
      outcome.report.witness = {{"exception", e.what()}};
    }
    outcome.report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
    outcome.report.name = check.name;
    if (check.expect_fail)
      outcome.as_expected = outcome.report.status == CheckStatus::Fail &&
                            witness_matches(check.expected_witness, outcome.report.witness);
    else
      outcome.as_expected = outcome.report.status == CheckStatus::Pass;
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

std::vector<SuiteOutcome> run_suites(const std::vector<std::string>& names,
                                     const SuiteConfig& config) {
  std::vector<std::string> wanted = names;
  if (wanted.empty()) wanted = {"all"};
  bool all = false;
  for (const auto& n : wanted) {
    if (n == "all") {
      all = true;
      continue;
    }
    if (!find_suite(n)) throw ConfigError("unknown check suite '" + n + "'");
  }
  std::vector<SuiteOutcome> outcomes;
  for (const SuiteSpec& suite : suite_registry()) {
    const bool selected =
        all || std::find(wanted.begin(), wanted.end(), suite.name) != wanted.end();
    if (!selected) continue;
    auto batch = run_suite(suite, config);
    for (auto& o : batch) outcomes.push_back(std::move(o));
  }
  return outcomes;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& suite : suite_registry()) names.push_back(suite.name);
  return names;
}

}  // namespace fll
