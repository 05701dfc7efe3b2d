// Spherical-function and t-cut gate checks on the compact model.

#include <cmath>

#include "fll/sampling.hpp"
#include "fll/spherical.hpp"
#include "suite_checks.hpp"

namespace fll::checks {

namespace {

bool expect(CheckReport& report, bool condition, nlohmann::json witness) {
  if (condition) return true;
  report.status = CheckStatus::Fail;
  if (report.witness.is_null()) report.witness = std::move(witness);
  return false;
}

/// Bi-invariant mixtures of low zonals with disjointly chosen weights; both
/// stay nonnegative, as the convolution fixtures require.
GroupFn mixture_f() {
  return [](const SU2Element& g) {
    return 0.5 + 0.3 * zonal(1, g) + 0.2 * zonal(2, g);
  };
}

GroupFn mixture_h() {
  return [](const SU2Element& g) {
    return 0.4 + 0.2 * zonal(1, g) + 0.4 * zonal(2, g);
  };
}

std::vector<SU2Element> random_elements(std::uint64_t seed, std::size_t count) {
  DetRng rng(seed);
  std::vector<SU2Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_su2(rng));
  return out;
}

}  // namespace

CheckReport sph_def_conditions(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("spherical/definition-conditions");
  report.params["lmax"] = config.lmax;

  // normalization at the identity is exact, including through the recurrence
  for (unsigned ell = 0; ell <= config.lmax; ++ell)
    if (!expect(report, zonal(ell, SU2Element::identity()) == 1.0,
                {{"condition", "normalization"}, {"ell", ell}}))
      return report;

  // bi-invariance under the circle subgroup
  double worst = 0.0;
  for (unsigned ell = 0; ell <= config.lmax; ++ell) {
    const CheckReport sub =
        bi_invariance_check(zonal_fn(ell), config.seed + ell, 200, 1e-12, std::to_string(ell));
    worst = std::max(worst, sub.max_error.value_or(0.0));
    if (!sub.passed()) return sub;
  }
  // a coordinate function is not bi-invariant: the checker must say so
  const GroupFn x_coord = [](const SU2Element& g) { return g.x; };
  const CheckReport not_inv = bi_invariance_check(x_coord, config.seed, 200, 1e-12, "control");
  if (not_inv.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"condition", "bi-invariance-control"}};
    return report;
  }

  // eigenfunction property of the symmetrized Casimir, with the eigenvalue
  // ladder ell(ell+1)/2 relative to degree one
  for (unsigned ell = 1; ell <= 6; ++ell) {
    const CheckReport eig = casimir_eigen_check(ell, config.step, config.tol_eig,
                                                config.tol_eig, 20, config.seed + ell);
    if (!eig.passed()) return eig;
  }
  report.max_error = worst;
  return report;
}

CheckReport sph_functional_equation(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("spherical/functional-equation");
  const CircleQuadrature quad(config.circle_nodes);
  const auto pairs = random_su2_pairs(config.seed, config.pairs);
  report.params["pairs"] = config.pairs;
  report.params["circle_nodes"] = config.circle_nodes;
  report.params["tol"] = config.tol_fe;

  double worst = 0.0;
  for (unsigned ell = 0; ell <= config.lmax; ++ell) {
    const CheckReport sub =
        functional_equation_residual(zonal_fn(ell), pairs, quad, config.tol_fe,
                                     std::to_string(ell));
    worst = std::max(worst, sub.max_error.value_or(0.0));
    if (!sub.passed()) return sub;
  }
  report.max_error = worst;

  // the squared height is not spherical; the same residual must blow past
  // 1e-2 and carry a witness pair
  const GroupFn control = [](const SU2Element& g) {
    const double h = coset_height(g);
    return h * h;
  };
  const CheckReport ctrl = functional_equation_residual(control, pairs, quad, 1e-2, "control");
  report.params["control_residual"] = ctrl.max_error.value_or(0.0);
  if (ctrl.passed() || ctrl.witness.is_null()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "non-spherical-control-slipped-through"},
                      {"residual", ctrl.max_error.value_or(0.0)}};
    return report;
  }
  return report;
}

CheckReport sph_convolution(const SuiteConfig& config) {
  const EulerQuadrature quad(config.euler_nodes[0], config.euler_nodes[1],
                             config.euler_nodes[2]);
  CheckReport report = convolution_homomorphism_check(
      mixture_f(), mixture_h(), {0, 1, 2}, quad, config.tol_conv, 1e-8, 20, config.seed);
  report.name = "spherical/convolution-homomorphism";
  report.params["euler_nodes"] = config.euler_nodes;
  return report;
}

CheckReport sph_resolution_consistency(const SuiteConfig& config) {
  // halving the Haar nodes may at most double the recorded residual bound
  CheckReport report = CheckReport::pass("spherical/resolution-consistency");
  const EulerQuadrature full(config.euler_nodes[0], config.euler_nodes[1],
                             config.euler_nodes[2]);
  const EulerQuadrature half(std::max(1u, config.euler_nodes[0] / 2),
                             std::max(1u, config.euler_nodes[1] / 2),
                             std::max(1u, config.euler_nodes[2] / 2));
  const auto bound_at = [&](const EulerQuadrature& quad) {
    const CheckReport r = convolution_homomorphism_check(
        mixture_f(), mixture_h(), {0, 1, 2}, quad, 1.0, 1.0, 1, config.seed);
    return r.params.at("residual_bound").get<double>();
  };
  const double bound_full = bound_at(full);
  const double bound_half = bound_at(half);
  report.params["bound_full"] = bound_full;
  report.params["bound_half"] = bound_half;
  report.max_error = bound_half;
  if (bound_half > 2.0 * bound_full) {
    report.status = CheckStatus::Fail;
    report.witness = {{"bound_full", bound_full}, {"bound_half", bound_half}};
  }
  return report;
}

CheckReport sph_quadrature_consistency(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("spherical/quadrature-consistency");
  const CircleQuadrature coarse(config.circle_nodes);
  const CircleQuadrature fine(2 * config.circle_nodes);
  const auto pairs = random_su2_pairs(config.seed + 7, 25);

  // doubling the circle nodes does not move the average
  double worst = 0.0;
  for (unsigned ell = 0; ell <= config.lmax; ++ell)
    for (const auto& [x, y] : pairs) {
      const GroupFn f = zonal_fn(ell);
      const double d = std::abs(k_average(f, x, y, coarse) - k_average(f, x, y, fine));
      worst = std::max(worst, d);
      if (d > 1e-12) {
        report.status = CheckStatus::Fail;
        report.max_error = d;
        report.witness = {{"case", "circle-refinement"}, {"ell", ell}, {"deviation", d}};
        return report;
      }
    }

  // orthogonality through the Haar rule: nonconstant zonals have zero mean
  const EulerQuadrature euler(config.euler_nodes[0], config.euler_nodes[1],
                              config.euler_nodes[2]);
  const GroupFn one = [](const SU2Element&) { return 1.0; };
  for (unsigned ell = 1; ell <= config.lmax; ++ell) {
    const double mean = zonal_functional(one, ell, euler);
    worst = std::max(worst, std::abs(mean));
    if (std::abs(mean) > 1e-12) {
      report.status = CheckStatus::Fail;
      report.max_error = std::abs(mean);
      report.witness = {{"case", "zonal-mean"}, {"ell", ell}, {"mean", mean}};
      return report;
    }
  }
  if (!expect(report, std::abs(euler.total_weight() - 1.0) < 1e-12,
              {{"case", "haar-total-mass"}, {"mass", euler.total_weight()}}))
    return report;
  report.max_error = worst;
  return report;
}

CheckReport gate_branches(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("gate/branches");
  const CircleQuadrature quad(config.circle_nodes);
  const auto samples = random_su2_pairs(config.seed, config.gate_samples);
  report.params["gate_samples"] = config.gate_samples;
  DetRng rng(config.seed + 8);
  const SU2Element x = random_su2(rng);
  const SU2Element y = random_su2(rng);

  // constant one: the open band (t1, t2) below 1 is never visited
  const GroupFn ones = [](const SU2Element&) { return 1.0; };
  const GateResult constant = spherical_gate(ones, x, y, 0.3, 0.7, quad, samples);
  if (!expect(report,
              constant.branch == GateResult::Branch::Product && constant.value == 1.0 &&
                  constant.functional_residual.value_or(1.0) < 1e-12,
              {{"case", "constant-product-branch"}}))
    return report;

  // affine height: the band is dense in range, so the zero branch fires and
  // the witness certifies it
  const GroupFn affine = [](const SU2Element& g) { return 0.5 * (1.0 + coset_height(g)); };
  const GateResult hit = spherical_gate(affine, x, y, 0.2, 0.8, quad, samples);
  if (!expect(report, hit.branch == GateResult::Branch::Zero && hit.value == 0.0 &&
                          hit.witness.has_value(),
              {{"case", "affine-zero-branch"}}))
    return report;
  if (hit.witness) {
    const double v = affine(su2_mul(hit.witness->u, hit.witness->v));
    if (!expect(report, v == hit.witness->value && v > 0.2 && v < 0.8,
                {{"case", "witness-reproduces"}, {"value", v}}))
      return report;
  }

  // a two-valued step misses the open band entirely
  const GroupFn step = [](const SU2Element& g) {
    return coset_height(g) >= 0.9 ? 1.0 : 0.0;
  };
  const GateResult stepped =
      spherical_gate(step, SU2Element::identity(), SU2Element::identity(), 0.25, 0.75, quad,
                     samples);
  if (!expect(report,
              stepped.branch == GateResult::Branch::Product && stepped.value == 1.0,
              {{"case", "step-product-branch"}}))
    return report;

  report.params["zero_branch_witness_value"] = hit.witness ? hit.witness->value : 0.0;
  return report;
}

CheckReport gate_tcut_nesting(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("gate/tcut-nesting");
  const auto samples = random_elements(config.seed + 9, config.gate_samples);
  const std::vector<double> thresholds = {0.25, 0.5, 0.75};

  const GroupFn affine = [](const SU2Element& g) { return 0.5 * (1.0 + coset_height(g)); };
  const CheckReport nested = tcut_nesting_check(affine, thresholds, samples);
  if (!nested.passed()) return nested;
  const auto& sizes = nested.params.at("cut_sizes");
  if (!expect(report,
              sizes[0].get<std::size_t>() > sizes[1].get<std::size_t>() &&
                  sizes[1].get<std::size_t>() > sizes[2].get<std::size_t>() &&
                  sizes[2].get<std::size_t>() > 0,
              {{"case", "strict-nesting"}, {"sizes", sizes}}))
    return report;
  report.params["affine_cut_sizes"] = sizes;

  // constant functions: everything below the value, nothing above
  const GroupFn constant = [](const SU2Element&) { return 0.6; };
  const CheckReport const_nested = tcut_nesting_check(constant, thresholds, samples);
  if (!const_nested.passed()) return const_nested;
  const auto& csizes = const_nested.params.at("cut_sizes");
  if (!expect(report,
              csizes[0].get<std::size_t>() == samples.size() &&
                  csizes[1].get<std::size_t>() == samples.size() &&
                  csizes[2].get<std::size_t>() == 0,
              {{"case", "constant-cuts"}, {"sizes", csizes}}))
    return report;

  // arbitrary function: nesting is definitional
  const GroupFn wiggly = [](const SU2Element& g) {
    return 0.5 + 0.5 * std::sin(3.0 * coset_height(g)) * g.w * g.w;
  };
  const CheckReport any_nested = tcut_nesting_check(wiggly, thresholds, samples);
  if (!any_nested.passed()) return any_nested;
  return report;
}

}  // namespace fll::checks
