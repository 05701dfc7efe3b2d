// Lie algebra, fuzzy Lie, PBW, symmetrization and adjoint-calculus checks.

#include <algorithm>
#include <cmath>
#include <set>

#include "fll/enveloping.hpp"
#include "fll/fuzzy_lie.hpp"
#include "fll/group_models.hpp"
#include "fll/invariant_ops.hpp"
#include "fll/lie_algebra.hpp"
#include "fll/sampling.hpp"
#include "fll/serialization.hpp"
#include "fll/spherical.hpp"
#include "fll/suites.hpp"
#include "suite_checks.hpp"

namespace fll::checks {

namespace {

const std::vector<const LieAlgebraSpec*>& builtins() {
  static const std::vector<const LieAlgebraSpec*> algebras = {
      &LieAlgebraSpec::so3_cross(), &LieAlgebraSpec::sl2(), &LieAlgebraSpec::heisenberg()};
  return algebras;
}

bool expect(CheckReport& report, bool condition, nlohmann::json witness) {
  if (condition) return true;
  report.status = CheckStatus::Fail;
  if (report.witness.is_null()) report.witness = std::move(witness);
  return false;
}

RatVec random_vec(DetRng& rng, std::size_t n, long max_num = 4, long den = 2) {
  RatVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational(max_num, den));
  return v;
}

/// Components in [-1/2, 1/2], so the euclidean norm stays below 1.
RatVec random_small_vec(DetRng& rng, std::size_t n) {
  RatVec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.rational(8, 16));
  return v;
}

Word random_word(DetRng& rng, std::size_t dim, unsigned max_len, unsigned min_len = 1) {
  const unsigned len = static_cast<unsigned>(rng.uniform_int(min_len, max_len));
  Word w(len);
  for (auto& i : w) i = static_cast<unsigned>(rng.uniform_int(0, static_cast<long>(dim) - 1));
  return w;
}

EnvElement random_env(DetRng& rng, const LieAlgebraSpec& algebra, unsigned max_deg,
                      unsigned words) {
  EnvElement out(algebra);
  for (unsigned t = 0; t < words; ++t) {
    Word w = random_word(rng, algebra.dim(), max_deg, 0);
    std::sort(w.begin(), w.end());
    Rational c = rng.rational(6, 3);
    if (c == 0) c = 1;
    out.add_term(w, c);
  }
  return out;
}

SymPoly random_sym(DetRng& rng, const LieAlgebraSpec& algebra, unsigned max_deg,
                   unsigned monomials) {
  SymPoly p(algebra);
  for (unsigned t = 0; t < monomials; ++t) {
    Exponents e(algebra.dim(), 0);
    unsigned deg = static_cast<unsigned>(rng.uniform_int(0, max_deg));
    for (unsigned d = 0; d < deg; ++d)
      e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(algebra.dim()) - 1))] += 1;
    Rational c = rng.rational(6, 3);
    if (c == 0) c = 1;
    p.add_term(e, c);
  }
  return p;
}

std::vector<double> apply_dmat(const std::vector<std::vector<double>>& m,
                               const std::vector<double>& x) {
  std::vector<double> out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  return out;
}

std::vector<double> d_bracket(const LieAlgebraSpec& algebra, const std::vector<double>& x,
                              const std::vector<double>& y) {
  const std::size_t n = algebra.dim();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out[k] += x[i] * y[j] * to_double(algebra.c(i, j, k));
  return out;
}

std::vector<double> to_dvec(const RatVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// lie
// ---------------------------------------------------------------------------

CheckReport lie_jacobi_builtins(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("lie/jacobi-builtins");
  nlohmann::json names = nlohmann::json::array();
  for (const auto* algebra : select_algebras(config.algebra)) {
    names.push_back(algebra->name());
    const CheckReport sub = jacobi_check(*algebra);
    if (!sub.passed()) return sub;
  }
  report.params["algebras"] = names;
  return report;
}

CheckReport lie_jacobi_violation(const SuiteConfig&) {
  // c[0][1][2] = c[1][0][2] = 1 breaks antisymmetry outright.
  std::vector<std::vector<std::vector<Rational>>> c(
      3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
  c[0][1][2] = 1;
  c[1][0][2] = 1;
  const LieAlgebraSpec broken("broken", {"A", "B", "C"}, c);
  return jacobi_check(broken);
}

CheckReport lie_bracket_oracle(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("lie/bracket-oracle");

  const auto& so3 = LieAlgebraSpec::so3_cross();
  if (!expect(report,
              so3.bracket(rat_vec({1, 0, 0}), rat_vec({1, 1, 1})) == rat_vec({0, -1, 1}),
              {{"case", "cross-product"}}))
    return report;
  const auto& sl2 = LieAlgebraSpec::sl2();
  if (!expect(report, sl2.bracket(rat_vec({0, 1, 0}), rat_vec({0, 0, 1})) == rat_vec({1, 0, 0}),
              {{"case", "sl2-EF"}}))
    return report;
  const auto& heis = LieAlgebraSpec::heisenberg();
  if (!expect(report,
              heis.bracket(rat_vec({1, 0, 0}), rat_vec({0, 1, 0})) == rat_vec({0, 0, 1}),
              {{"case", "heisenberg-XY"}}))
    return report;

  DetRng rng(config.seed + 10);
  for (const auto* algebra : builtins())
    for (unsigned trial = 0; trial < 50; ++trial) {
      const RatVec x = random_vec(rng, algebra->dim());
      const RatVec y = random_vec(rng, algebra->dim());
      const RatVec z = random_vec(rng, algebra->dim());
      const Rational s = rng.rational(5, 2);

      if (!expect(report, algebra->bracket(x, x) == zero_vec(algebra->dim()),
                  {{"case", "alternating"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
      RatVec anti = algebra->bracket(x, y);
      const RatVec yx = algebra->bracket(y, x);
      for (std::size_t i = 0; i < anti.size(); ++i) anti[i] += yx[i];
      if (!expect(report, anti == zero_vec(algebra->dim()),
                  {{"case", "antisymmetry"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
      // bilinearity: [x + s z, y] = [x,y] + s [z,y]
      RatVec xsz = x;
      for (std::size_t i = 0; i < x.size(); ++i) xsz[i] += s * z[i];
      RatVec rhs = algebra->bracket(x, y);
      const RatVec zy = algebra->bracket(z, y);
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += s * zy[i];
      if (!expect(report, algebra->bracket(xsz, y) == rhs,
                  {{"case", "bilinearity"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }
  return report;
}

CheckReport lie_ad_matrix(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("lie/ad-matrix");

  const auto& so3 = LieAlgebraSpec::so3_cross();
  const RatMat ad_e3 = so3.ad_matrix(rat_vec({0, 0, 1}));
  if (!expect(report, mat_apply(ad_e3, rat_vec({1, 0, 0})) == rat_vec({0, 1, 0}),
              {{"case", "rotation-generator"}}))
    return report;

  const auto& heis = LieAlgebraSpec::heisenberg();
  const RatMat ad_x = heis.ad_matrix(rat_vec({1, 0, 0}));
  unsigned nonzero = 0;
  for (const auto& row : ad_x)
    for (const auto& v : row) nonzero += (v != 0);
  if (!expect(report,
              nonzero == 1 && mat_apply(ad_x, rat_vec({0, 1, 0})) == rat_vec({0, 0, 1}),
              {{"case", "heisenberg-single-entry"}}))
    return report;

  DetRng rng(config.seed + 11);
  for (const auto* algebra : builtins()) {
    const RatMat zero = algebra->ad_matrix(zero_vec(algebra->dim()));
    for (const auto& row : zero)
      for (const auto& v : row)
        if (!expect(report, v == 0, {{"case", "ad-zero"}, {"algebra", algebra->name()}}))
          return report;
    for (unsigned trial = 0; trial < 30; ++trial) {
      const RatVec x = random_vec(rng, algebra->dim());
      const RatVec y = random_vec(rng, algebra->dim());
      if (!expect(report, mat_apply(algebra->ad_matrix(x), y) == algebra->bracket(x, y),
                  {{"case", "ad-vs-bracket"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }
  }
  return report;
}

CheckReport lie_ad_automorphism(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("lie/Ad-automorphism");
  report.params["tol"] = 1e-12;
  DetRng rng(config.seed + 12);
  double worst = 0.0;

  const auto& so3 = LieAlgebraSpec::so3_cross();
  for (unsigned trial = 0; trial < 40; ++trial) {
    const SU2Element g = random_su2(rng);
    const auto ad = su2_adjoint_matrix(g);
    const std::vector<double> x = to_dvec(random_vec(rng, 3));
    const std::vector<double> y = to_dvec(random_vec(rng, 3));
    const std::vector<double> lhs = apply_dmat(ad, d_bracket(so3, x, y));
    const std::vector<double> rhs = d_bracket(so3, apply_dmat(ad, x), apply_dmat(ad, y));
    for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  }
  report.max_error = worst;
  if (worst > 1e-12) {
    report.status = CheckStatus::Fail;
    report.witness = {{"model", "su2"}, {"deviation", worst}};
    return report;
  }

  const auto& heis = LieAlgebraSpec::heisenberg();
  for (unsigned trial = 0; trial < 40; ++trial) {
    const RatVec gc = random_vec(rng, 3);
    const HeisPoint<Rational> g{gc[0], gc[1], gc[2]};
    const auto ad = heisenberg_adjoint(g);
    const RatVec x = random_vec(rng, 3);
    const RatVec y = random_vec(rng, 3);
    const RatVec lhs = mat_apply(ad, heis.bracket(x, y));
    const RatVec rhs = heis.bracket(mat_apply(ad, x), mat_apply(ad, y));
    if (!expect(report, lhs == rhs, {{"model", "heisenberg"}, {"trial", trial}}))
      return report;
  }
  return report;
}

CheckReport lie_exp_ad(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("lie/exp-ad");
  DetRng rng(config.seed + 13);

  double worst = 0.0;
  for (unsigned trial = 0; trial < 100; ++trial) {
    const RatVec x = random_small_vec(rng, 3);
    const CheckReport sub = exp_ad_check(LieAlgebraSpec::so3_cross(), x, config.trunc, 1e-10);
    worst = std::max(worst, *sub.max_error);
    if (!sub.passed()) return sub;
  }
  report.params["su2_max_deviation"] = worst;
  report.max_error = worst;

  for (unsigned trial = 0; trial < 20; ++trial) {
    const RatVec x = random_vec(rng, 3, 16, 4);
    const CheckReport sub = exp_ad_check(LieAlgebraSpec::heisenberg(), x, 3, 0.0);
    if (!expect(report, sub.passed() && *sub.max_error == 0.0,
                {{"case", "heisenberg-exact"}, {"trial", trial}}))
      return report;
  }

  // series deviation shrinks with the truncation order
  for (unsigned trial = 0; trial < 10; ++trial) {
    const RatVec x = random_small_vec(rng, 3);
    const double d5 = *exp_ad_check(LieAlgebraSpec::so3_cross(), x, 5, 1.0).max_error;
    const double d10 = *exp_ad_check(LieAlgebraSpec::so3_cross(), x, 10, 1.0).max_error;
    const double d20 = *exp_ad_check(LieAlgebraSpec::so3_cross(), x, 20, 1.0).max_error;
    if (!expect(report, d10 <= d5 + 1e-15 && d20 <= d10 + 1e-15,
                {{"case", "monotone-truncation"},
                 {"trial", trial},
                 {"d5", d5},
                 {"d10", d10},
                 {"d20", d20}}))
      return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// fuzzy-lie
// ---------------------------------------------------------------------------

namespace {

std::vector<RatPoint> with_negations(std::vector<RatPoint> grid) {
  std::set<RatPoint> seen(grid.begin(), grid.end());
  const std::size_t initial = grid.size();
  for (std::size_t i = 0; i < initial; ++i) {
    RatPoint neg = point_negate(grid[i]);
    if (seen.insert(neg).second) grid.push_back(std::move(neg));
  }
  return grid;
}

FuzzyLieSet constant_one_set(const LieAlgebraSpec& algebra) {
  SampledFuzzySet::Rule rule = [](const RatPoint&) { return UnitValue::one(); };
  std::vector<RatPoint> grid = with_negations(
      {rat_vec({0, 0, 0}), rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1}),
       rat_vec({1, 1, 0})});
  return FuzzyLieSet(algebra, SampledFuzzySet(3, std::move(rule), std::move(grid)),
                     {Rational(0), Rational(1), Rational(-1), Rational(2)});
}

FuzzyLieSet missing_origin_indicator() {
  SampledFuzzySet::Rule rule = [](const RatPoint& p) {
    return (p[0] == 1 && p[1] == 0 && p[2] == 0) ? UnitValue::one() : UnitValue::zero();
  };
  std::vector<RatPoint> grid = with_negations({rat_vec({0, 0, 0}), rat_vec({1, 0, 0})});
  return FuzzyLieSet(LieAlgebraSpec::so3_cross(),
                     SampledFuzzySet(3, std::move(rule), std::move(grid)),
                     {Rational(0), Rational(1), Rational(-1)});
}

/// Subspace but not a subalgebra: full membership on the first axis, 3/5 on
/// the rest of the (1,2)-plane, zero elsewhere. The bracket of the two
/// in-plane generators escapes the plane.
FuzzyLieSet plane_bump_fixture() {
  SampledFuzzySet::Rule rule = [](const RatPoint& p) -> UnitValue {
    if (p[1] == 0 && p[2] == 0) return UnitValue::one();
    if (p[2] == 0) return UnitValue(Rational(3, 5));
    return UnitValue::zero();
  };
  std::vector<RatPoint> grid = with_negations(
      {rat_vec({0, 0, 0}), rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1}),
       rat_vec({1, 1, 0}), rat_vec({2, 1, 0})});
  return FuzzyLieSet(LieAlgebraSpec::so3_cross(),
                     SampledFuzzySet(3, std::move(rule), std::move(grid)),
                     {Rational(0), Rational(1), Rational(-1), Rational(2)});
}

}  // namespace

CheckReport fuzzy_lie_subspace(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("fuzzy-lie/subspace");

  for (const auto* algebra : {&LieAlgebraSpec::so3_cross(), &LieAlgebraSpec::heisenberg()}) {
    const CheckReport ones = is_fuzzy_subspace(constant_one_set(*algebra));
    if (!ones.passed()) return ones;
  }
  const CheckReport axis = is_fuzzy_subspace(axis_line_fixture());
  if (!axis.passed()) return axis;

  const CheckReport crisp = is_fuzzy_subspace(missing_origin_indicator());
  if (crisp.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "missing-origin-accepted"}};
    return report;
  }
  return report;
}

CheckReport fuzzy_lie_subalgebra(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("fuzzy-lie/subalgebra");

  const CheckReport axis = is_fuzzy_subalgebra(axis_line_fixture());
  if (!axis.passed()) return axis;
  const CheckReport ones = is_fuzzy_subalgebra(constant_one_set(LieAlgebraSpec::so3_cross()));
  if (!ones.passed()) return ones;

  const CheckReport bump = is_fuzzy_subalgebra(plane_bump_fixture());
  if (bump.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "plane-bump-accepted"}};
    return report;
  }
  if (!witness_matches({{"kind", "bracket-min"},
                        {"s", {"1", "0", "0"}},
                        {"t", {"0", "1", "0"}},
                        {"lhs", "0"},
                        {"rhs", "3/5"}},
                       bump.witness)) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "plane-bump-wrong-witness"}, {"got", bump.witness}};
    return report;
  }
  return report;
}

CheckReport fuzzy_lie_ideal_center(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("fuzzy-lie/ideal-center");
  const CheckReport center = is_fuzzy_ideal(heisenberg_center_fixture());
  if (!center.passed()) return center;
  const CheckReport ones = is_fuzzy_ideal(constant_one_set(LieAlgebraSpec::heisenberg()));
  if (!ones.passed()) return ones;
  return report;
}

CheckReport fuzzy_lie_implications(const SuiteConfig& config) {
  // ideal pass => subalgebra pass => subspace pass, on randomized membership
  // levels assigned to the origin / first axis / plane / bulk strata.
  CheckReport report = CheckReport::pass("fuzzy-lie/implication-chain");
  DetRng rng(config.seed + 20);
  unsigned ideals = 0, subalgebras = 0;

  for (unsigned trial = 0; trial < 60; ++trial) {
    const Rational v0(rng.uniform_int(0, 4), 4);
    const Rational v1(rng.uniform_int(0, 4), 4);
    const Rational v2(rng.uniform_int(0, 4), 4);
    SampledFuzzySet::Rule rule = [v0, v1, v2](const RatPoint& p) -> UnitValue {
      if (point_is_zero(p)) return UnitValue(v0);
      if (p[1] == 0 && p[2] == 0) return UnitValue(v1);
      if (p[2] == 0) return UnitValue(v2);
      return UnitValue::zero();
    };
    std::vector<RatPoint> grid = with_negations(
        {rat_vec({0, 0, 0}), rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1}),
         rat_vec({1, 1, 0}), rat_vec({1, 1, 1})});
    const FuzzyLieSet f(LieAlgebraSpec::so3_cross(),
                        SampledFuzzySet(3, std::move(rule), std::move(grid)),
                        {Rational(0), Rational(1), Rational(-1), Rational(2)});

    const bool subspace = is_fuzzy_subspace(f).passed();
    const bool subalgebra = is_fuzzy_subalgebra(f).passed();
    const bool ideal = is_fuzzy_ideal(f).passed();
    subalgebras += subalgebra;
    ideals += ideal;
    if (!expect(report, (!ideal || subalgebra) && (!subalgebra || subspace),
                {{"trial", trial},
                 {"ideal", ideal},
                 {"subalgebra", subalgebra},
                 {"subspace", subspace}}))
      return report;
  }
  report.params["ideal_passes"] = ideals;
  report.params["subalgebra_passes"] = subalgebras;
  return report;
}

// ---------------------------------------------------------------------------
// example-2-2
// ---------------------------------------------------------------------------

CheckReport example22_subalgebra(const SuiteConfig&) {
  CheckReport report = is_fuzzy_subalgebra(axis_line_fixture());
  report.name = "example-2-2/subalgebra";
  return report;
}

CheckReport example22_ideal(const SuiteConfig&) {
  const FuzzyLieSet fixture = axis_line_fixture();
  CheckReport report = is_fuzzy_ideal(fixture);
  report.name = "example-2-2/ideal";
  if (report.status == CheckStatus::Fail && report.witness.contains("s") &&
      report.witness.contains("t")) {
    // the one-sided condition and the max-form display disagree in general;
    // report both values at the witness for transparency
    const auto parse_point = [](const nlohmann::json& j) {
      RatPoint p;
      for (const auto& c : j) p.push_back(parse_rational(c.get<std::string>()));
      return p;
    };
    const UnitValue us = fixture.membership(parse_point(report.witness.at("s")));
    const UnitValue ut = fixture.membership(parse_point(report.witness.at("t")));
    report.params["max_form_rhs"] = rational_str(unit_max(us, ut).value());
  }
  return report;
}

// ---------------------------------------------------------------------------
// pbw
// ---------------------------------------------------------------------------

CheckReport pbw_normal_form_oracle(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("pbw/normal-form-oracle");

  // sl2 (order H, E, F): FE = EF - H
  const auto& sl2 = LieAlgebraSpec::sl2();
  EnvElement expected_sl2(sl2);
  expected_sl2.add_term({1, 2}, Rational(1));
  expected_sl2.add_term({0}, Rational(-1));
  if (!expect(report, EnvElement::normal_form(sl2, {2, 1}, Rational(1)) == expected_sl2,
              {{"case", "sl2-FE"}}))
    return report;

  // heisenberg: YX = XY - Z
  const auto& heis = LieAlgebraSpec::heisenberg();
  EnvElement expected_heis(heis);
  expected_heis.add_term({0, 1}, Rational(1));
  expected_heis.add_term({2}, Rational(-1));
  if (!expect(report, EnvElement::normal_form(heis, {1, 0}, Rational(1)) == expected_heis,
              {{"case", "heisenberg-YX"}}))
    return report;

  // sorted words are fixed points
  for (const auto* algebra : builtins()) {
    const Word w = {0, 0, 1, 2};
    EnvElement expected(*algebra);
    expected.add_term(w, Rational(1));
    if (!expect(report, EnvElement::normal_form(*algebra, w, Rational(1)) == expected,
                {{"case", "sorted-fixed-point"}, {"algebra", algebra->name()}}))
      return report;
  }
  return report;
}

CheckReport pbw_confluence(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("pbw/confluence");
  report.params["trials"] = config.pbw_trials;
  report.params["max_degree"] = config.pbw_degree;
  DetRng rng(config.seed + 30);

  for (const auto* algebra : select_algebras(config.algebra))
    for (unsigned trial = 0; trial < config.pbw_trials; ++trial) {
      const Word w = random_word(rng, algebra->dim(), config.pbw_degree);
      const EnvElement left =
          EnvElement::normal_form(*algebra, w, Rational(1), RewriteStrategy::LeftmostInversion);
      const EnvElement right =
          EnvElement::normal_form(*algebra, w, Rational(1), RewriteStrategy::RightmostInversion);
      if (!expect(report, left == right,
                  {{"algebra", algebra->name()}, {"trial", trial}, {"word", w}}))
        return report;
    }
  return report;
}

CheckReport pbw_env_mul(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("pbw/composition");
  DetRng rng(config.seed + 31);

  // identity element
  for (const auto* algebra : builtins())
    for (unsigned trial = 0; trial < 10; ++trial) {
      const EnvElement a = random_env(rng, *algebra, 3, 3);
      const EnvElement one = EnvElement::one(*algebra);
      if (!expect(report, one * a == a && a * one == a,
                  {{"case", "unit"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }

  // associativity on random elements
  for (const auto* algebra : builtins())
    for (unsigned trial = 0; trial < 10; ++trial) {
      const EnvElement a = random_env(rng, *algebra, 2, 2);
      const EnvElement b = random_env(rng, *algebra, 2, 2);
      const EnvElement c = random_env(rng, *algebra, 2, 2);
      if (!expect(report, (a * b) * c == a * (b * c),
                  {{"case", "associativity"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }

  // the commutator of generators reproduces the bracket: EF - FE = H
  const auto& sl2 = LieAlgebraSpec::sl2();
  const EnvElement e = EnvElement::generator(sl2, 1);
  const EnvElement f = EnvElement::generator(sl2, 2);
  if (!expect(report, e * f - f * e == EnvElement::generator(sl2, 0), {{"case", "sl2-EF-FE"}}))
    return report;

  // the heisenberg center commutes with everything
  const auto& heis = LieAlgebraSpec::heisenberg();
  const EnvElement z = EnvElement::generator(heis, 2);
  for (unsigned trial = 0; trial < 10; ++trial) {
    const EnvElement d = random_env(rng, heis, 3, 3);
    if (!expect(report, z * d == d * z, {{"case", "center"}, {"trial", trial}}))
      return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// symmetrize
// ---------------------------------------------------------------------------

CheckReport sym_powers(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("symmetrize/generator-powers");
  for (const auto* algebra : builtins())
    for (unsigned i = 0; i < algebra->dim(); ++i)
      for (unsigned m = 0; m <= 6; ++m) {
        Exponents e(algebra->dim(), 0);
        e[i] = m;
        EnvElement expected(*algebra);
        expected.add_term(Word(m, i), Rational(1));
        if (!expect(report,
                    symmetrize(SymPoly::monomial(*algebra, e, Rational(1))) == expected,
                    {{"algebra", algebra->name()}, {"generator", i}, {"power", m}}))
          return report;
      }
  return report;
}

CheckReport sym_oracle(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("symmetrize/oracle");

  // heisenberg: (XY + YX)/2 = XY - Z/2
  const auto& heis = LieAlgebraSpec::heisenberg();
  EnvElement expected_xy(heis);
  expected_xy.add_term({0, 1}, Rational(1));
  expected_xy.add_term({2}, Rational(-1, 2));
  if (!expect(report,
              symmetrize(SymPoly::monomial(heis, {1, 1, 0}, Rational(1))) == expected_xy,
              {{"case", "heisenberg-XY"}}))
    return report;

  // sl2: (HE + EH)/2 = HE - E
  const auto& sl2 = LieAlgebraSpec::sl2();
  EnvElement expected_he(sl2);
  expected_he.add_term({0, 1}, Rational(1));
  expected_he.add_term({1}, Rational(-1));
  if (!expect(report,
              symmetrize(SymPoly::monomial(sl2, {1, 1, 0}, Rational(1))) == expected_he,
              {{"case", "sl2-HE"}}))
    return report;
  return report;
}

CheckReport sym_graded_symbol(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("symmetrize/graded-symbol");
  DetRng rng(config.seed + 40);

  // scalars and low-degree sanity
  const auto& sl2 = LieAlgebraSpec::sl2();
  EnvElement ef_minus_h(sl2);
  ef_minus_h.add_term({1, 2}, Rational(1));
  ef_minus_h.add_term({0}, Rational(-1));
  SymPoly ef(sl2);
  ef.add_term({0, 1, 1}, Rational(1));
  if (!expect(report, graded_symbol(ef_minus_h) == ef, {{"case", "EF-minus-H"}}))
    return report;
  EnvElement scalar(sl2);
  scalar.add_term({}, Rational(7, 3));
  SymPoly scalar_sym(sl2);
  scalar_sym.add_term({0, 0, 0}, Rational(7, 3));
  if (!expect(report, graded_symbol(scalar) == scalar_sym, {{"case", "scalar"}}))
    return report;

  // unitriangularity: the symbol of the symmetrization is the top part
  for (const auto* algebra : builtins())
    for (unsigned trial = 0; trial < 25; ++trial) {
      const SymPoly p = random_sym(rng, *algebra, 4, 3);
      if (p.is_zero()) continue;
      const std::size_t top = p.degree();
      SymPoly top_part(*algebra);
      for (const auto& [e, c] : p.terms()) {
        unsigned deg = 0;
        for (unsigned k : e) deg += k;
        if (deg == top) top_part.add_term(e, c);
      }
      if (!expect(report, graded_symbol(symmetrize(p)) == top_part,
                  {{"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }
  return report;
}

CheckReport sym_bijectivity(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("symmetrize/bijectivity");
  nlohmann::json sizes = nlohmann::json::object();
  const auto algebras = select_algebras(config.algebra);
  for (const auto* algebra : algebras) {
    const CheckReport sub = symmetrization_bijectivity_check(*algebra, config.sym_degree);
    if (!sub.passed()) return sub;
    sizes[algebra->name()] = sub.params.at("basis_size");
  }
  report.params["basis_sizes"] = sizes;
  report.params["max_degree"] = config.sym_degree;
  // three generators, degree <= 4: C(3+4,4) = 35 monomials
  if (config.sym_degree == 4)
    for (const auto* algebra : algebras)
      if (algebra->dim() == 3 &&
          !expect(report, sizes[algebra->name()] == 35,
                  {{"case", "basis-size"}, {"algebra", algebra->name()}}))
        return report;
  return report;
}

CheckReport pbw_bijectivity(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("pbw/bijectivity");
  nlohmann::json sizes = nlohmann::json::object();
  for (const auto* algebra : select_algebras(config.algebra)) {
    const CheckReport sub = symmetrization_bijectivity_check(*algebra, config.sym_degree);
    if (!sub.passed()) return sub;
    sizes[algebra->name()] = sub.params.at("basis_size");
  }
  report.params["basis_sizes"] = sizes;
  report.params["max_degree"] = config.sym_degree;
  return report;
}

namespace {

template <class Model>
CheckReport mixed_partial_for_model(const Model& model, const ScalarFn<Model>& f,
                                    const typename Model::Element& generic,
                                    const SuiteConfig& config, const std::string& tag) {
  CheckReport report = CheckReport::pass("symmetrize/mixed-partial/" + tag);
  report.params["step"] = config.step;
  report.params["trials"] = 50;
  DetRng rng(config.seed + 41);
  const LieAlgebraSpec& algebra = model.algebra();
  double worst = 0.0;

  for (unsigned trial = 0; trial < 50; ++trial) {
    const SymPoly p = random_sym(rng, algebra, 2, 2);
    const typename Model::Element g = (trial % 2 == 0) ? model.identity() : generic;
    const double via_chart = coordinate_derivative(model, p, f, g, config.step);
    const double via_fields = apply_operator(model, symmetrize(p), f, g, config.step);
    const double rel =
        std::abs(via_chart - via_fields) /
        std::max({1.0, std::abs(via_chart), std::abs(via_fields)});
    worst = std::max(worst, rel);
    if (rel > 1e-5) {
      report.status = CheckStatus::Fail;
      report.max_error = rel;
      report.witness = {{"trial", trial},
                        {"chart", via_chart},
                        {"fields", via_fields},
                        {"relative", rel}};
      return report;
    }
  }
  report.max_error = worst;
  return report;
}

}  // namespace

CheckReport sym_mixed_partial(const SuiteConfig& config) {
  const Su2Model su2;
  const ScalarFn<Su2Model> re = [](const SU2Element& g) { return g.w; };
  CheckReport r1 = mixed_partial_for_model(su2, re, su2_exp({0.3, 0.5, -0.2}), config, "su2");
  if (!r1.passed()) return r1;

  const HeisenbergModel heis;
  const ScalarFn<HeisenbergModel> corner = [](const HeisPoint<double>& g) { return g.c; };
  CheckReport r2 = mixed_partial_for_model(heis, corner, HeisPoint<double>{0.25, -0.4, 0.7},
                                           config, "heisenberg");
  if (!r2.passed()) return r2;

  // pinned second-derivative value: the squared first generator applied to
  // the quaternion real part at the identity is -1/4 along both routes
  CheckReport report = CheckReport::pass("symmetrize/mixed-partial");
  const SymPoly x1sq = SymPoly::monomial(su2.algebra(), {2, 0, 0}, Rational(1));
  const double chart = coordinate_derivative(su2, x1sq, re, SU2Element::identity(), config.step);
  const double fields =
      apply_operator(su2, symmetrize(x1sq), re, SU2Element::identity(), config.step);
  report.params["pinned_chart"] = chart;
  report.params["pinned_fields"] = fields;
  report.max_error = std::max({r1.max_error.value_or(0.0), r2.max_error.value_or(0.0),
                               std::abs(chart + 0.25), std::abs(fields + 0.25)});
  if (std::abs(chart + 0.25) > 1e-5 || std::abs(fields + 0.25) > 1e-5) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "pinned-quarter"}, {"chart", chart}, {"fields", fields}};
  }
  return report;
}

// ---------------------------------------------------------------------------
// adjoint
// ---------------------------------------------------------------------------

CheckReport adj_derivation(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("adjoint/ad-derivation");
  DetRng rng(config.seed + 50);

  for (const auto* algebra : builtins()) {
    // scalars are killed and generators reproduce the bracket
    const RatVec x0 = random_vec(rng, algebra->dim());
    if (!expect(report, ad_operator(x0, EnvElement::one(*algebra)).is_zero(),
                {{"case", "kills-unit"}, {"algebra", algebra->name()}}))
      return report;
    const RatVec y0 = random_vec(rng, algebra->dim());
    if (!expect(report,
                ad_operator(x0, EnvElement::from_vector<Rational>(*algebra, y0)) ==
                    EnvElement::from_vector<Rational>(*algebra, algebra->bracket(x0, y0)),
                {{"case", "generators"}, {"algebra", algebra->name()}}))
      return report;

    for (unsigned trial = 0; trial < 20; ++trial) {
      const RatVec x = random_vec(rng, algebra->dim());
      const EnvElement d1 = random_env(rng, *algebra, 2, 2);
      const EnvElement d2 = random_env(rng, *algebra, 2, 2);
      const EnvElement lhs = ad_operator(x, d1 * d2);
      const EnvElement rhs = ad_operator(x, d1) * d2 + d1 * ad_operator(x, d2);
      if (!expect(report, lhs == rhs,
                  {{"case", "leibniz"}, {"algebra", algebra->name()}, {"trial", trial}}))
        return report;
    }
  }
  return report;
}

CheckReport adj_exp_automorphism(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("adjoint/exp-ad-automorphism");
  DetRng rng(config.seed + 51);

  // nilpotent case: the series terminates and the product rule is exact
  const auto& heis = LieAlgebraSpec::heisenberg();
  for (unsigned trial = 0; trial < 10; ++trial) {
    const RatVec x = random_vec(rng, 3);
    const EnvElement d1 = random_env(rng, heis, 2, 2);
    const EnvElement d2 = random_env(rng, heis, 2, 2);
    const unsigned trunc = static_cast<unsigned>((d1 * d2).degree()) + 2;
    const EnvElement lhs = exp_ad_operator(x, d1 * d2, trunc);
    const EnvElement rhs = exp_ad_operator(x, d1, trunc) * exp_ad_operator(x, d2, trunc);
    if (!expect(report, lhs == rhs, {{"case", "heisenberg-exact"}, {"trial", trial}}))
      return report;
  }

  // compact case: both sides are degree-20 truncations; the tails differ
  // below 1e-8 for directions of norm <= 1
  double worst = 0.0;
  for (unsigned trial = 0; trial < 5; ++trial) {
    const auto& so3 = LieAlgebraSpec::so3_cross();
    const RatVec x = random_small_vec(rng, 3);
    const EnvElement d1 = random_env(rng, so3, 2, 2);
    const EnvElement d2 = random_env(rng, so3, 1, 2);
    const EnvElement lhs = exp_ad_operator(x, d1 * d2, config.trunc);
    const EnvElement rhs =
        exp_ad_operator(x, d1, config.trunc) * exp_ad_operator(x, d2, config.trunc);
    const double dev = env_max_abs_diff(env_to_double(lhs), env_to_double(rhs));
    worst = std::max(worst, dev);
    if (dev > 1e-8) {
      report.status = CheckStatus::Fail;
      report.max_error = dev;
      report.witness = {{"case", "su2-product-rule"}, {"trial", trial}, {"deviation", dev}};
      return report;
    }
  }
  report.max_error = worst;
  return report;
}

CheckReport adj_group_vs_series(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("adjoint/group-vs-series");
  DetRng rng(config.seed + 52);

  // unipotent model: adjoint substitution and the terminating series agree
  // as exact rationals
  const auto& heis = LieAlgebraSpec::heisenberg();
  for (unsigned trial = 0; trial < 10; ++trial) {
    const RatVec x = random_vec(rng, 3);
    const EnvElement d = random_env(rng, heis, 3, 3);
    const HeisPoint<Rational> g = heis_exp<Rational>({x[0], x[1], x[2]});
    const EnvElement group_side = ad_group_operator(heisenberg_adjoint(g), d);
    const EnvElement series_side =
        exp_ad_operator(x, d, static_cast<unsigned>(d.degree()) + 2);
    if (!expect(report, group_side == series_side,
                {{"case", "heisenberg-exact"}, {"trial", trial}}))
      return report;
  }

  // quaternion model: floating adjoint substitution against the exact
  // rational series
  double worst = 0.0;
  for (unsigned trial = 0; trial < 10; ++trial) {
    const auto& so3 = LieAlgebraSpec::so3_cross();
    const RatVec x = random_small_vec(rng, 3);
    const EnvElement d = random_env(rng, so3, 3, 3);
    const EnvElementD group_side =
        ad_group_operator(su2_adjoint_matrix(su2_exp(to_vec3d(x))), env_to_double(d));
    const EnvElement series_side = exp_ad_operator(x, d, config.trunc);
    const double dev = env_max_abs_diff(series_side, group_side);
    worst = std::max(worst, dev);
    if (dev > 1e-9) {
      report.status = CheckStatus::Fail;
      report.max_error = dev;
      report.witness = {{"case", "su2"}, {"trial", trial}, {"deviation", dev}};
      return report;
    }
  }
  report.max_error = worst;
  report.params["trunc"] = config.trunc;
  return report;
}

CheckReport adj_vector_field_bracket(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("adjoint/vector-field-bracket");
  DetRng rng(config.seed + 53);
  double worst = 0.0;

  const Su2Model su2;
  const ScalarFn<Su2Model> re = [](const SU2Element& g) { return g.w; };
  const RatVec e1 = rat_vec({1, 0, 0});
  const RatVec e2 = rat_vec({0, 1, 0});
  for (unsigned trial = 0; trial < 5; ++trial) {
    const SU2Element g = random_su2(rng);
    const CheckReport sub = vector_field_bracket_check(su2, e1, e2, re, g, config.step, 1e-4);
    worst = std::max(worst, *sub.max_error);
    if (!sub.passed()) return sub;
  }
  for (unsigned trial = 0; trial < 5; ++trial) {
    const SU2Element g = random_su2(rng);
    const RatVec x = random_vec(rng, 3, 4, 4);
    const RatVec y = random_vec(rng, 3, 4, 4);
    const CheckReport sub = vector_field_bracket_check(su2, x, y, re, g, config.step, 1e-4);
    worst = std::max(worst, *sub.max_error);
    if (!sub.passed()) return sub;
  }

  const HeisenbergModel heis;
  const ScalarFn<HeisenbergModel> corner = [](const HeisPoint<double>& g) { return g.c; };
  for (unsigned trial = 0; trial < 5; ++trial) {
    const HeisPoint<double> g{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const CheckReport sub =
        vector_field_bracket_check(heis, rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), corner, g,
                                   config.step, 1e-6);
    worst = std::max(worst, *sub.max_error);
    if (!sub.passed()) return sub;
  }

  // collinear fields commute identically (not just within tolerance)
  const RatVec x0 = {Rational(1, 2), Rational(-1, 3), Rational(1, 4)};
  for (const Rational& k : {Rational(1), Rational(2), Rational(-3, 2)}) {
    RatVec y0(3);
    for (std::size_t i = 0; i < 3; ++i) y0[i] = k * x0[i];
    const CheckReport sub = vector_field_bracket_check(su2, x0, y0, re, random_su2(rng),
                                                       config.step, 1e-4);
    if (!sub.passed()) return sub;
    if (!expect(report, *sub.max_error == 0.0,
                {{"case", "collinear-exact-zero"},
                 {"k", rational_str(k)},
                 {"residual", *sub.max_error}}))
      return report;
  }
  const CheckReport heis_collinear = vector_field_bracket_check(
      heis, rat_vec({1, 1, 0}), rat_vec({-3, -3, 0}), corner,
      HeisPoint<double>{0.3, 0.4, -0.1}, config.step, 1e-6);
  if (!heis_collinear.passed()) return heis_collinear;
  if (!expect(report, *heis_collinear.max_error == 0.0, {{"case", "heisenberg-collinear"}}))
    return report;

  report.max_error = worst;
  return report;
}

}  // namespace fll::checks
