#include "fll/fuzzy_lie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fll {

namespace {

nlohmann::json point_json(const RatPoint& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : p) j.push_back(rational_str(x));
  return j;
}

nlohmann::json violation(const char* kind, const RatPoint& s, const RatPoint* t,
                         const Rational* alpha, const UnitValue& lhs, const UnitValue& rhs) {
  nlohmann::json w;
  w["kind"] = kind;
  w["s"] = point_json(s);
  if (t) w["t"] = point_json(*t);
  if (alpha) w["alpha"] = rational_str(*alpha);
  w["lhs"] = rational_str(lhs.value());
  w["rhs"] = rational_str(rhs.value());
  return w;
}

/// Additivity and scalar clauses shared by all three checkers. Returns true
/// and fills the report on the first violation, scanning in grid order.
bool subspace_violation(const FuzzyLieSet& f, CheckReport& report) {
  const auto& grid = f.set().sample_grid();
  for (const auto& s : grid)
    for (const auto& t : grid) {
      const UnitValue lhs = f.membership(point_add(s, t));
      const UnitValue rhs = unit_min(f.membership(s), f.membership(t));
      if (lhs < rhs) {
        report.status = CheckStatus::Fail;
        report.witness = violation("additivity", s, &t, nullptr, lhs, rhs);
        return true;
      }
    }
  for (const auto& alpha : f.scalar_samples())
    for (const auto& s : grid) {
      const UnitValue lhs = f.membership(point_scale(alpha, s));
      const UnitValue rhs = f.membership(s);
      if (lhs < rhs) {
        report.status = CheckStatus::Fail;
        report.witness = violation("scalar", s, nullptr, &alpha, lhs, rhs);
        return true;
      }
    }
  return false;
}

}  // namespace

FuzzyLieSet::FuzzyLieSet(const LieAlgebraSpec& algebra, SampledFuzzySet set,
                         std::vector<Rational> scalar_samples)
    : algebra_(&algebra), set_(std::move(set)), scalars_(std::move(scalar_samples)) {
  if (set_.carrier_dim() != algebra.dim())
    throw std::domain_error("fuzzy set carrier does not match the algebra dimension");
  if (scalars_.empty()) throw std::domain_error("scalar samples must be nonempty");
  for (long required : {0L, 1L, -1L})
    if (std::find(scalars_.begin(), scalars_.end(), Rational(required)) == scalars_.end())
      throw std::domain_error("scalar samples must contain 0, 1 and -1");
  std::set<RatPoint> points(set_.sample_grid().begin(), set_.sample_grid().end());
  for (const auto& p : set_.sample_grid())
    if (!points.count(point_negate(p)))
      throw std::domain_error("sample grid must be closed under negation");
}

CheckReport is_fuzzy_subspace(const FuzzyLieSet& f) {
  CheckReport report = CheckReport::pass("fuzzy-subspace/" + f.algebra().name());
  report.params["grid_size"] = f.set().sample_grid().size();
  subspace_violation(f, report);
  return report;
}

CheckReport is_fuzzy_subalgebra(const FuzzyLieSet& f) {
  CheckReport report = CheckReport::pass("fuzzy-subalgebra/" + f.algebra().name());
  report.params["grid_size"] = f.set().sample_grid().size();
  if (subspace_violation(f, report)) return report;

  const auto& grid = f.set().sample_grid();
  for (const auto& s : grid)
    for (const auto& t : grid) {
      const UnitValue lhs = f.membership(f.algebra().bracket(s, t));
      const UnitValue rhs = unit_min(f.membership(s), f.membership(t));
      if (lhs < rhs) {
        report.status = CheckStatus::Fail;
        report.witness = violation("bracket-min", s, &t, nullptr, lhs, rhs);
        return report;
      }
    }

  // cut-level cross-check: every grid-threshold cut closed under addition
  // and scalars
  std::set<UnitValue> thresholds;
  for (const auto& p : grid) thresholds.insert(f.membership(p));
  for (const UnitValue& level : thresholds) {
    std::vector<RatPoint> cut;
    for (const auto& p : grid)
      if (f.membership(p) >= level) cut.push_back(p);
    for (const auto& s : cut)
      for (const auto& t : cut) {
        const UnitValue lhs = f.membership(point_add(s, t));
        if (lhs < level) {
          report.status = CheckStatus::Fail;
          report.witness = violation("cut-additive", s, &t, nullptr, lhs, level);
          return report;
        }
      }
    for (const auto& alpha : f.scalar_samples())
      for (const auto& s : cut) {
        const UnitValue lhs = f.membership(point_scale(alpha, s));
        if (lhs < level) {
          report.status = CheckStatus::Fail;
          report.witness = violation("cut-scalar", s, nullptr, &alpha, lhs, level);
          return report;
        }
      }
  }
  return report;
}

CheckReport is_fuzzy_ideal(const FuzzyLieSet& f) {
  CheckReport report = CheckReport::pass("fuzzy-ideal/" + f.algebra().name());
  report.params["grid_size"] = f.set().sample_grid().size();
  if (subspace_violation(f, report)) return report;

  const auto& grid = f.set().sample_grid();
  for (const auto& s : grid)
    for (const auto& t : grid) {
      const RatPoint br = f.algebra().bracket(s, t);
      const UnitValue lhs = f.membership(br);
      const UnitValue rhs = f.membership(s);
      if (lhs < rhs) {
        report.status = CheckStatus::Fail;
        nlohmann::json w = violation("bracket-dominance", s, &t, nullptr, lhs, rhs);
        w["bracket"] = point_json(br);
        report.witness = w;
        return report;
      }
    }
  return report;
}

namespace {

std::vector<RatPoint> close_under_negation(std::vector<RatPoint> grid) {
  std::set<RatPoint> seen(grid.begin(), grid.end());
  const std::size_t initial = grid.size();
  for (std::size_t i = 0; i < initial; ++i) {
    RatPoint neg = point_negate(grid[i]);
    if (seen.insert(neg).second) grid.push_back(std::move(neg));
  }
  return grid;
}

}  // namespace

FuzzyLieSet axis_line_fixture() {
  const LieAlgebraSpec& algebra = LieAlgebraSpec::so3_cross();

  // Component on the cross-product part: 1 at the origin, 1/2 on the
  // punctured first axis, 0 elsewhere.
  SampledFuzzySet::Rule on_algebra = [](const RatPoint& p) -> UnitValue {
    if (point_is_zero(p)) return UnitValue::one();
    if (p[0] != 0 && p[1] == 0 && p[2] == 0) return UnitValue(Rational(1, 2));
    return UnitValue::zero();
  };
  // Component on the zero complement: constantly one.
  SampledFuzzySet::Rule on_complement = [](const RatPoint&) { return UnitValue::one(); };
  // x = x + 0 is the unique decomposition against the zero subspace.
  auto split = [](const RatPoint& x) {
    return std::make_pair(x, RatPoint(x.size(), Rational(0)));
  };
  SampledFuzzySet::Rule rule = direct_sum_rule(on_algebra, on_complement, split);

  std::vector<RatPoint> grid = {
      rat_vec({0, 0, 0}), rat_vec({1, 0, 0}),  rat_vec({-1, 0, 0}), rat_vec({2, 0, 0}),
      rat_vec({1, 1, 1}), rat_vec({0, -1, 1}), rat_vec({0, 1, 0}),  rat_vec({0, 0, 1}),
  };
  grid = close_under_negation(std::move(grid));

  std::vector<Rational> scalars = {Rational(0), Rational(1), Rational(-1), Rational(2),
                                   Rational(1, 2)};
  return FuzzyLieSet(algebra, SampledFuzzySet(3, std::move(rule), std::move(grid)),
                     std::move(scalars));
}

FuzzyLieSet heisenberg_center_fixture() {
  const LieAlgebraSpec& algebra = LieAlgebraSpec::heisenberg();
  SampledFuzzySet::Rule rule = [](const RatPoint& p) -> UnitValue {
    return (p[0] == 0 && p[1] == 0) ? UnitValue::one() : UnitValue::zero();
  };
  std::vector<RatPoint> grid = {
      rat_vec({0, 0, 0}), rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1}),
      rat_vec({1, 1, 0}), rat_vec({1, 0, 1}), rat_vec({0, 1, 1}), rat_vec({1, 1, 1}),
      rat_vec({0, 0, 2}),
  };
  grid = close_under_negation(std::move(grid));
  std::vector<Rational> scalars = {Rational(0), Rational(1), Rational(-1), Rational(3)};
  return FuzzyLieSet(algebra, SampledFuzzySet(3, std::move(rule), std::move(grid)),
                     std::move(scalars));
}

}  // namespace fll
