// fuzzy-core and topology suite checks.

#include <algorithm>

#include "fll/fuzzy_lie.hpp"
#include "fll/fuzzy_set.hpp"
#include "fll/sampling.hpp"
#include "fll/serialization.hpp"
#include "fll/topology.hpp"
#include "fll/suites.hpp"
#include "suite_checks.hpp"

namespace fll::checks {

namespace {

FiniteFuzzySet make_set(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Label, UnitValue> mu;
  for (const auto& [label, value] : entries) mu.emplace(label, parse_unit(value));
  return FiniteFuzzySet(std::move(mu));
}

FiniteFuzzySet random_set(DetRng& rng, const std::vector<Label>& universe, long q = 12) {
  std::map<Label, UnitValue> mu;
  for (const Label& s : universe) mu.emplace(s, UnitValue(Rational(rng.uniform_int(0, q), q)));
  return FiniteFuzzySet(std::move(mu));
}

bool expect(CheckReport& report, bool condition, nlohmann::json witness) {
  if (condition) return true;
  report.status = CheckStatus::Fail;
  if (report.witness.is_null()) report.witness = std::move(witness);
  return false;
}

const std::vector<Label> kAbc = {"a", "b", "c"};

/// Indiscrete-plus-constants: the family {kappa ∩ gamma} over the height
/// grid (which already contains the zero set and gamma when gamma = 1).
FuzzyTopSpace constants_space(const std::vector<Label>& universe, unsigned q) {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(universe);
  std::vector<FiniteFuzzySet> family;
  for (unsigned k = 0; k <= q; ++k)
    family.push_back(constant_intersection(UnitValue(Rational(k, q)), gamma));
  return FuzzyTopSpace(gamma, std::move(family), q);
}

/// Every grid-valued fuzzy subset of the whole carrier.
FuzzyTopSpace power_space(const std::vector<Label>& universe, unsigned q) {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(universe);
  std::vector<FiniteFuzzySet> family;
  std::vector<unsigned> levels(universe.size(), 0);
  for (;;) {
    std::map<Label, UnitValue> mu;
    for (std::size_t i = 0; i < universe.size(); ++i)
      mu.emplace(universe[i], UnitValue(Rational(levels[i], q)));
    family.emplace_back(std::move(mu));
    std::size_t pos = 0;
    while (pos < levels.size() && levels[pos] == q) levels[pos++] = 0;
    if (pos == levels.size()) break;
    ++levels[pos];
  }
  return FuzzyTopSpace(gamma, std::move(family), q);
}

}  // namespace

CheckReport fuzzy_core_oracle(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("fuzzy-core/ops-oracle");

  // whole / empty set memberships
  const auto whole = FiniteFuzzySet::whole(kAbc);
  const auto empty = FiniteFuzzySet::zero(kAbc);
  for (const auto& s : kAbc) {
    if (!expect(report, whole.membership(s) == UnitValue::one(), {{"case", "whole"}}))
      return report;
    if (!expect(report, empty.membership(s) == UnitValue::zero(), {{"case", "empty"}}))
      return report;
  }

  // membership of the piecewise axis rule
  const FuzzyLieSet axis = axis_line_fixture();
  if (!expect(report, axis.membership(rat_vec({2, 0, 0})) == UnitValue(Rational(1, 2)),
              {{"case", "axis-rule"}}))
    return report;

  // t-cuts
  const auto abc = make_set({{"a", "7/10"}, {"b", "2/5"}, {"c", "0"}});
  if (!expect(report, t_cut(abc, UnitValue(Rational(1, 2))) == std::vector<Label>{"a"},
              {{"case", "t-cut-half"}}))
    return report;
  if (!expect(report, t_cut(abc, UnitValue::zero()) == abc.universe(), {{"case", "t-cut-zero"}}))
    return report;
  const std::vector<RatPoint> small_grid = {rat_vec({1, 0, 0}), rat_vec({1, 1, 1}),
                                            rat_vec({0, 0, 0})};
  const SampledFuzzySet axis_small(3, [&axis](const RatPoint& p) { return axis.membership(p); },
                                   small_grid);
  const std::vector<RatPoint> cut_expected = {rat_vec({1, 0, 0}), rat_vec({0, 0, 0})};
  if (!expect(report, axis_small.t_cut(UnitValue(Rational(1, 2))) == cut_expected,
              {{"case", "axis-cut"}}))
    return report;

  // lattice ops on singleton universes
  const auto a3 = make_set({{"a", "3/10"}});
  const auto a8 = make_set({{"a", "4/5"}});
  if (!expect(report, fuzzy_union(a3, a8) == a8, {{"case", "union-max"}})) return report;
  const auto one_a = FiniteFuzzySet::whole({"a"});
  if (!expect(report, fuzzy_intersection(a3, one_a) == a3, {{"case", "intersection-one"}}))
    return report;
  if (!expect(report, fuzzy_complement(fuzzy_complement(abc)) == abc,
              {{"case", "complement-involution"}}))
    return report;

  // min products
  const auto a7 = make_set({{"a", "7/10"}});
  const auto x4 = make_set({{"x", "2/5"}});
  const auto prod1 = min_product<Label>({a7});
  if (!expect(report, prod1.membership({"a"}) == UnitValue(Rational(7, 10)),
              {{"case", "min-product-unary"}}))
    return report;
  const auto prod2 = min_product<Label>({a7, x4});
  if (!expect(report, prod2.membership({"a", "x"}) == UnitValue(Rational(2, 5)),
              {{"case", "min-product-pair"}}))
    return report;
  const auto prod_one = min_product<Label>({a7, FiniteFuzzySet::whole({"u"})});
  if (!expect(report, prod_one.membership({"a", "u"}) == UnitValue(Rational(7, 10)),
              {{"case", "min-product-whole"}}))
    return report;

  // Zadeh images
  const std::function<Label(const Label&)> ident = [](const Label& s) { return s; };
  if (!expect(report, zadeh_image(ident, abc) == abc, {{"case", "image-identity"}}))
    return report;
  const std::function<Label(const Label&)> to_c = [](const Label&) { return Label("c"); };
  const auto collapsed = zadeh_image(to_c, abc);
  if (!expect(report,
              collapsed.size() == 1 && collapsed.membership("c") == UnitValue(Rational(7, 10)),
              {{"case", "image-constant"}}))
    return report;

  // crisp singleton sum: {u} + {v} = {u+v}
  PointFuzzySet u_single(std::map<RatPoint, UnitValue>{{rat_vec({1, 2}), UnitValue::one()}});
  PointFuzzySet v_single(std::map<RatPoint, UnitValue>{{rat_vec({3, -1}), UnitValue::one()}});
  const auto sum = fuzzy_sum(u_single, v_single);
  if (!expect(report, sum.size() == 1 && sum.membership(rat_vec({4, 1})) == UnitValue::one(),
              {{"case", "singleton-sum"}}))
    return report;

  // scalar actions
  PointFuzzySet d(std::map<RatPoint, UnitValue>{
      {rat_vec({1, 0, 0}), UnitValue::one()},
      {rat_vec({0, 1, 0}), UnitValue(Rational(1, 2))},
  });
  if (!expect(report, scalar_mul(Rational(1), d) == d, {{"case", "scalar-identity"}}))
    return report;
  const auto doubled = scalar_mul(Rational(2), d);
  if (!expect(report, doubled.membership(rat_vec({2, 0, 0})) == UnitValue::one(),
              {{"case", "scalar-double"}}))
    return report;
  const auto collapsed0 = scalar_mul(Rational(0), d);
  if (!expect(report,
              collapsed0.size() == 1 &&
                  collapsed0.membership(rat_vec({0, 0, 0})) == UnitValue::one(),
              {{"case", "scalar-zero"}}))
    return report;

  // preimages
  const std::vector<Label> dom = {"p", "q"};
  const std::function<Label(const Label&)> swap_pq = [](const Label& s) {
    return s == "p" ? Label("q") : Label("p");
  };
  const auto pq = make_set({{"p", "1/4"}, {"q", "1"}});
  if (!expect(report, preimage(ident, pq, dom) == pq, {{"case", "preimage-identity"}}))
    return report;
  if (!expect(report,
              preimage(swap_pq, FiniteFuzzySet::whole(dom), dom) == FiniteFuzzySet::whole(dom),
              {{"case", "preimage-whole"}}))
    return report;
  // square map on coordinates: membership 9/10 at 4 pulls back to +-2
  PointFuzzySet squares(std::map<RatPoint, UnitValue>{
      {rat_vec({0}), UnitValue::zero()},
      {rat_vec({1}), UnitValue::zero()},
      {rat_vec({4}), UnitValue(Rational(9, 10))},
  });
  const std::function<RatPoint(const RatPoint&)> square = [](const RatPoint& p) {
    return RatPoint{p[0] * p[0]};
  };
  const std::vector<RatPoint> sym_dom = {rat_vec({-2}), rat_vec({-1}), rat_vec({0}),
                                         rat_vec({1}), rat_vec({2})};
  const auto pulled = preimage(square, squares, sym_dom);
  if (!expect(report,
              pulled.membership(rat_vec({2})) == UnitValue(Rational(9, 10)) &&
                  pulled.membership(rat_vec({-2})) == UnitValue(Rational(9, 10)) &&
                  pulled.membership(rat_vec({1})) == UnitValue::zero(),
              {{"case", "preimage-square"}}))
    return report;

  // direct sums against the zero complement
  const SampledFuzzySet::Rule half_axis = [](const RatPoint& p) -> UnitValue {
    if (point_is_zero(p)) return UnitValue::one();
    if (p[0] != 0 && p[1] == 0 && p[2] == 0) return UnitValue(Rational(1, 2));
    return UnitValue::zero();
  };
  const SampledFuzzySet::Rule ones = [](const RatPoint&) { return UnitValue::one(); };
  const auto split = [](const RatPoint& x) {
    return std::make_pair(x, RatPoint(x.size(), Rational(0)));
  };
  const auto ds = direct_sum_rule(half_axis, ones, split);
  for (const RatPoint& p : {rat_vec({0, 0, 0}), rat_vec({3, 0, 0}), rat_vec({1, 2, 0})})
    if (!expect(report, ds(p) == half_axis(p), {{"case", "direct-sum-zero-part"}}))
      return report;
  const auto ds_ones = direct_sum_rule(ones, ones, split);
  if (!expect(report, ds_ones(rat_vec({5, 5, 5})) == UnitValue::one(),
              {{"case", "direct-sum-ones"}}))
    return report;
  const SampledFuzzySet::Rule half = [](const RatPoint&) { return UnitValue(Rational(1, 2)); };
  if (!expect(report, direct_sum_rule(half, ones, split)(rat_vec({1, 1, 1})) ==
                          UnitValue(Rational(1, 2)),
              {{"case", "direct-sum-min"}}))
    return report;

  return report;
}

CheckReport lattice_laws(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("fuzzy-core/lattice-laws");
  const unsigned trials = 200;
  report.params["trials"] = trials;
  DetRng rng(config.seed);
  const std::vector<Label> universe = {"a", "b", "c", "d", "e"};

  for (unsigned trial = 0; trial < trials; ++trial) {
    const auto a = random_set(rng, universe);
    const auto b = random_set(rng, universe);
    const auto c = random_set(rng, universe);
    const auto law = [&](const char* name) {
      return nlohmann::json{{"law", name}, {"trial", trial}};
    };
    if (!expect(report, fuzzy_union(a, b) == fuzzy_union(b, a), law("union-comm")))
      return report;
    if (!expect(report, fuzzy_intersection(a, b) == fuzzy_intersection(b, a),
                law("intersection-comm")))
      return report;
    if (!expect(report,
                fuzzy_union(fuzzy_union(a, b), c) == fuzzy_union(a, fuzzy_union(b, c)),
                law("union-assoc")))
      return report;
    if (!expect(report,
                fuzzy_intersection(fuzzy_intersection(a, b), c) ==
                    fuzzy_intersection(a, fuzzy_intersection(b, c)),
                law("intersection-assoc")))
      return report;
    if (!expect(report, fuzzy_union(a, a) == a && fuzzy_intersection(a, a) == a,
                law("idempotence")))
      return report;
    if (!expect(report,
                fuzzy_union(a, fuzzy_intersection(a, b)) == a &&
                    fuzzy_intersection(a, fuzzy_union(a, b)) == a,
                law("absorption")))
      return report;
    if (!expect(report,
                fuzzy_complement(fuzzy_union(a, b)) ==
                    fuzzy_intersection(fuzzy_complement(a), fuzzy_complement(b)),
                law("de-morgan-union")))
      return report;
    if (!expect(report,
                fuzzy_complement(fuzzy_intersection(a, b)) ==
                    fuzzy_union(fuzzy_complement(a), fuzzy_complement(b)),
                law("de-morgan-intersection")))
      return report;
    if (!expect(report, fuzzy_complement(fuzzy_complement(a)) == a, law("involution")))
      return report;
  }
  return report;
}

CheckReport tcut_antitone(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("fuzzy-core/tcut-antitone");
  DetRng rng(config.seed + 1);
  const std::vector<Label> universe = {"a", "b", "c", "d"};
  for (unsigned trial = 0; trial < 100; ++trial) {
    const auto a = random_set(rng, universe, 8);
    for (long num2 = 0; num2 <= 8; ++num2)
      for (long num1 = num2; num1 <= 8; ++num1) {
        // t2 <= t1: the higher cut must be contained in the lower one
        const auto hi = t_cut(a, UnitValue(Rational(num1, 8)));
        const auto lo = t_cut(a, UnitValue(Rational(num2, 8)));
        if (!std::includes(lo.begin(), lo.end(), hi.begin(), hi.end())) {
          report.status = CheckStatus::Fail;
          report.witness = {{"trial", trial}, {"t1", num1}, {"t2", num2}};
          return report;
        }
      }
  }
  return report;
}

CheckReport image_preimage_properties(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("fuzzy-core/image-preimage");
  DetRng rng(config.seed + 2);
  const std::vector<Label> dom = {"a", "b", "c", "d", "e"};
  const std::vector<Label> cod = {"x", "y", "z"};
  for (unsigned trial = 0; trial < 100; ++trial) {
    std::map<Label, Label> h;
    for (const auto& s : dom) h[s] = cod[static_cast<std::size_t>(rng.uniform_int(0, 2))];
    const std::function<Label(const Label&)> hf = [&h](const Label& s) { return h.at(s); };
    const auto a = random_set(rng, dom);

    // sup bound: the image never exceeds the source's top membership
    const auto img = zadeh_image(hf, a, &cod);
    if (!expect(report, img.max_membership() <= a.max_membership(),
                {{"property", "image-sup-bound"}, {"trial", trial}}))
      return report;
    // pointwise sup oracle
    for (const auto& y : cod) {
      UnitValue sup = UnitValue::zero();
      for (const auto& s : dom)
        if (h.at(s) == y) sup = unit_max(sup, a.membership(s));
      if (!expect(report, img.membership(y) == sup,
                  {{"property", "image-sup"}, {"trial", trial}, {"y", y}}))
        return report;
    }

    // preimage distributes over union and intersection
    const auto u = random_set(rng, cod);
    const auto v = random_set(rng, cod);
    if (!expect(report,
                preimage(hf, fuzzy_union(u, v), dom) ==
                    fuzzy_union(preimage(hf, u, dom), preimage(hf, v, dom)),
                {{"property", "preimage-union"}, {"trial", trial}}))
      return report;
    if (!expect(report,
                preimage(hf, fuzzy_intersection(u, v), dom) ==
                    fuzzy_intersection(preimage(hf, u, dom), preimage(hf, v, dom)),
                {{"property", "preimage-intersection"}, {"trial", trial}}))
      return report;
  }
  return report;
}

CheckReport set_serialization_roundtrip(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("fuzzy-core/serialization-roundtrip");
  DetRng rng(config.seed + 3);
  const std::vector<Label> universe = {"a", "b", "c", "d", "e", "f"};
  for (unsigned trial = 0; trial < 50; ++trial) {
    const auto a = random_set(rng, universe, 7);
    if (!expect(report, fuzzy_set_from_json(fuzzy_set_to_json(a)) == a, {{"trial", trial}}))
      return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

CheckReport topology_axioms_pass(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("topology/axioms");
  {
    const CheckReport sub = is_fuzzy_topology(constants_space(kAbc, config.grid_q));
    if (!sub.passed()) return sub;
  }
  {
    const CheckReport sub = is_fuzzy_topology(power_space({"p", "q"}, 4));
    if (!sub.passed()) return sub;
  }

  // set semantics: a passing family keeps passing under reordering
  {
    const FuzzyTopSpace space = power_space({"p", "q"}, 2);
    std::vector<FiniteFuzzySet> shuffled = space.family();
    DetRng rng(config.seed + 4);
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1],
                shuffled[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(i) - 1))]);
    const CheckReport sub = is_fuzzy_topology(
        FuzzyTopSpace(space.carrier(), std::move(shuffled), space.grid_q()));
    if (!sub.passed()) {
      report.status = CheckStatus::Fail;
      report.witness = {{"case", "reorder-instability"}, {"detail", sub.witness}};
      return report;
    }
  }

  // a generated closure satisfies its own axioms
  {
    const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kAbc);
    const FuzzyTopSpace generated = generate_topology(
        gamma, {make_set({{"a", "1"}, {"b", "1/2"}, {"c", "0"}})}, 2);
    const CheckReport sub = is_fuzzy_topology(generated);
    if (!sub.passed()) return sub;
    report.params["generated_family_size"] = generated.family().size();
  }
  report.params["families"] = {"indiscrete-plus-constants", "grid-power", "generated"};
  return report;
}

CheckReport topology_composition(const SuiteConfig& config) {
  // continuity composes: pull the target opens back through each factor so
  // both factors are continuous by construction, then check the composite
  CheckReport report = CheckReport::pass("topology/continuity-composition");
  DetRng rng(config.seed + 5);
  const std::vector<Label> xs = {"x1", "x2"}, ys = {"y1", "y2"}, zs = {"z1", "z2"};
  const unsigned q = 2;

  const auto random_gridset = [&rng, q](const std::vector<Label>& universe) {
    std::map<Label, UnitValue> mu;
    for (const auto& s : universe)
      mu.emplace(s, UnitValue(Rational(rng.uniform_int(0, q), q)));
    return FiniteFuzzySet(std::move(mu));
  };

  for (unsigned trial = 0; trial < 20; ++trial) {
    std::map<Label, Label> f, g;
    for (const auto& x : xs) f[x] = ys[static_cast<std::size_t>(rng.uniform_int(0, 1))];
    for (const auto& y : ys) g[y] = zs[static_cast<std::size_t>(rng.uniform_int(0, 1))];

    const FiniteFuzzySet gx = FiniteFuzzySet::whole(xs);
    const FiniteFuzzySet gy = FiniteFuzzySet::whole(ys);
    const FiniteFuzzySet gz = FiniteFuzzySet::whole(zs);

    const FuzzyTopSpace tz = generate_topology(gz, {random_gridset(zs)}, q);
    const std::function<Label(const Label&)> gf = [&g](const Label& y) { return g.at(y); };
    std::vector<FiniteFuzzySet> y_base = {random_gridset(ys)};
    for (const auto& w : tz.family()) y_base.push_back(preimage(gf, w, ys));
    const FuzzyTopSpace ty = generate_topology(gy, y_base, q);
    const std::function<Label(const Label&)> ff = [&f](const Label& x) { return f.at(x); };
    std::vector<FiniteFuzzySet> x_base;
    for (const auto& v : ty.family()) x_base.push_back(preimage(ff, v, xs));
    const FuzzyTopSpace tx = generate_topology(gx, x_base, q);

    const CheckReport cf = is_fuzzy_continuous(ProperFunction(tx, ty, f));
    const CheckReport cg = is_fuzzy_continuous(ProperFunction(ty, tz, g));
    if (!expect(report, cf.passed() && cg.passed(),
                {{"case", "factor-not-continuous"}, {"trial", trial}}))
      return report;

    std::map<Label, Label> composed;
    for (const auto& x : xs) composed[x] = g.at(f.at(x));
    const CheckReport cc = is_fuzzy_continuous(ProperFunction(tx, tz, composed));
    if (!expect(report, cc.passed(),
                {{"case", "composition-broke-continuity"},
                 {"trial", trial},
                 {"detail", cc.witness}}))
      return report;
  }
  return report;
}

CheckReport topology_axioms_missing_union(const SuiteConfig& config) {
  // Two ridge sets whose union is a constant off the height grid; every
  // constant intersection is present, so the union axiom is the first to
  // break, at the leading pair.
  const std::vector<Label> universe = {"p", "q"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(universe);
  std::vector<FiniteFuzzySet> family;
  family.push_back(make_set({{"p", "13/20"}, {"q", "0"}}));
  family.push_back(make_set({{"p", "0"}, {"q", "13/20"}}));
  for (unsigned k = 0; k <= config.grid_q; ++k)
    family.push_back(
        constant_intersection(UnitValue(Rational(k, config.grid_q)), gamma));
  return is_fuzzy_topology(FuzzyTopSpace(gamma, std::move(family), config.grid_q));
}

CheckReport topology_open_base(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("topology/open-base");
  const FuzzyTopSpace space = constants_space(kAbc, config.grid_q);

  // the whole family is a base for itself
  const CheckReport self = is_open_base(space.family(), space);
  if (!self.passed()) return self;

  // the zero set alone cannot generate anything else
  const CheckReport zero_only =
      is_open_base({FiniteFuzzySet::zero(kAbc)}, space);
  if (zero_only.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "zero-base-accepted"}};
    return report;
  }

  // join-irreducible members of a small union-closed lattice
  const std::vector<Label> pq = {"p", "q"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pq);
  const FiniteFuzzySet sp = make_set({{"p", "1"}, {"q", "0"}});
  const FiniteFuzzySet sq = make_set({{"p", "0"}, {"q", "1"}});
  const FuzzyTopSpace lattice(gamma, {FiniteFuzzySet::zero(pq), sp, sq, gamma}, 1);
  const CheckReport irr = is_open_base({sp, sq}, lattice);
  if (!irr.passed()) return irr;

  return report;
}

CheckReport topology_hausdorff_pass(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("topology/hausdorff");
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kAbc);
  std::vector<FiniteFuzzySet> family = {FiniteFuzzySet::zero(kAbc)};
  for (const auto& s : kAbc) {
    std::map<Label, UnitValue> mu;
    for (const auto& t : kAbc) mu.emplace(t, s == t ? UnitValue::one() : UnitValue::zero());
    family.emplace_back(std::move(mu));
  }
  family.push_back(gamma);
  const CheckReport crisp = is_hausdorff(FuzzyTopSpace(gamma, std::move(family), 10));
  if (!crisp.passed()) return crisp;

  // one-point carriers are vacuously separated
  const FiniteFuzzySet single = FiniteFuzzySet::whole({"p"});
  const CheckReport vac =
      is_hausdorff(FuzzyTopSpace(single, {FiniteFuzzySet::zero({"p"}), single}, 10));
  if (!vac.passed()) return vac;
  return report;
}

CheckReport topology_hausdorff_indiscrete(const SuiteConfig&) {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole({"p", "q"});
  return is_hausdorff(
      FuzzyTopSpace(gamma, {FiniteFuzzySet::zero({"p", "q"}), gamma}, 10));
}

CheckReport topology_compact(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("topology/compact");
  const std::vector<Label> pq = {"p", "q"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pq);
  const FuzzyTopSpace space(
      gamma,
      {FiniteFuzzySet::zero(pq), FiniteFuzzySet::constant(pq, UnitValue(Rational(1, 2))), gamma},
      10);

  const CheckReport quarter = is_compact(space, UnitValue(Rational(1, 4)));
  if (!quarter.passed()) return quarter;
  if (quarter.params.at("minimal_subcover") != nlohmann::json::array({2})) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "quarter-subcover"},
                      {"got", quarter.params.at("minimal_subcover")}};
    return report;
  }

  const CheckReport full_eps = is_compact(space, UnitValue::one());
  if (!full_eps.passed()) return full_eps;
  if (full_eps.params.at("minimal_subcover") != nlohmann::json::array()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "eps-one-subcover"},
                      {"got", full_eps.params.at("minimal_subcover")}};
    return report;
  }
  report.params["quarter_subcover"] = quarter.params.at("minimal_subcover");
  return report;
}

CheckReport topology_separation(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("topology/separated");
  const std::vector<Label> pqr = {"p", "q", "r"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pqr);
  const FiniteFuzzySet sp = make_set({{"p", "1"}, {"q", "0"}, {"r", "0"}});
  const FiniteFuzzySet sq = make_set({{"p", "0"}, {"q", "1"}, {"r", "0"}});
  const FuzzyTopSpace space(gamma, {FiniteFuzzySet::zero(pqr), sp, sq, gamma}, 10);

  const FiniteFuzzySet two = make_set({{"p", "1"}, {"q", "1"}, {"r", "0"}});
  const CheckReport sep = is_separated(two, space);
  if (!sep.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "two-singletons-not-separated"}};
    return report;
  }

  const FuzzyTopSpace indiscrete(gamma, {FiniteFuzzySet::zero(pqr), gamma}, 10);
  const CheckReport not_sep = is_separated(sp, indiscrete);
  if (not_sep.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "indiscrete-separated"}, {"found", not_sep.witness}};
    return report;
  }
  report.params["separation"] = sep.witness;
  return report;
}

CheckReport topology_connected(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("topology/connected");
  const std::vector<Label> pq = {"p", "q"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pq);

  const FuzzyTopSpace indiscrete(gamma, {FiniteFuzzySet::zero(pq), gamma}, 10);
  const CheckReport conn = is_connected(indiscrete);
  if (!conn.passed()) return conn;

  // splitting the carrier into two open singletons disconnects it
  const FiniteFuzzySet sp = make_set({{"p", "1"}, {"q", "0"}});
  const FiniteFuzzySet sq = make_set({{"p", "0"}, {"q", "1"}});
  const FuzzyTopSpace split(gamma, {FiniteFuzzySet::zero(pq), sp, sq, gamma}, 10);
  const CheckReport disc = is_connected(split);
  if (disc.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "split-carrier-reported-connected"}};
    return report;
  }
  return report;
}

CheckReport topology_continuity(const SuiteConfig& config) {
  CheckReport report = CheckReport::pass("topology/continuity");

  // identity on a space is a homeomorphism
  const FuzzyTopSpace space = constants_space(kAbc, config.grid_q);
  std::map<Label, Label> ident;
  for (const auto& s : kAbc) ident[s] = s;
  const CheckReport homeo = is_fuzzy_homeomorphism(ProperFunction(space, space, ident));
  if (!homeo.passed()) return homeo;

  // constant map onto a point with an open singleton: continuous thanks to
  // the constants in the source, but not open (images of low constants are
  // singletons missing from the target family)
  const FuzzyTopSpace source = constants_space({"x1", "x2"}, config.grid_q);
  const std::vector<Label> ys = {"y0", "y1"};
  const FiniteFuzzySet gamma_y = FiniteFuzzySet::whole(ys);
  const FuzzyTopSpace target(
      gamma_y,
      {FiniteFuzzySet::zero(ys), make_set({{"y0", "1/2"}, {"y1", "0"}}), gamma_y},
      config.grid_q);
  const ProperFunction constant(source, target, {{"x1", "y0"}, {"x2", "y0"}});
  const CheckReport cont = is_fuzzy_continuous(constant);
  if (!cont.passed()) return cont;
  const CheckReport open = is_fuzzy_open(constant);
  if (open.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "constant-map-reported-open"}};
    return report;
  }

  // identity into a strictly finer topology is not continuous
  const std::vector<Label> pq = {"p", "q"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pq);
  const FuzzyTopSpace coarse(gamma, {FiniteFuzzySet::zero(pq), gamma}, 10);
  const FuzzyTopSpace fine(
      gamma, {FiniteFuzzySet::zero(pq), make_set({{"p", "1"}, {"q", "0"}}), gamma}, 10);
  const CheckReport finer =
      is_fuzzy_continuous(ProperFunction(coarse, fine, {{"p", "p"}, {"q", "q"}}));
  if (finer.passed()) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "finer-topology-reported-continuous"}};
    return report;
  }
  if (!witness_matches({{"open_set", 1}}, finer.witness)) {
    report.status = CheckStatus::Fail;
    report.witness = {{"case", "finer-topology-wrong-witness"}, {"got", finer.witness}};
    return report;
  }
  return report;
}

CheckReport topology_group_pass(const SuiteConfig&) {
  CheckReport report = CheckReport::pass("topology/group-compatible");

  const GroupTable z3 = GroupTable::cyclic(3);
  const FiniteFuzzySet g3 = FiniteFuzzySet::whole(z3.elements());
  const CheckReport indiscrete = is_compatible_group_topology(
      z3, FuzzyTopSpace(g3, {FiniteFuzzySet::zero(z3.elements()), g3}, 10));
  if (!indiscrete.passed()) return indiscrete;

  const GroupTable z2 = GroupTable::cyclic(2);
  const CheckReport power =
      is_compatible_group_topology(z2, power_space(z2.elements(), 2));
  if (!power.passed()) return power;

  report.params["groups"] = {"Z3-indiscrete", "Z2-power"};
  return report;
}

CheckReport topology_group_fail(const SuiteConfig&) {
  // An identity-singleton open set is not translation invariant: its
  // multiplication preimage (the antidiagonal) is not a union of products.
  const GroupTable z3 = GroupTable::cyclic(3);
  const FiniteFuzzySet g3 = FiniteFuzzySet::whole(z3.elements());
  const FiniteFuzzySet singleton = make_set({{"g0", "1"}, {"g1", "0"}, {"g2", "0"}});
  return is_compatible_group_topology(
      z3, FuzzyTopSpace(g3, {FiniteFuzzySet::zero(z3.elements()), singleton, g3}, 10));
}

}  // namespace fll::checks
