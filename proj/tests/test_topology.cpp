#include "doctest.h"
#include "fll/topology.hpp"

using namespace fll;

namespace {

FiniteFuzzySet set_of(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Label, UnitValue> mu;
  for (const auto& [k, v] : entries) mu.emplace(k, parse_unit(v));
  return FiniteFuzzySet(std::move(mu));
}

FuzzyTopSpace constants_space(const std::vector<Label>& universe, unsigned q) {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(universe);
  std::vector<FiniteFuzzySet> family;
  for (unsigned k = 0; k <= q; ++k)
    family.push_back(constant_intersection(UnitValue(Rational(k, q)), gamma));
  return FuzzyTopSpace(gamma, std::move(family), q);
}

const std::vector<Label> kPq = {"p", "q"};

}  // namespace

TEST_CASE("space construction validates subsets and duplicates") {
  const FiniteFuzzySet gamma = set_of({{"p", "1/2"}, {"q", "1"}});
  CHECK_THROWS_AS(FuzzyTopSpace(gamma, {set_of({{"p", "1"}, {"q", "0"}})}, 10),
                  std::domain_error);
  CHECK_THROWS_AS(FuzzyTopSpace(gamma, {gamma, gamma}, 10), std::domain_error);
}

TEST_CASE("fuzzy point containment") {
  const auto u = set_of({{"p", "1/2"}, {"q", "0"}});
  CHECK(point_in({"p", UnitValue(Rational(1, 2))}, u));
  CHECK(point_in({"p", UnitValue(Rational(1, 10))}, u));
  CHECK_FALSE(point_in({"p", UnitValue(Rational(3, 4))}, u));
  CHECK_FALSE(point_in({"q", UnitValue(Rational(1, 10))}, u));
}

TEST_CASE("topology axioms on passing families") {
  CHECK(is_fuzzy_topology(constants_space({"a", "b", "c"}, 10)).passed());

  // all grid-valued subsets of a two-point carrier
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  std::vector<FiniteFuzzySet> family;
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned j = 0; j <= 4; ++j) {
      std::map<Label, UnitValue> mu;
      mu.emplace("p", UnitValue(Rational(i, 4)));
      mu.emplace("q", UnitValue(Rational(j, 4)));
      family.emplace_back(std::move(mu));
    }
  CHECK(is_fuzzy_topology(FuzzyTopSpace(gamma, std::move(family), 4)).passed());
}

TEST_CASE("union-axiom violation carries the pair as witness") {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  std::vector<FiniteFuzzySet> family;
  family.push_back(set_of({{"p", "13/20"}, {"q", "0"}}));
  family.push_back(set_of({{"p", "0"}, {"q", "13/20"}}));
  for (unsigned k = 0; k <= 10; ++k)
    family.push_back(constant_intersection(UnitValue(Rational(k, 10)), gamma));
  const CheckReport r = is_fuzzy_topology(FuzzyTopSpace(gamma, std::move(family), 10));
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness.at("axiom") == "union");
  CHECK(r.witness.at("i") == 0);
  CHECK(r.witness.at("j") == 1);
}

TEST_CASE("constant-intersection axiom catches missing grid cuts") {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  const CheckReport r = is_fuzzy_topology(
      FuzzyTopSpace(gamma, {FiniteFuzzySet::zero(kPq), gamma}, 2));
  REQUIRE_FALSE(r.passed());
  CHECK(r.witness.at("axiom") == "constant-intersection");
}

TEST_CASE("generated topologies satisfy the axioms and contain their base") {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  const FiniteFuzzySet seed = set_of({{"p", "1"}, {"q", "1/2"}});
  const FuzzyTopSpace generated = generate_topology(gamma, {seed}, 2);
  CHECK(is_fuzzy_topology(generated).passed());
  CHECK(generated.in_family(seed));
  CHECK(generated.in_family(FiniteFuzzySet::zero(kPq)));
  CHECK(generated.in_family(gamma));
  // the base generates: representability from the seed plus constants
  CHECK(is_open_base(generated.family(), generated).passed());

  CHECK_THROWS_AS(generate_topology(gamma, {set_of({{"p", "1"}, {"q", "1"}})}, 2, 1),
                  std::length_error);
  const FiniteFuzzySet low = set_of({{"p", "1/2"}, {"q", "1/2"}});
  CHECK_THROWS_AS(generate_topology(low, {gamma}, 2), std::domain_error);
}

TEST_CASE("fail witnesses reproduce their violation in isolation") {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  std::vector<FiniteFuzzySet> family;
  family.push_back(set_of({{"p", "13/20"}, {"q", "0"}}));
  family.push_back(set_of({{"p", "0"}, {"q", "13/20"}}));
  for (unsigned k = 0; k <= 10; ++k)
    family.push_back(constant_intersection(UnitValue(Rational(k, 10)), gamma));
  const FuzzyTopSpace space(gamma, family, 10);
  const CheckReport r = is_fuzzy_topology(space);
  REQUIRE_FALSE(r.passed());
  const std::size_t i = r.witness.at("i").get<std::size_t>();
  const std::size_t j = r.witness.at("j").get<std::size_t>();
  CHECK_FALSE(space.in_family(fuzzy_union(space.family().at(i), space.family().at(j))));
}

TEST_CASE("open base representability") {
  const FuzzyTopSpace space = constants_space({"a", "b"}, 4);
  CHECK(is_open_base(space.family(), space).passed());

  const CheckReport zero_only = is_open_base({FiniteFuzzySet::zero({"a", "b"})}, space);
  CHECK_FALSE(zero_only.passed());

  const FiniteFuzzySet outsider = set_of({{"a", "1/3"}, {"b", "0"}});
  CHECK_THROWS_AS(is_open_base({outsider}, space), std::domain_error);
}

TEST_CASE("hausdorff separation") {
  // crisp singletons separate everything
  const std::vector<Label> abc = {"a", "b", "c"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(abc);
  std::vector<FiniteFuzzySet> family = {FiniteFuzzySet::zero(abc)};
  for (const auto& s : abc) {
    std::map<Label, UnitValue> mu;
    for (const auto& t : abc) mu.emplace(t, s == t ? UnitValue::one() : UnitValue::zero());
    family.emplace_back(std::move(mu));
  }
  family.push_back(gamma);
  CHECK(is_hausdorff(FuzzyTopSpace(gamma, std::move(family), 10)).passed());

  // the indiscrete family cannot separate two points
  const FiniteFuzzySet g2 = FiniteFuzzySet::whole(kPq);
  const CheckReport indiscrete =
      is_hausdorff(FuzzyTopSpace(g2, {FiniteFuzzySet::zero(kPq), g2}, 10));
  REQUIRE_FALSE(indiscrete.passed());
  CHECK(indiscrete.witness.at("x") == "p");
  CHECK(indiscrete.witness.at("y") == "q");

  // a single point is vacuously Hausdorff
  const FiniteFuzzySet g1 = FiniteFuzzySet::whole({"p"});
  CHECK(is_hausdorff(FuzzyTopSpace(g1, {FiniteFuzzySet::zero({"p"}), g1}, 10)).passed());
}

TEST_CASE("compactness reports minimal subcovers") {
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(kPq);
  const FuzzyTopSpace space(
      gamma,
      {FiniteFuzzySet::zero(kPq), FiniteFuzzySet::constant(kPq, UnitValue(Rational(1, 2))),
       gamma},
      10);

  const CheckReport quarter = is_compact(space, UnitValue(Rational(1, 4)));
  CHECK(quarter.passed());
  CHECK(quarter.params.at("minimal_subcover") == nlohmann::json::array({2}));

  const CheckReport eps_one = is_compact(space, UnitValue::one());
  CHECK(eps_one.passed());
  CHECK(eps_one.params.at("minimal_subcover") == nlohmann::json::array());

  // family size cap without covers; explicit candidate covers lift it
  std::vector<FiniteFuzzySet> big;
  for (unsigned k = 0; k <= 13; ++k)
    big.push_back(constant_intersection(UnitValue(Rational(k, 13)), gamma));
  const FuzzyTopSpace wide(gamma, std::move(big), 13);
  CHECK_THROWS_AS(is_compact(wide, UnitValue::zero()), std::length_error);

  const std::vector<std::vector<std::size_t>> covers = {{13}, {0, 5, 13}};
  const CheckReport with_covers = is_compact(wide, UnitValue(Rational(1, 2)), &covers);
  CHECK(with_covers.passed());
  CHECK(with_covers.params.at("covers_checked") == 2);
}

TEST_CASE("separation and connectedness") {
  const std::vector<Label> pqr = {"p", "q", "r"};
  const FiniteFuzzySet gamma = FiniteFuzzySet::whole(pqr);
  const FiniteFuzzySet sp = set_of({{"p", "1"}, {"q", "0"}, {"r", "0"}});
  const FiniteFuzzySet sq = set_of({{"p", "0"}, {"q", "1"}, {"r", "0"}});
  const FuzzyTopSpace space(gamma, {FiniteFuzzySet::zero(pqr), sp, sq, gamma}, 10);

  const CheckReport sep = is_separated(fuzzy_union(sp, sq), space);
  CHECK(sep.passed());
  CHECK(sep.witness.at("part_a") == 1);
  CHECK(sep.witness.at("part_b") == 2);

  const FuzzyTopSpace indiscrete(gamma, {FiniteFuzzySet::zero(pqr), gamma}, 10);
  CHECK_FALSE(is_separated(sp, indiscrete).passed());
  CHECK(is_connected(indiscrete).passed());

  const std::vector<Label> pq2 = {"p", "q"};
  const FiniteFuzzySet g2 = FiniteFuzzySet::whole(pq2);
  const FiniteFuzzySet tp = set_of({{"p", "1"}, {"q", "0"}});
  const FiniteFuzzySet tq = set_of({{"p", "0"}, {"q", "1"}});
  const FuzzyTopSpace split(g2, {FiniteFuzzySet::zero(pq2), tp, tq, g2}, 10);
  CHECK_FALSE(is_connected(split).passed());
}

TEST_CASE("proper functions validate the induced relation") {
  const FuzzyTopSpace src = constants_space(kPq, 4);
  const FuzzyTopSpace dst = constants_space({"x"}, 4);
  CHECK_NOTHROW(ProperFunction(src, dst, {{"p", "x"}, {"q", "x"}}));
  // not total
  CHECK_THROWS_AS(ProperFunction(src, dst, {{"p", "x"}}), std::domain_error);
  // leaves the target universe
  CHECK_THROWS_AS(ProperFunction(src, dst, {{"p", "x"}, {"q", "zz"}}), std::domain_error);

  // carrier bound: a full source cannot map into a half-height target point
  const FiniteFuzzySet low = set_of({{"x", "1/2"}});
  const FuzzyTopSpace lowspace(low, {FiniteFuzzySet::zero({"x"}), low}, 4);
  CHECK_THROWS_AS(ProperFunction(src, lowspace, {{"p", "x"}, {"q", "x"}}),
                  std::domain_error);
}

TEST_CASE("continuity, openness, homeomorphism") {
  const FuzzyTopSpace space = constants_space(kPq, 4);
  std::map<Label, Label> ident = {{"p", "p"}, {"q", "q"}};
  CHECK(is_fuzzy_homeomorphism(ProperFunction(space, space, ident)).passed());

  // constant map: continuous into a singleton-opened target, but images of
  // intermediate constants are not open
  const FuzzyTopSpace source = constants_space({"x1", "x2"}, 10);
  const std::vector<Label> ys = {"y0", "y1"};
  const FiniteFuzzySet gamma_y = FiniteFuzzySet::whole(ys);
  const FuzzyTopSpace target(
      gamma_y, {FiniteFuzzySet::zero(ys), set_of({{"y0", "1/2"}, {"y1", "0"}}), gamma_y}, 10);
  const ProperFunction constant(source, target, {{"x1", "y0"}, {"x2", "y0"}});
  CHECK(is_fuzzy_continuous(constant).passed());
  const CheckReport open = is_fuzzy_open(constant);
  CHECK_FALSE(open.passed());
  CHECK_FALSE(is_fuzzy_homeomorphism(constant).passed());

  // a strictly finer target breaks continuity, witness names the culprit
  const FiniteFuzzySet g2 = FiniteFuzzySet::whole(kPq);
  const FuzzyTopSpace coarse(g2, {FiniteFuzzySet::zero(kPq), g2}, 10);
  const FuzzyTopSpace fine(
      g2, {FiniteFuzzySet::zero(kPq), set_of({{"p", "1"}, {"q", "0"}}), g2}, 10);
  const CheckReport cont =
      is_fuzzy_continuous(ProperFunction(coarse, fine, {{"p", "p"}, {"q", "q"}}));
  REQUIRE_FALSE(cont.passed());
  CHECK(cont.witness.at("open_set") == 1);
}

TEST_CASE("group tables validate and support cyclic construction") {
  const GroupTable z3 = GroupTable::cyclic(3);
  CHECK(z3.identity() == "g0");
  CHECK(z3.mul("g1", "g2") == "g0");
  CHECK(z3.inverse("g1") == "g2");

  // a broken table is rejected
  std::map<std::pair<Label, Label>, Label> bad;
  for (const auto& a : {"e", "x"})
    for (const auto& b : {"e", "x"}) bad[{a, b}] = "x";
  CHECK_THROWS_AS(GroupTable({"e", "x"}, bad), std::domain_error);
}

TEST_CASE("compatible group topologies") {
  const GroupTable z3 = GroupTable::cyclic(3);
  const FiniteFuzzySet g3 = FiniteFuzzySet::whole(z3.elements());
  CHECK(is_compatible_group_topology(
            z3, FuzzyTopSpace(g3, {FiniteFuzzySet::zero(z3.elements()), g3}, 10))
            .passed());

  const FiniteFuzzySet singleton =
      set_of({{"g0", "1"}, {"g1", "0"}, {"g2", "0"}});
  const CheckReport bad = is_compatible_group_topology(
      z3, FuzzyTopSpace(g3, {FiniteFuzzySet::zero(z3.elements()), singleton, g3}, 10));
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.witness.at("map") == "multiplication");
  CHECK(bad.witness.at("open_set") == 1);
}
