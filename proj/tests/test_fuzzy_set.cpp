#include <map>

#include "doctest.h"
#include "fll/fuzzy_set.hpp"
#include "fll/lie_algebra.hpp"
#include "fll/sampling.hpp"

using namespace fll;

namespace {

FiniteFuzzySet set_of(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Label, UnitValue> mu;
  for (const auto& [k, v] : entries) mu.emplace(k, parse_unit(v));
  return FiniteFuzzySet(std::move(mu));
}

}  // namespace

TEST_CASE("unit values live in [0,1]") {
  CHECK_THROWS_AS(UnitValue(Rational(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(UnitValue(Rational(11, 10)), std::domain_error);
  CHECK(UnitValue(Rational(1, 2)).value() == Rational(1, 2));
  CHECK(unit_complement(UnitValue(Rational(3, 10))) == UnitValue(Rational(7, 10)));
}

TEST_CASE("rational parsing is strict") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("membership lookups") {
  const auto a = set_of({{"a", "7/10"}, {"b", "2/5"}, {"c", "0"}});
  CHECK(a.membership("a") == UnitValue(Rational(7, 10)));
  CHECK_THROWS_AS(a.membership("zz"), std::domain_error);

  const auto whole = FiniteFuzzySet::whole({"a", "b"});
  const auto empty = FiniteFuzzySet::zero({"a", "b"});
  CHECK(whole.membership("b") == UnitValue::one());
  CHECK(empty.membership("b") == UnitValue::zero());
}

TEST_CASE("t-cut enumeration oracle") {
  const auto a = set_of({{"a", "7/10"}, {"b", "2/5"}, {"c", "0"}});
  // oracle: enumerate and compare against the threshold by hand
  CHECK(t_cut(a, UnitValue(Rational(1, 2))) == std::vector<Label>{"a"});
  CHECK(t_cut(a, UnitValue(Rational(2, 5))) == std::vector<Label>{"a", "b"});
  CHECK(t_cut(a, UnitValue::zero()) == a.universe());
}

TEST_CASE("lattice operations are pointwise and demand one universe") {
  const auto a = set_of({{"a", "3/10"}, {"b", "1"}});
  const auto b = set_of({{"a", "4/5"}, {"b", "1/2"}});
  CHECK(fuzzy_union(a, b) == set_of({{"a", "4/5"}, {"b", "1"}}));
  CHECK(fuzzy_intersection(a, b) == set_of({{"a", "3/10"}, {"b", "1/2"}}));
  CHECK(fuzzy_complement(fuzzy_complement(a)) == a);
  CHECK(fuzzy_intersection(a, FiniteFuzzySet::whole(a.universe())) == a);

  const auto other = set_of({{"x", "1"}});
  CHECK_THROWS_AS(fuzzy_union(a, other), std::domain_error);
}

TEST_CASE("relative complement clips at zero") {
  const auto gamma = set_of({{"a", "1/2"}, {"b", "1"}});
  const auto u = set_of({{"a", "3/4"}, {"b", "1/4"}});
  CHECK(relative_complement(gamma, u) == set_of({{"a", "0"}, {"b", "3/4"}}));
}

TEST_CASE("min product") {
  const auto a = set_of({{"a", "7/10"}});
  const auto x = set_of({{"x", "2/5"}});

  const auto unary = min_product<Label>({a});
  CHECK(unary.membership({"a"}) == UnitValue(Rational(7, 10)));

  const auto pair = min_product<Label>({a, x});
  CHECK(pair.size() == 1);
  CHECK(pair.membership({"a", "x"}) == UnitValue(Rational(2, 5)));

  CHECK_THROWS_AS(min_product<Label>({}), std::domain_error);

  // size cap is an error, not a truncation
  const auto big = FiniteFuzzySet::whole({"1", "2", "3", "4"});
  CHECK_THROWS_AS(min_product<Label>({big, big}, 15), std::length_error);
}

TEST_CASE("zadeh image takes fiber suprema with empty fibers at zero") {
  const auto a = set_of({{"a", "3/10"}, {"b", "9/10"}, {"c", "1/2"}});
  const std::function<Label(const Label&)> to_x = [](const Label& s) {
    return s == "c" ? Label("y") : Label("x");
  };
  const std::vector<Label> codomain = {"x", "y", "z"};
  const auto img = zadeh_image(to_x, a, &codomain);
  CHECK(img.membership("x") == UnitValue(Rational(9, 10)));  // sup over {a,b}
  CHECK(img.membership("y") == UnitValue(Rational(1, 2)));
  CHECK(img.membership("z") == UnitValue::zero());  // empty fiber

  const std::function<Label(const Label&)> ident = [](const Label& s) { return s; };
  CHECK(zadeh_image(ident, a) == a);
}

TEST_CASE("pointwise preimage") {
  const auto u = set_of({{"x", "1/4"}, {"y", "1"}});
  const std::vector<Label> dom = {"p", "q", "r"};
  const std::function<Label(const Label&)> phi = [](const Label& s) {
    return s == "p" ? Label("x") : Label("y");
  };
  const auto pre = preimage(phi, u, dom);
  CHECK(pre.membership("p") == UnitValue(Rational(1, 4)));
  CHECK(pre.membership("q") == UnitValue::one());
  CHECK(pre.membership("r") == UnitValue::one());
  CHECK(preimage(phi, FiniteFuzzySet::whole(u.universe()), dom) ==
        FiniteFuzzySet::whole(dom));
}

TEST_CASE("vector carrier: sums, scalars") {
  PointFuzzySet u(std::map<RatPoint, UnitValue>{{rat_vec({1, 2}), UnitValue::one()}});
  PointFuzzySet v(std::map<RatPoint, UnitValue>{{rat_vec({3, -1}), UnitValue::one()}});
  const auto sum = fuzzy_sum(u, v);
  CHECK(sum.size() == 1);
  CHECK(sum.membership(rat_vec({4, 1})) == UnitValue::one());

  PointFuzzySet d(std::map<RatPoint, UnitValue>{
      {rat_vec({1, 0, 0}), UnitValue::one()},
      {rat_vec({0, 1, 0}), UnitValue(Rational(1, 2))},
  });
  CHECK(scalar_mul(Rational(1), d) == d);
  CHECK(scalar_mul(Rational(2), d).membership(rat_vec({2, 0, 0})) == UnitValue::one());

  const auto collapsed = scalar_mul(Rational(0), d);
  CHECK(collapsed.size() == 1);
  // sup over all points lands at the origin
  CHECK(collapsed.membership(rat_vec({0, 0, 0})) == UnitValue::one());
}

TEST_CASE("sampled sets evaluate their rule everywhere") {
  const SampledFuzzySet s(
      2, [](const RatPoint& p) { return p[0] == p[1] ? UnitValue::one() : UnitValue::zero(); },
      {rat_vec({0, 0}), rat_vec({1, 0}), rat_vec({1, 1})});
  CHECK(s.membership(rat_vec({5, 5})) == UnitValue::one());  // off-grid is fine
  CHECK(s.t_cut(UnitValue::one()) ==
        std::vector<RatPoint>{rat_vec({0, 0}), rat_vec({1, 1})});
  CHECK_THROWS_AS(s.membership(rat_vec({1, 2, 3})), std::domain_error);
  CHECK_THROWS_AS(SampledFuzzySet(2, [](const RatPoint&) { return UnitValue::one(); }, {}),
                  std::domain_error);
}

TEST_CASE("lattice laws hold exactly on random sets") {
  DetRng rng(99);
  const std::vector<Label> universe = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 300; ++trial) {
    std::map<Label, UnitValue> ma, mb;
    for (const auto& s : universe) {
      ma.emplace(s, UnitValue(Rational(rng.uniform_int(0, 6), 6)));
      mb.emplace(s, UnitValue(Rational(rng.uniform_int(0, 6), 6)));
    }
    const FiniteFuzzySet a(std::move(ma)), b(std::move(mb));
    CHECK(fuzzy_union(a, b) == fuzzy_union(b, a));
    CHECK(fuzzy_intersection(a, fuzzy_union(a, b)) == a);
    CHECK(fuzzy_complement(fuzzy_union(a, b)) ==
          fuzzy_intersection(fuzzy_complement(a), fuzzy_complement(b)));
  }
}
