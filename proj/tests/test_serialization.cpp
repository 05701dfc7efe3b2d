#include "doctest.h"
#include "fll/fuzzy_lie.hpp"
#include "fll/serialization.hpp"

using namespace fll;

TEST_CASE("fuzzy set json schema") {
  const nlohmann::json j = {{"universe", {"a", "b"}},
                            {"membership", {{"a", "1/2"}, {"b", "1"}}}};
  const FiniteFuzzySet s = fuzzy_set_from_json(j);
  CHECK(s.membership("a") == UnitValue(Rational(1, 2)));
  CHECK(s.membership("b") == UnitValue::one());
  CHECK(fuzzy_set_from_json(fuzzy_set_to_json(s)) == s);

  CHECK_THROWS_AS(fuzzy_set_from_json({{"universe", {"a"}}, {"membership", {{"a", "1/2"}}},
                                       {"extra", 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_set_from_json({{"universe", {"a"}},
                                       {"membership", nlohmann::json::object()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_set_from_json({{"universe", {"a"}},
                                       {"membership", {{"a", "1/2"}, {"b", "1"}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_set_from_json({{"universe", {"a"}}, {"membership", {{"a", "3/2"}}}}),
                  std::domain_error);
}

TEST_CASE("space json schema") {
  const nlohmann::json j = {
      {"carrier", {{"universe", {"p", "q"}}, {"membership", {{"p", "1"}, {"q", "1"}}}}},
      {"family",
       {{{"universe", {"p", "q"}}, {"membership", {{"p", "0"}, {"q", "0"}}}},
        {{"universe", {"p", "q"}}, {"membership", {{"p", "1"}, {"q", "1"}}}}}},
      {"grid_q", 5}};
  const FuzzyTopSpace space = space_from_json(j);
  CHECK(space.family().size() == 2);
  CHECK(space.grid_q() == 5);
  CHECK(space_from_json(space_to_json(space)).family().size() == 2);
}

TEST_CASE("algebra json roundtrip preserves the bracket") {
  for (const auto* algebra :
       {&LieAlgebraSpec::so3_cross(), &LieAlgebraSpec::sl2(), &LieAlgebraSpec::heisenberg()}) {
    const LieAlgebraSpec copy = algebra_from_json(algebra_to_json(*algebra));
    CHECK(copy.dim() == algebra->dim());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) CHECK(copy.c(i, j, k) == algebra->c(i, j, k));
    CHECK(jacobi_check(copy).passed());
  }
  CHECK_THROWS_AS(algebra_from_json({{"dim", 2}, {"labels", {"A"}}, {"c", {}}}),
                  std::invalid_argument);
}

TEST_CASE("builtin algebra resolution") {
  CHECK(&resolve_algebra("so3_cross") == &LieAlgebraSpec::so3_cross());
  CHECK(&resolve_algebra("heisenberg") == &LieAlgebraSpec::heisenberg());
  CHECK_THROWS_AS(resolve_algebra("nope"), std::invalid_argument);
}

TEST_CASE("piecewise fuzzy-lie fixtures load from json") {
  const nlohmann::json j = {
      {"algebra", "so3_cross"},
      {"rule",
       {{"pieces",
         {{{"pattern", {"zero", "zero", "zero"}}, {"value", "1"}},
          {{"pattern", {"nonzero", "zero", "zero"}}, {"value", "1/2"}}}},
        {"default", "0"}}},
      {"grid",
       {{"0", "0", "0"},
        {"1", "0", "0"},
        {"-1", "0", "0"},
        {"2", "0", "0"},
        {"-2", "0", "0"},
        {"1", "1", "1"},
        {"-1", "-1", "-1"}}},
      {"scalars", {"0", "1", "-1", "2"}}};
  const FuzzyLieSet f = fuzzy_lie_from_json(j);
  CHECK(f.membership(rat_vec({0, 0, 0})) == UnitValue::one());
  CHECK(f.membership(rat_vec({2, 0, 0})) == UnitValue(Rational(1, 2)));
  CHECK(f.membership(rat_vec({1, 1, 1})) == UnitValue::zero());

  // the loaded fixture reproduces the built-in behavior
  CHECK(is_fuzzy_subalgebra(f).passed());
  const CheckReport ideal = is_fuzzy_ideal(f);
  CHECK_FALSE(ideal.passed());
  CHECK(ideal.witness.at("kind") == "bracket-dominance");

  // malformed pattern entries are rejected
  nlohmann::json bad = j;
  bad["rule"]["pieces"][0]["pattern"][0] = "sometimes";
  CHECK_THROWS_AS(fuzzy_lie_from_json(bad), std::invalid_argument);
}

TEST_CASE("enveloping element serialization") {
  const auto& heis = LieAlgebraSpec::heisenberg();
  EnvElement d(heis);
  d.add_term({0, 1}, Rational(1));
  d.add_term({2}, Rational(-1, 2));
  const nlohmann::json j = env_to_json(d);
  CHECK(env_from_json(j) == d);

  // decreasing words are not valid PBW terms
  nlohmann::json bad = j;
  bad["terms"][0]["word"] = {1, 0};
  CHECK_THROWS_AS(env_from_json(bad), std::domain_error);

  SymPoly p(heis);
  p.add_term({1, 1, 0}, Rational(3, 4));
  CHECK(sym_from_json(sym_to_json(p)) == p);
}
