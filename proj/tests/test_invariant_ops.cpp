#include <cmath>

#include "doctest.h"
#include "fll/enveloping.hpp"
#include "fll/invariant_ops.hpp"
#include "fll/spherical.hpp"

using namespace fll;

namespace {

const Su2Model kSu2;
const HeisenbergModel kHeis;

double re_part(const SU2Element& g) { return g.w; }
double corner(const HeisPoint<double>& g) { return g.c; }

}  // namespace

TEST_CASE("directional derivative basics") {
  const ScalarFn<Su2Model> constant = [](const SU2Element&) { return 1.0; };
  CHECK(left_invariant_derivative(kSu2, {1, 0, 0}, constant, SU2Element::identity(), 1e-4) ==
        0.0);

  // f = Re at the identity along the first generator: cos(t/2) has no
  // first-order term
  const ScalarFn<Su2Model> re = re_part;
  const double d1 =
      left_invariant_derivative(kSu2, {1, 0, 0}, re, SU2Element::identity(), 1e-4);
  CHECK(std::abs(d1) < 1e-12);

  CHECK_THROWS_AS(
      left_invariant_derivative(kSu2, {1, 0, 0}, re, SU2Element::identity(), 1e-6),
      std::domain_error);
  CHECK_THROWS_AS(
      left_invariant_derivative(kSu2, {1, 0, 0}, re, SU2Element::identity(), 0.5),
      std::domain_error);
}

TEST_CASE("second derivative of the real part pins -1/4") {
  // oracle: f(exp(t e1)) = cos(t/2), so the second derivative at zero is -1/4
  const ScalarFn<Su2Model> re = re_part;
  EnvElement x1x1(kSu2.algebra());
  x1x1.add_term({0, 0}, Rational(1));
  const double via_fields =
      apply_operator(kSu2, x1x1, re, SU2Element::identity(), 1e-4);
  CHECK(via_fields == doctest::Approx(-0.25).epsilon(1e-5));

  const SymPoly p = SymPoly::monomial(kSu2.algebra(), {2, 0, 0}, Rational(1));
  const double via_chart =
      coordinate_derivative(kSu2, p, re, SU2Element::identity(), 1e-4);
  CHECK(via_chart == doctest::Approx(-0.25).epsilon(1e-5));
}

TEST_CASE("degree-zero operators evaluate the function") {
  const ScalarFn<Su2Model> re = re_part;
  const SU2Element g = su2_exp({0.4, -0.1, 0.8});
  const SymPoly one = SymPoly::monomial(kSu2.algebra(), {0, 0, 0}, Rational(1));
  CHECK(coordinate_derivative(kSu2, one, re, g, 1e-4) == re_part(g));
  CHECK(apply_operator(kSu2, EnvElement::one(kSu2.algebra()), re, g, 1e-4) == re_part(g));
}

TEST_CASE("chart route equals field route after symmetrization") {
  const ScalarFn<Su2Model> re = re_part;
  const ScalarFn<HeisenbergModel> c13 = corner;
  const SU2Element gq = su2_exp({0.3, 0.5, -0.2});
  const HeisPoint<double> gh{0.25, -0.4, 0.7};

  // mixed second-order monomial on both models
  const SymPoly p12_su2 = SymPoly::monomial(kSu2.algebra(), {1, 1, 0}, Rational(1));
  const double a = coordinate_derivative(kSu2, p12_su2, re, gq, 1e-4);
  const double b = apply_operator(kSu2, symmetrize(p12_su2), re, gq, 1e-4);
  CHECK(std::abs(a - b) <= 1e-5 * std::max({1.0, std::abs(a), std::abs(b)}));

  const SymPoly p12_heis = SymPoly::monomial(kHeis.algebra(), {1, 1, 0}, Rational(1));
  const double c = coordinate_derivative(kHeis, p12_heis, c13, gh, 1e-4);
  const double d = apply_operator(kHeis, symmetrize(p12_heis), c13, gh, 1e-4);
  CHECK(std::abs(c - d) <= 1e-5 * std::max({1.0, std::abs(c), std::abs(d)}));
}

TEST_CASE("field commutators reproduce the bracket field") {
  const ScalarFn<Su2Model> re = re_part;
  const SU2Element g = su2_exp({-0.2, 0.7, 0.1});
  const CheckReport su2 = vector_field_bracket_check(kSu2, rat_vec({1, 0, 0}),
                                                     rat_vec({0, 1, 0}), re, g, 1e-4, 1e-4);
  CHECK(su2.passed());

  const ScalarFn<HeisenbergModel> c13 = corner;
  const HeisPoint<double> gh{0.5, 0.25, -0.3};
  const CheckReport heis = vector_field_bracket_check(
      kHeis, rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), c13, gh, 1e-4, 1e-6);
  CHECK(heis.passed());
}

TEST_CASE("collinear fields commute identically") {
  const ScalarFn<Su2Model> re = re_part;
  const RatVec x = {Rational(1, 2), Rational(-1, 3), Rational(1, 4)};
  for (const Rational& k : {Rational(1), Rational(-2), Rational(5, 3)}) {
    RatVec y(3);
    for (int i = 0; i < 3; ++i) y[i] = k * x[i];
    const CheckReport r =
        vector_field_bracket_check(kSu2, x, y, re, su2_exp({0.1, 0.9, -0.4}), 1e-4, 1e-4);
    CHECK(r.passed());
    CHECK(*r.max_error == 0.0);
    CHECK(r.params.at("collinear") == true);
  }
}

TEST_CASE("collinearity detection is exact") {
  const RatVec x = {Rational(2, 3), Rational(0), Rational(-1)};
  RatVec y = {Rational(4, 3), Rational(0), Rational(-2)};
  auto k = collinearity_factor(x, y);
  REQUIRE(k.has_value());
  CHECK(*k == Rational(2));
  y[2] += Rational(1, 1000000);
  CHECK_FALSE(collinearity_factor(x, y).has_value());
  CHECK_FALSE(collinearity_factor(zero_vec(3), y).has_value());
}

TEST_CASE("operator degree guard") {
  const ScalarFn<Su2Model> re = re_part;
  EnvElement deep(kSu2.algebra());
  deep.add_term({0, 0, 1, 2}, Rational(1));
  CHECK_THROWS_AS(apply_operator(kSu2, deep, re, SU2Element::identity(), 1e-4),
                  std::domain_error);
}
