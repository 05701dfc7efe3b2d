#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fll/sampling.hpp"
#include "fll/spherical.hpp"

using namespace fll;

namespace {

constexpr double kPi = std::numbers::pi;

/// Independent route to the circle average of a zonal: the height of
/// x k(psi) y is u v + sqrt(1-u^2) sqrt(1-v^2) cos(psi + phase), so the
/// average is a plain 1-d quadrature in the relative angle, with no group
/// arithmetic at all. The full-period average makes the phase irrelevant.
double scalar_zonal_average(unsigned ell, double u, double v, unsigned nodes) {
  const double su = std::sqrt(std::max(0.0, 1.0 - u * u));
  const double sv = std::sqrt(std::max(0.0, 1.0 - v * v));
  double acc = 0.0;
  for (unsigned j = 0; j < nodes; ++j) {
    const double psi = 2.0 * kPi * j / nodes;
    acc += legendre(ell, u * v + su * sv * std::cos(psi));
  }
  return acc / nodes;
}

}  // namespace

TEST_CASE("legendre recurrence against explicit low-degree polynomials") {
  for (double u : {-1.0, -0.37, 0.0, 0.5, 0.99, 1.0}) {
    CHECK(legendre(0, u) == 1.0);
    CHECK(legendre(1, u) == u);
    CHECK(legendre(2, u) == doctest::Approx(0.5 * (3 * u * u - 1)).epsilon(1e-14));
    CHECK(legendre(3, u) == doctest::Approx(0.5 * (5 * u * u * u - 3 * u)).epsilon(1e-14));
  }
  CHECK(legendre(7, 1.0) == 1.0);  // exact through the recurrence
}

TEST_CASE("group axioms hold to machine precision under long chains") {
  DetRng rng(5);
  SU2Element acc = SU2Element::identity();
  std::vector<SU2Element> factors;
  for (int i = 0; i < 100; ++i) {
    factors.push_back(random_su2(rng));
    acc = su2_mul(acc, factors.back());
  }
  // unwind
  for (int i = 99; i >= 0; --i) acc = su2_mul(acc, su2_inv(factors[i]));
  CHECK(std::abs(acc.w - 1.0) < 1e-12);
  CHECK(std::abs(acc.x) < 1e-12);
  CHECK(std::abs(acc.y) < 1e-12);
  CHECK(std::abs(acc.z) < 1e-12);

  const SU2Element g = random_su2(rng);
  const SU2Element gi = su2_mul(g, su2_inv(g));
  CHECK(gi.w == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(su2_exp({0, 0, 0}).w == 1.0);
}

TEST_CASE("coset height and projection") {
  CHECK(coset_height(SU2Element::identity()) == 1.0);
  // quarter turn about the first axis moves the pole to the equator
  const SU2Element quarter = su2_exp({kPi / 2, 0, 0});
  CHECK(coset_height(quarter) == doctest::Approx(0.0).epsilon(1e-14));
  const auto p = coset_project(quarter);
  CHECK(p[2] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] == doctest::Approx(1.0).epsilon(1e-12));

  // heights are invariant under both circle translations
  DetRng rng(6);
  for (int i = 0; i < 50; ++i) {
    const SU2Element g = random_su2(rng);
    const SU2Element k1 = circle_point(rng.uniform(0, 4 * kPi));
    const SU2Element k2 = circle_point(rng.uniform(0, 4 * kPi));
    CHECK(std::abs(coset_height(su2_mul(su2_mul(k1, g), k2)) - coset_height(g)) < 1e-14);
  }
}

TEST_CASE("zonal normalization and fixed values") {
  for (unsigned ell = 0; ell <= 10; ++ell) CHECK(zonal(ell, SU2Element::identity()) == 1.0);
  const SU2Element equator = su2_exp({kPi / 2, 0, 0});
  CHECK(zonal(0, equator) == 1.0);
  CHECK(zonal(2, equator) == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK_THROWS_AS(zonal(33, SU2Element::identity()), std::domain_error);
}

TEST_CASE("circle average matches the scalar addition-theorem oracle") {
  DetRng rng(7);
  const CircleQuadrature quad(64);
  for (unsigned ell : {1u, 2u, 3u, 5u, 8u}) {
    const GroupFn f = zonal_fn(ell);
    for (int trial = 0; trial < 10; ++trial) {
      const SU2Element x = random_su2(rng);
      const SU2Element y = random_su2(rng);
      const double via_group = k_average(f, x, y, quad);
      const double via_scalar =
          scalar_zonal_average(ell, coset_height(x), coset_height(y), 256);
      const double product = zonal(ell, x) * zonal(ell, y);
      CHECK(std::abs(via_group - via_scalar) < 1e-12);
      CHECK(std::abs(via_group - product) < 1e-12);
    }
  }
}

TEST_CASE("functional equation separates spherical from non-spherical") {
  const CircleQuadrature quad(64);
  const auto pairs = random_su2_pairs(42, 200);

  for (unsigned ell = 0; ell <= 8; ++ell)
    CHECK(functional_equation_residual(zonal_fn(ell), pairs, quad, 1e-10).passed());

  const GroupFn control = [](const SU2Element& g) {
    const double h = coset_height(g);
    return h * h;
  };
  const CheckReport r = functional_equation_residual(control, pairs, quad, 1e-2);
  REQUIRE_FALSE(r.passed());
  CHECK(*r.max_error > 1e-2);
  CHECK_FALSE(r.witness.is_null());
}

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  std::vector<double> nodes, weights;
  gauss_legendre(8, nodes, weights);
  double mass = 0.0, quad = 0.0, high = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    mass += weights[i];
    quad += weights[i] * nodes[i] * nodes[i];
    double p = 1.0;
    for (int k = 0; k < 14; ++k) p *= nodes[i];
    high += weights[i] * p;
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quad == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(high == doctest::Approx(2.0 / 15.0).epsilon(1e-12));  // degree 14 < 2*8
}

TEST_CASE("euler quadrature carries unit mass and kills nonconstant zonals") {
  const EulerQuadrature quad(16, 16, 16);
  CHECK(quad.total_weight() == doctest::Approx(1.0).epsilon(1e-13));
  const GroupFn one = [](const SU2Element&) { return 1.0; };
  for (unsigned ell = 1; ell <= 6; ++ell)
    CHECK(std::abs(zonal_functional(one, ell, quad)) < 1e-13);
  // zonal squares integrate to 1/(2 ell + 1)
  for (unsigned ell = 1; ell <= 6; ++ell)
    CHECK(zonal_functional(zonal_fn(ell), ell, quad) ==
          doctest::Approx(1.0 / (2.0 * ell + 1.0)).epsilon(1e-12));
}

TEST_CASE("convolution is a homomorphism for the zonal functionals") {
  const EulerQuadrature quad(16, 16, 16);
  const GroupFn f = [](const SU2Element& g) { return 0.5 + 0.3 * zonal(1, g) + 0.2 * zonal(2, g); };
  const GroupFn h = [](const SU2Element& g) { return 0.4 + 0.2 * zonal(1, g) + 0.4 * zonal(2, g); };
  const CheckReport r = convolution_homomorphism_check(f, h, {0, 1, 2}, quad, 1e-6, 1e-8, 5, 42);
  CHECK(r.passed());

  // total mass multiplies (Fubini at ell = 0)
  const GroupFn conv = haar_convolve(f, h, quad);
  const GroupFn one = [](const SU2Element&) { return 1.0; };
  double mass_fh = 0.0;
  quad.for_each([&](const SU2Element& x, double w) { mass_fh += w * conv(x); });
  const double mass_f = zonal_functional(f, 0, quad);
  const double mass_h = zonal_functional(h, 0, quad);
  CHECK(mass_fh == doctest::Approx(mass_f * mass_h).epsilon(1e-10));
}

TEST_CASE("casimir eigenvalues follow the ell(ell+1) ladder") {
  double spread = 0.0;
  const double eig1 = casimir_eigenvalue(1, 1e-4, 10, 42, &spread);
  CHECK(eig1 == doctest::Approx(-2.0).epsilon(1e-4));
  CHECK(spread < 1e-3 * std::abs(eig1));
  const double eig3 = casimir_eigenvalue(3, 1e-4, 10, 42, nullptr);
  CHECK(eig3 / eig1 == doctest::Approx(6.0).epsilon(1e-4));
  CHECK(casimir_eigen_check(2, 1e-4, 1e-3, 1e-3, 15, 42).passed());
}

TEST_CASE("gate branches and their witnesses") {
  const CircleQuadrature quad(64);
  const auto samples = random_su2_pairs(42, 2000);
  DetRng rng(8);
  const SU2Element x = random_su2(rng);
  const SU2Element y = random_su2(rng);

  const GroupFn ones = [](const SU2Element&) { return 1.0; };
  const GateResult constant = spherical_gate(ones, x, y, 0.3, 0.7, quad, samples);
  CHECK(constant.branch == GateResult::Branch::Product);
  CHECK(constant.value == 1.0);

  const GroupFn affine = [](const SU2Element& g) { return 0.5 * (1.0 + coset_height(g)); };
  const GateResult hit = spherical_gate(affine, x, y, 0.2, 0.8, quad, samples);
  CHECK(hit.branch == GateResult::Branch::Zero);
  REQUIRE(hit.witness.has_value());
  const double wv = affine(su2_mul(hit.witness->u, hit.witness->v));
  CHECK(wv > 0.2);
  CHECK(wv < 0.8);

  // out-of-range functions are rejected
  const GroupFn big = [](const SU2Element& g) { return 1.0 + coset_height(g); };
  CHECK_THROWS_AS(spherical_gate(big, x, y, 0.2, 0.8, quad, samples), std::domain_error);
  CHECK_THROWS_AS(spherical_gate(ones, x, y, 0.8, 0.2, quad, samples), std::domain_error);
}

TEST_CASE("t-cut nesting is exact across thresholds") {
  DetRng rng(9);
  std::vector<SU2Element> samples;
  for (int i = 0; i < 2000; ++i) samples.push_back(random_su2(rng));
  const GroupFn affine = [](const SU2Element& g) { return 0.5 * (1.0 + coset_height(g)); };
  const CheckReport r = tcut_nesting_check(affine, {0.25, 0.5, 0.75}, samples);
  CHECK(r.passed());
  const auto sizes = r.params.at("cut_sizes");
  CHECK(sizes[0].get<std::size_t>() > sizes[1].get<std::size_t>());
  CHECK(sizes[1].get<std::size_t>() > sizes[2].get<std::size_t>());
  CHECK(sizes[2].get<std::size_t>() > 0);
}
