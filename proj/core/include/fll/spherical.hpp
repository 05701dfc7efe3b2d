#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "fll/group_models.hpp"
#include "fll/report.hpp"
#include "fll/sampling.hpp"

namespace fll {

/// Height coordinate of the coset sphere: the third component of g acting on
/// the north pole, w^2 + z^2 - x^2 - y^2. Invariant under the diagonal
/// circle subgroup on both sides.
inline double coset_height(const SU2Element& g) {
  return g.w * g.w + g.z * g.z - g.x * g.x - g.y * g.y;
}

/// Image of the north pole under the rotation of g.
std::array<double, 3> coset_project(const SU2Element& g);

/// Left translation x |-> g x on coset representatives.
inline SU2Element coset_translate(const SU2Element& g, const SU2Element& x) {
  return su2_mul(g, x);
}

/// Diagonal circle subgroup element k(theta) = exp(theta X3).
inline SU2Element circle_point(double theta) {
  return SU2Element(std::cos(0.5 * theta), 0.0, 0.0, std::sin(0.5 * theta));
}

/// Legendre polynomial P_ell(u) by the stable three-term recurrence.
double legendre(unsigned ell, double u);

/// The zonal function of degree ell: P_ell(coset height). These are the
/// spherical functions for the pair (SU(2), diagonal circle); the value at
/// the identity is exactly 1.
double zonal(unsigned ell, const SU2Element& g);

using GroupFn = std::function<double(const SU2Element&)>;

GroupFn zonal_fn(unsigned ell);

/// Uniform quadrature on the circle subgroup: nodes 2*pi*j/N, weights 1/N.
/// Exact for trigonometric polynomials of degree < N.
class CircleQuadrature {
 public:
  explicit CircleQuadrature(unsigned node_count);
  unsigned node_count() const { return n_; }
  double node(unsigned j) const;
  double weight() const { return 1.0 / static_cast<double>(n_); }

 private:
  unsigned n_;
};

/// Normalized Haar measure on SU(2) in z-y-z Euler angles: uniform nodes in
/// the two circle angles, Gauss-Legendre nodes in the cosine of the middle
/// angle. Total weight 1.
class EulerQuadrature {
 public:
  EulerQuadrature(unsigned n_alpha, unsigned n_beta, unsigned n_gamma);

  /// Middle-angle representative a(beta) with coset height u = cos(beta).
  static SU2Element axis_point(double cos_beta);

  const std::vector<double>& cos_beta_nodes() const { return u_nodes_; }
  const std::vector<double>& cos_beta_weights() const { return u_weights_; }

  template <class F>
  void for_each(F&& fn) const {
    for (unsigned ia = 0; ia < na_; ++ia) {
      const SU2Element ka = circle_point(alpha_step_ * ia);
      for (std::size_t ib = 0; ib < u_nodes_.size(); ++ib) {
        const SU2Element kab = su2_mul(ka, axis_point(u_nodes_[ib]));
        const double wab = u_weights_[ib] * wa_;
        for (unsigned ig = 0; ig < ng_; ++ig)
          fn(su2_mul(kab, circle_point(gamma_step_ * ig)), wab * wg_);
      }
    }
  }

  double total_weight() const;

 private:
  unsigned na_, ng_;
  double alpha_step_, gamma_step_, wa_, wg_;
  std::vector<double> u_nodes_, u_weights_;  // weights normalized to sum 1
};

/// Gauss-Legendre nodes/weights on [-1, 1] (weights sum to 2).
void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights);

/// Average of f(x k y) over the circle subgroup.
double k_average(const GroupFn& f, const SU2Element& x, const SU2Element& y,
                 const CircleQuadrature& quad);

/// Uniformly distributed SU(2) element (Marsaglia construction).
SU2Element random_su2(DetRng& rng);

std::vector<std::pair<SU2Element, SU2Element>> random_su2_pairs(std::uint64_t seed,
                                                                std::size_t count);

/// Max |k_average(f,x,y) - f(x) f(y)| over the sample pairs; the spherical
/// functional equation holds iff the residual stays within tol.
CheckReport functional_equation_residual(const GroupFn& f,
                                         const std::vector<std::pair<SU2Element, SU2Element>>& pairs,
                                         const CircleQuadrature& quad, double tol,
                                         const std::string& tag = "");

/// Max |f(k1 g k2) - f(g)| over sampled triples.
CheckReport bi_invariance_check(const GroupFn& f, std::uint64_t seed, std::size_t samples,
                                double tol, const std::string& tag = "");

/// Convolution (f * h)(g) = integral of f(g u^{-1}) h(u) du by Haar quadrature.
GroupFn haar_convolve(GroupFn f, GroupFn h, const EulerQuadrature& quad);

/// Integral of f against the zonal of degree ell over the whole group.
double zonal_functional(const GroupFn& f, unsigned ell, const EulerQuadrature& quad);

/// Same integral collapsed to the middle-angle nodes; valid only when the
/// integrand is bi-invariant, where the two circle averages are trivial.
double zonal_functional_biinvariant(const GroupFn& f, unsigned ell, const EulerQuadrature& quad);

/// Verifies L(f*h) = L(f) L(h) for the zonal functionals (degrees in ells)
/// and that convolution commutes at sampled points.
CheckReport convolution_homomorphism_check(const GroupFn& f, const GroupFn& h,
                                           const std::vector<unsigned>& ells,
                                           const EulerQuadrature& quad, double tol_rel,
                                           double tol_comm, std::size_t commut_points,
                                           std::uint64_t seed);

/// Applies the symmetrized quadratic Casimir to the zonal of degree ell at
/// sampled generic points: the Rayleigh quotient must be point-independent
/// and scale as ell(ell+1)/2 relative to degree 1.
CheckReport casimir_eigen_check(unsigned ell, double step, double tol_ratio, double tol_spread,
                                std::size_t points, std::uint64_t seed);

/// Eigenvalue estimate (mean Rayleigh quotient) used by the ratio check.
double casimir_eigenvalue(unsigned ell, double step, std::size_t points, std::uint64_t seed,
                          double* spread_out = nullptr);

struct GateResult {
  enum class Branch { Product, Zero };
  Branch branch = Branch::Product;
  double value = 0.0;
  /// Product branch: |k_average - f(x)f(y)| consistency datum.
  std::optional<double> functional_residual;
  /// Zero branch: the (u, v, f(uv)) triple that hit the open band.
  struct Witness {
    SU2Element u, v;
    double value;
  };
  std::optional<Witness> witness;
};

/// Piecewise circle-average rule gated by the open band (t1, t2): if no
/// sampled product lands strictly inside the band the product branch
/// applies, otherwise the zero branch with the triggering witness. f must
/// take values in [0,1] on the samples.
GateResult spherical_gate(const GroupFn& f, const SU2Element& x, const SU2Element& y, double t1,
                          double t2, const CircleQuadrature& quad,
                          const std::vector<std::pair<SU2Element, SU2Element>>& gate_samples);

/// Verifies that cuts {s : f(s) >= t} shrink as t grows, across all ordered
/// threshold pairs, on the given samples. Exact comparisons.
CheckReport tcut_nesting_check(const GroupFn& f, const std::vector<double>& thresholds,
                               const std::vector<SU2Element>& samples);

}  // namespace fll
