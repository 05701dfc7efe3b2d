#include "fll/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fll/enveloping.hpp"
#include "fll/invariant_ops.hpp"

namespace fll {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::array<double, 3> coset_project(const SU2Element& g) {
  const Mat3d r = su2_adjoint(g);
  return {r[0][2], r[1][2], r[2][2]};
}

double legendre(unsigned ell, double u) {
  if (ell == 0) return 1.0;
  double p_prev = 1.0;
  double p = u;
  for (unsigned n = 1; n < ell; ++n) {
    const double p_next = ((2.0 * n + 1.0) * u * p - n * p_prev) / (n + 1.0);
    p_prev = p;
    p = p_next;
  }
  return p;
}

double zonal(unsigned ell, const SU2Element& g) {
  if (ell > 32) throw std::domain_error("zonal degree capped at 32");
  return legendre(ell, coset_height(g));
}

GroupFn zonal_fn(unsigned ell) {
  if (ell > 32) throw std::domain_error("zonal degree capped at 32");
  return [ell](const SU2Element& g) { return zonal(ell, g); };
}

CircleQuadrature::CircleQuadrature(unsigned node_count) : n_(node_count) {
  if (n_ == 0) throw std::domain_error("circle quadrature needs at least one node");
}

double CircleQuadrature::node(unsigned j) const { return 2.0 * kPi * j / n_; }

void gauss_legendre(unsigned n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (unsigned i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

EulerQuadrature::EulerQuadrature(unsigned n_alpha, unsigned n_beta, unsigned n_gamma)
    : na_(n_alpha), ng_(n_gamma) {
  if (n_alpha == 0 || n_beta == 0 || n_gamma == 0)
    throw std::domain_error("quadrature node counts must be positive");
  alpha_step_ = 2.0 * kPi / na_;
  gamma_step_ = 4.0 * kPi / ng_;
  wa_ = 1.0 / na_;
  wg_ = 1.0 / ng_;
  gauss_legendre(n_beta, u_nodes_, u_weights_);
  for (double& w : u_weights_) w *= 0.5;  // normalize the [-1,1] mass to 1
}

SU2Element EulerQuadrature::axis_point(double cos_beta) {
  const double beta = std::acos(std::min(1.0, std::max(-1.0, cos_beta)));
  return SU2Element(std::cos(0.5 * beta), 0.0, std::sin(0.5 * beta), 0.0);
}

double EulerQuadrature::total_weight() const {
  double t = 0.0;
  for_each([&](const SU2Element&, double w) { t += w; });
  return t;
}

double k_average(const GroupFn& f, const SU2Element& x, const SU2Element& y,
                 const CircleQuadrature& quad) {
  double acc = 0.0;
  for (unsigned j = 0; j < quad.node_count(); ++j)
    acc += f(su2_mul(su2_mul(x, circle_point(quad.node(j))), y));
  return acc * quad.weight();
}

SU2Element random_su2(DetRng& rng) {
  const double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  return SU2Element(a * std::sin(2.0 * kPi * u2), a * std::cos(2.0 * kPi * u2),
                    b * std::sin(2.0 * kPi * u3), b * std::cos(2.0 * kPi * u3));
}

std::vector<std::pair<SU2Element, SU2Element>> random_su2_pairs(std::uint64_t seed,
                                                                std::size_t count) {
  DetRng rng(seed);
  std::vector<std::pair<SU2Element, SU2Element>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    SU2Element a = random_su2(rng);
    SU2Element b = random_su2(rng);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

namespace {

nlohmann::json su2_json(const SU2Element& g) {
  return nlohmann::json::array({g.w, g.x, g.y, g.z});
}

}  // namespace

CheckReport functional_equation_residual(
    const GroupFn& f, const std::vector<std::pair<SU2Element, SU2Element>>& pairs,
    const CircleQuadrature& quad, double tol, const std::string& tag) {
  if (pairs.empty()) throw std::domain_error("need at least one sample pair");
  CheckReport report = CheckReport::pass("functional-equation" + (tag.empty() ? "" : "/" + tag));
  report.params["pairs"] = pairs.size();
  report.params["circle_nodes"] = quad.node_count();
  report.params["tol"] = tol;

  double worst = 0.0;
  const std::pair<SU2Element, SU2Element>* worst_pair = nullptr;
  for (const auto& pr : pairs) {
    const double avg = k_average(f, pr.first, pr.second, quad);
    const double r = std::abs(avg - f(pr.first) * f(pr.second));
    if (r > worst) {
      worst = r;
      worst_pair = &pr;
    }
  }
  report.max_error = worst;
  if (worst > tol) {
    report.status = CheckStatus::Fail;
    report.witness = {{"x", su2_json(worst_pair->first)},
                      {"y", su2_json(worst_pair->second)},
                      {"residual", worst}};
  }
  return report;
}

CheckReport bi_invariance_check(const GroupFn& f, std::uint64_t seed, std::size_t samples,
                                double tol, const std::string& tag) {
  CheckReport report = CheckReport::pass("bi-invariance" + (tag.empty() ? "" : "/" + tag));
  report.params["samples"] = samples;
  report.params["tol"] = tol;
  DetRng rng(seed);
  double worst = 0.0;
  nlohmann::json witness;
  for (std::size_t i = 0; i < samples; ++i) {
    const SU2Element k1 = circle_point(rng.uniform(0.0, 4.0 * kPi));
    const SU2Element k2 = circle_point(rng.uniform(0.0, 4.0 * kPi));
    const SU2Element g = random_su2(rng);
    const double r = std::abs(f(su2_mul(su2_mul(k1, g), k2)) - f(g));
    if (r > worst) {
      worst = r;
      witness = {{"g", su2_json(g)}, {"deviation", r}};
    }
  }
  report.max_error = worst;
  if (worst > tol) {
    report.status = CheckStatus::Fail;
    report.witness = witness;
  }
  return report;
}

GroupFn haar_convolve(GroupFn f, GroupFn h, const EulerQuadrature& quad) {
  return [f = std::move(f), h = std::move(h), &quad](const SU2Element& g) {
    double acc = 0.0;
    quad.for_each([&](const SU2Element& u, double w) {
      acc += w * f(su2_mul(g, su2_inv(u))) * h(u);
    });
    return acc;
  };
}

double zonal_functional(const GroupFn& f, unsigned ell, const EulerQuadrature& quad) {
  double acc = 0.0;
  quad.for_each([&](const SU2Element& x, double w) { acc += w * f(x) * zonal(ell, x); });
  return acc;
}

double zonal_functional_biinvariant(const GroupFn& f, unsigned ell, const EulerQuadrature& quad) {
  const auto& nodes = quad.cos_beta_nodes();
  const auto& weights = quad.cos_beta_weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SU2Element x = EulerQuadrature::axis_point(nodes[i]);
    acc += weights[i] * f(x) * zonal(ell, x);
  }
  return acc;
}

CheckReport convolution_homomorphism_check(const GroupFn& f, const GroupFn& h,
                                           const std::vector<unsigned>& ells,
                                           const EulerQuadrature& quad, double tol_rel,
                                           double tol_comm, std::size_t commut_points,
                                           std::uint64_t seed) {
  CheckReport report = CheckReport::pass("convolution-homomorphism");
  report.params["tol_rel"] = tol_rel;
  report.params["tol_comm"] = tol_comm;

  const GroupFn fh = haar_convolve(f, h, quad);
  const GroupFn hf = haar_convolve(h, f, quad);

  double worst = 0.0;
  for (unsigned ell : ells) {
    const double lf = zonal_functional(f, ell, quad);
    const double lh = zonal_functional(h, ell, quad);
    // f*h is bi-invariant (both factors are), so its functional collapses to
    // the middle-angle rule; the full triple sum would cost |quad|^2.
    const double lfh = zonal_functional_biinvariant(fh, ell, quad);
    const double denom = std::max(1.0, std::abs(lf * lh));
    const double rel = std::abs(lfh - lf * lh) / denom;
    if (rel > worst) worst = rel;
    report.params["L" + std::to_string(ell)] = {{"Lf", lf}, {"Lh", lh}, {"Lfh", lfh}};
    if (rel > tol_rel) {
      report.status = CheckStatus::Fail;
      report.witness = {{"ell", ell}, {"Lfh", lfh}, {"LfLh", lf * lh}, {"residual", rel}};
      report.max_error = rel;
      return report;
    }
  }

  DetRng rng(seed);
  double worst_comm = 0.0;
  nlohmann::json comm_witness;
  for (std::size_t i = 0; i < commut_points; ++i) {
    const SU2Element g = random_su2(rng);
    const double r = std::abs(fh(g) - hf(g));
    if (r > worst_comm) {
      worst_comm = r;
      comm_witness = {{"g", su2_json(g)}, {"deviation", r}};
    }
  }
  report.params["commutativity_residual"] = worst_comm;
  // recorded bound: the measured residual, floored at the rounding level of
  // a quadrature that integrates these fixtures exactly by degree
  report.params["residual_bound"] = std::max(worst, 1e-12);
  report.max_error = std::max(worst, worst_comm);
  if (worst_comm > tol_comm) {
    report.status = CheckStatus::Fail;
    report.witness = comm_witness;
  }
  return report;
}

double casimir_eigenvalue(unsigned ell, double step, std::size_t points, std::uint64_t seed,
                          double* spread_out) {
  const Su2Model model;
  const LieAlgebraSpec& algebra = model.algebra();
  EnvElement casimir(algebra);
  for (unsigned i = 0; i < 3; ++i) casimir.add_term({i, i}, Rational(1));

  const GroupFn f = zonal_fn(ell);
  const ScalarFn<Su2Model> fs = [&f](const SU2Element& g) { return f(g); };

  DetRng rng(seed);
  std::vector<double> quotients;
  quotients.reserve(points);
  while (quotients.size() < points) {
    const SU2Element g = random_su2(rng);
    const double v = f(g);
    if (std::abs(v) < 0.05) continue;  // keep the quotient well-conditioned
    quotients.push_back(apply_operator(model, casimir, fs, g, step) / v);
  }
  double mean = 0.0;
  for (double q : quotients) mean += q;
  mean /= quotients.size();
  if (spread_out) {
    double var = 0.0;
    for (double q : quotients) var += (q - mean) * (q - mean);
    *spread_out = std::sqrt(var / quotients.size());
  }
  return mean;
}

CheckReport casimir_eigen_check(unsigned ell, double step, double tol_ratio, double tol_spread,
                                std::size_t points, std::uint64_t seed) {
  if (ell < 1 || ell > 6) throw std::domain_error("eigen check wired for 1 <= ell <= 6");
  CheckReport report = CheckReport::pass("casimir-eigenvalue/l" + std::to_string(ell));
  report.params["step"] = step;
  report.params["points"] = points;

  double spread = 0.0, spread1 = 0.0;
  const double eig = casimir_eigenvalue(ell, step, points, seed, &spread);
  const double eig1 = casimir_eigenvalue(1, step, points, seed, &spread1);
  const double ratio = eig / eig1;
  const double expected = 0.5 * ell * (ell + 1.0);

  report.params["eigenvalue"] = eig;
  report.params["ratio"] = ratio;
  report.params["expected_ratio"] = expected;
  report.params["quotient_spread"] = spread;
  report.max_error = std::abs(ratio - expected);

  if (std::abs(ratio - expected) > tol_ratio || spread > tol_spread * std::abs(eig)) {
    report.status = CheckStatus::Fail;
    report.witness = {{"ratio", ratio}, {"expected", expected}, {"spread", spread}};
  }
  return report;
}

GateResult spherical_gate(const GroupFn& f, const SU2Element& x, const SU2Element& y, double t1,
                          double t2, const CircleQuadrature& quad,
                          const std::vector<std::pair<SU2Element, SU2Element>>& gate_samples) {
  if (t1 > t2) throw std::domain_error("thresholds must satisfy t1 <= t2");
  // f is required to map into [0,1]; verified on the samples and arguments.
  const auto check_range = [&f](const SU2Element& g) {
    const double v = f(g);
    if (v < 0.0 || v > 1.0)
      throw std::domain_error("gate requires f valued in [0,1]; got " + std::to_string(v));
    return v;
  };
  check_range(x);
  check_range(y);

  GateResult result;
  for (const auto& [u, v] : gate_samples) {
    const double fv = check_range(su2_mul(u, v));
    if (fv > t1 && fv < t2) {
      result.branch = GateResult::Branch::Zero;
      result.value = 0.0;
      result.witness = GateResult::Witness{u, v, fv};
      return result;
    }
  }
  result.branch = GateResult::Branch::Product;
  result.value = f(x) * f(y);
  result.functional_residual = std::abs(k_average(f, x, y, quad) - result.value);
  return result;
}

CheckReport tcut_nesting_check(const GroupFn& f, const std::vector<double>& thresholds,
                               const std::vector<SU2Element>& samples) {
  CheckReport report = CheckReport::pass("tcut-nesting");
  report.params["thresholds"] = thresholds;
  report.params["samples"] = samples.size();

  std::vector<double> sorted = thresholds;
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<bool>> cuts(sorted.size(), std::vector<bool>(samples.size()));
  nlohmann::json sizes = nlohmann::json::array();
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      cuts[t][i] = f(samples[i]) >= sorted[t];
      count += cuts[t][i];
    }
    sizes.push_back(count);
  }
  report.params["cut_sizes"] = sizes;

  for (std::size_t lo = 0; lo < sorted.size(); ++lo)
    for (std::size_t hi = lo + 1; hi < sorted.size(); ++hi)
      for (std::size_t i = 0; i < samples.size(); ++i)
        if (cuts[hi][i] && !cuts[lo][i]) {
          report.status = CheckStatus::Fail;
          report.witness = {{"t_low", sorted[lo]},
                            {"t_high", sorted[hi]},
                            {"sample", su2_json(samples[i])},
                            {"value", f(samples[i])}};
          return report;
        }
  return report;
}

}  // namespace fll
