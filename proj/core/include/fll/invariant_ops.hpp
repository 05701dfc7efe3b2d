#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>

#include "fll/enveloping.hpp"
#include "fll/group_models.hpp"
#include "fll/lie_algebra.hpp"
#include "fll/report.hpp"

namespace fll {

/// Step bounds for the central-difference stencils; outside this range
/// truncation or rounding dominates at the tolerances the checks use.
inline constexpr double kMinStep = 1e-5;
inline constexpr double kMaxStep = 1e-2;

inline void require_step(double step) {
  if (!(step >= kMinStep && step <= kMaxStep))
    throw std::domain_error("finite-difference step out of range [1e-5, 1e-2]");
}

template <class Model>
using ScalarFn = std::function<double(const typename Model::Element&)>;

/// Directional derivative of f along the left-invariant field of X:
/// (f(g exp(step X)) - f(g exp(-step X))) / (2 step).
template <class Model>
double left_invariant_derivative(const Model& model, const Vec3d& x, const ScalarFn<Model>& f,
                                 const typename Model::Element& g, double step) {
  require_step(step);
  const double fp = f(model.mul(g, model.exp(x, step)));
  const double fm = f(model.mul(g, model.exp(x, -step)));
  if (!std::isfinite(fp) || !std::isfinite(fm))
    throw std::runtime_error("non-finite function value in derivative stencil");
  return (fp - fm) / (2.0 * step);
}

/// Nested derivative for a product of fields, rightmost factor innermost:
/// dirs[0] is the outermost derivative.
template <class Model>
double word_derivative(const Model& model, const std::vector<Vec3d>& dirs,
                       const ScalarFn<Model>& f, const typename Model::Element& g, double step,
                       std::size_t from = 0) {
  if (from == dirs.size()) {
    const double v = f(g);
    if (!std::isfinite(v)) throw std::runtime_error("non-finite function value");
    return v;
  }
  const auto gp = model.mul(g, model.exp(dirs[from], step));
  const auto gm = model.mul(g, model.exp(dirs[from], -step));
  return (word_derivative(model, dirs, f, gp, step, from + 1) -
          word_derivative(model, dirs, f, gm, step, from + 1)) /
         (2.0 * step);
}

/// Applies a PBW operator to f at g by composing directional derivatives
/// word by word.
template <class Model, class K>
double apply_operator(const Model& model, const EnvPoly<K>& a, const ScalarFn<Model>& f,
                      const typename Model::Element& g, double step) {
  require_step(step);
  const std::size_t n = model.algebra().dim();
  if (&a.algebra() != &model.algebra())
    throw std::domain_error("operator algebra does not match the group model");
  double total = 0.0;
  for (const auto& [w, c] : a.terms()) {
    if (w.size() > 3)
      throw std::domain_error("operator degree > 3 is unstable under finite differences");
    std::vector<Vec3d> dirs;
    dirs.reserve(w.size());
    for (unsigned i : w) {
      Vec3d e{0.0, 0.0, 0.0};
      if (i >= n) throw std::domain_error("generator index out of range");
      e[i] = 1.0;
      dirs.push_back(e);
    }
    double cd;
    if constexpr (std::is_same_v<K, Rational>)
      cd = to_double(c);
    else
      cd = c;
    total += cd * word_derivative(model, dirs, f, g, step);
  }
  return total;
}

/// Mixed partial p(d_1,...,d_n) of t -> f(g exp(t_1 X_1 + ... + t_n X_n)) at
/// t = 0, by nested central differences. This is the coordinate-chart route
/// to the same invariant operator that apply_operator(symmetrize(p)) builds
/// by composing fields; the two agreeing is the consistency contract.
template <class Model>
double coordinate_derivative(const Model& model, const SymPoly& p, const ScalarFn<Model>& f,
                             const typename Model::Element& g, double step) {
  require_step(step);
  const std::size_t n = model.algebra().dim();
  if (&p.algebra() != &model.algebra())
    throw std::domain_error("polynomial algebra does not match the group model");
  if (n != 3) throw std::domain_error("coordinate charts are only wired for dim 3");

  const auto phi = [&](const Vec3d& t) {
    const double v = f(model.mul(g, model.exp(t, 1.0)));
    if (!std::isfinite(v)) throw std::runtime_error("non-finite function value");
    return v;
  };

  std::function<double(Exponents, Vec3d)> partial = [&](Exponents k, Vec3d t) -> double {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      k[i] -= 1;
      Vec3d tp = t, tm = t;
      tp[i] += step;
      tm[i] -= step;
      return (partial(k, tp) - partial(k, tm)) / (2.0 * step);
    }
    return phi(t);
  };

  double total = 0.0;
  for (const auto& [exponents, coeff] : p.terms()) {
    unsigned deg = 0;
    for (unsigned e : exponents) deg += e;
    if (deg > 3)
      throw std::domain_error("operator degree > 3 is unstable under finite differences");
    total += to_double(coeff) * partial(exponents, Vec3d{0.0, 0.0, 0.0});
  }
  return total;
}

/// Exact collinearity test: returns k with y = k*x when it exists (x /= 0).
std::optional<Rational> collinearity_factor(const RatVec& x, const RatVec& y);

/// Compares the commutator of two left-invariant fields against the field of
/// the bracket vector. For collinear directions both mixed differences are
/// formed from one shared set of evaluations along the common one-parameter
/// subgroup, so the commutator estimate cancels identically and the reported
/// residual is exactly zero.
template <class Model>
CheckReport vector_field_bracket_check(const Model& model, const RatVec& x, const RatVec& y,
                                       const ScalarFn<Model>& f,
                                       const typename Model::Element& g, double step,
                                       double tol) {
  require_step(step);
  const LieAlgebraSpec& algebra = model.algebra();
  CheckReport report = CheckReport::pass("vector-field-bracket/" + algebra.name());
  report.params["step"] = step;
  report.params["tol"] = tol;

  const RatVec bracket = algebra.bracket(x, y);
  const Vec3d xd = to_vec3d(x);
  const Vec3d yd = to_vec3d(y);

  // Symmetric grouping of the 2x2 stencil: both differentiation orders then
  // differ only by swapping the two middle summands, which float addition
  // commutes over, so equal stencil values give a bitwise-zero commutator.
  const auto stencil = [&](double f_pp, double f_pm, double f_mp, double f_mm) {
    return ((f_pp + f_mm) - (f_pm + f_mp)) / (4.0 * step * step);
  };

  double commutator;
  bool collinear = false;
  if (auto k = collinearity_factor(x, y)) {
    collinear = true;
    const double kd = to_double(*k);
    // Collinear fields share the one-parameter subgroup exp(s X) exp(t Y) =
    // exp((s + k t) X); evaluating through it places the four stencil points
    // for both orders at identical group elements.
    const auto phi = [&](double s, double t) {
      return f(model.mul(g, model.exp(xd, s + kd * t)));
    };
    const double f_pp = phi(step, step), f_pm = phi(step, -step);
    const double f_mp = phi(-step, step), f_mm = phi(-step, -step);
    commutator = stencil(f_pp, f_pm, f_mp, f_mm) - stencil(f_pp, f_mp, f_pm, f_mm);
  } else {
    const auto val = [&](const Vec3d& outer, const Vec3d& inner, double s, double t) {
      return f(model.mul(model.mul(g, model.exp(outer, s)), model.exp(inner, t)));
    };
    const double xy = stencil(val(xd, yd, step, step), val(xd, yd, step, -step),
                              val(xd, yd, -step, step), val(xd, yd, -step, -step));
    const double yx = stencil(val(yd, xd, step, step), val(yd, xd, step, -step),
                              val(yd, xd, -step, step), val(yd, xd, -step, -step));
    commutator = xy - yx;
  }

  double bracket_side = 0.0;
  if (!std::all_of(bracket.begin(), bracket.end(), [](const Rational& r) { return r == 0; }))
    bracket_side = left_invariant_derivative(model, to_vec3d(bracket), f, g, step);

  const double residual = std::abs(commutator - bracket_side);
  report.max_error = residual;
  report.params["collinear"] = collinear;
  if (residual > tol) {
    report.status = CheckStatus::Fail;
    report.witness = {{"commutator", commutator}, {"bracket_side", bracket_side}};
  }
  return report;
}

}  // namespace fll
