#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fll/rational.hpp"

namespace fll {

/// Membership degree: an exact rational clamped to [0,1] by construction.
class UnitValue {
 public:
  UnitValue() = default;
  UnitValue(Rational v) : v_(std::move(v)) {
    if (v_ < 0 || v_ > 1)
      throw std::domain_error("membership value outside [0,1]: " + v_.str());
  }
  UnitValue(int v) : UnitValue(Rational(v)) {}

  const Rational& value() const { return v_; }
  double as_double() const { return to_double(v_); }

  static UnitValue zero() { return UnitValue(); }
  static UnitValue one() { return UnitValue(Rational(1)); }

  friend bool operator==(const UnitValue& a, const UnitValue& b) { return a.v_ == b.v_; }
  friend bool operator!=(const UnitValue& a, const UnitValue& b) { return a.v_ != b.v_; }
  friend bool operator<(const UnitValue& a, const UnitValue& b) { return a.v_ < b.v_; }
  friend bool operator<=(const UnitValue& a, const UnitValue& b) { return a.v_ <= b.v_; }
  friend bool operator>(const UnitValue& a, const UnitValue& b) { return a.v_ > b.v_; }
  friend bool operator>=(const UnitValue& a, const UnitValue& b) { return a.v_ >= b.v_; }

 private:
  Rational v_{};
};

inline UnitValue unit_min(const UnitValue& a, const UnitValue& b) { return a <= b ? a : b; }
inline UnitValue unit_max(const UnitValue& a, const UnitValue& b) { return a >= b ? a : b; }
inline UnitValue unit_complement(const UnitValue& a) { return UnitValue(1 - a.value()); }

inline UnitValue parse_unit(const std::string& text) { return UnitValue(parse_rational(text)); }

using Label = std::string;
using RatPoint = std::vector<Rational>;

/// A fuzzy set over a finite universe of keys. The universe is exactly the
/// key set of the membership map; elements are kept in their natural order
/// so witness selection is deterministic.
template <class Key>
class FuzzySet {
 public:
  using key_type = Key;

  FuzzySet() = default;
  explicit FuzzySet(std::map<Key, UnitValue> membership) : mu_(std::move(membership)) {}

  static FuzzySet zero(const std::vector<Key>& universe) {
    return constant(universe, UnitValue::zero());
  }
  static FuzzySet whole(const std::vector<Key>& universe) {
    return constant(universe, UnitValue::one());
  }
  static FuzzySet constant(const std::vector<Key>& universe, UnitValue h) {
    std::map<Key, UnitValue> mu;
    for (const Key& k : universe) mu.emplace(k, h);
    if (mu.size() != universe.size())
      throw std::domain_error("universe elements must be distinct");
    return FuzzySet(std::move(mu));
  }

  std::size_t size() const { return mu_.size(); }
  bool empty_universe() const { return mu_.empty(); }

  std::vector<Key> universe() const {
    std::vector<Key> u;
    u.reserve(mu_.size());
    for (const auto& [k, v] : mu_) u.push_back(k);
    return u;
  }

  bool contains(const Key& k) const { return mu_.count(k) != 0; }

  const UnitValue& membership(const Key& k) const {
    auto it = mu_.find(k);
    if (it == mu_.end()) throw std::domain_error("element not in universe");
    return it->second;
  }

  const std::map<Key, UnitValue>& entries() const { return mu_; }

  bool same_universe(const FuzzySet& other) const {
    if (mu_.size() != other.mu_.size()) return false;
    auto a = mu_.begin();
    auto b = other.mu_.begin();
    for (; a != mu_.end(); ++a, ++b)
      if (a->first != b->first) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& [k, v] : mu_)
      if (v != UnitValue::zero()) return false;
    return true;
  }

  UnitValue max_membership() const {
    UnitValue m = UnitValue::zero();
    for (const auto& [k, v] : mu_) m = unit_max(m, v);
    return m;
  }

  /// Pointwise order: this(x) <= other(x) everywhere (same universe).
  bool leq(const FuzzySet& other) const {
    require_same_universe(other);
    auto a = mu_.begin();
    auto b = other.mu_.begin();
    for (; a != mu_.end(); ++a, ++b)
      if (a->second > b->second) return false;
    return true;
  }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) { return a.mu_ == b.mu_; }
  friend bool operator!=(const FuzzySet& a, const FuzzySet& b) { return !(a == b); }
  friend bool operator<(const FuzzySet& a, const FuzzySet& b) {
    return std::lexicographical_compare(
        a.mu_.begin(), a.mu_.end(), b.mu_.begin(), b.mu_.end(), [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first < y.first;
          return x.second < y.second;
        });
  }

  void require_same_universe(const FuzzySet& other) const {
    if (!same_universe(other)) throw std::domain_error("fuzzy sets live on different universes");
  }

 private:
  std::map<Key, UnitValue> mu_;
};

using FiniteFuzzySet = FuzzySet<Label>;
using PointFuzzySet = FuzzySet<RatPoint>;

/// t-cut: the crisp subset {s : A(s) >= t}.
template <class Key>
std::vector<Key> t_cut(const FuzzySet<Key>& a, const UnitValue& t) {
  std::vector<Key> cut;
  for (const auto& [k, v] : a.entries())
    if (v >= t) cut.push_back(k);
  return cut;
}

template <class Key>
FuzzySet<Key> fuzzy_union(const FuzzySet<Key>& a, const FuzzySet<Key>& b) {
  a.require_same_universe(b);
  std::map<Key, UnitValue> mu;
  for (const auto& [k, v] : a.entries()) mu.emplace(k, unit_max(v, b.membership(k)));
  return FuzzySet<Key>(std::move(mu));
}

template <class Key>
FuzzySet<Key> fuzzy_intersection(const FuzzySet<Key>& a, const FuzzySet<Key>& b) {
  a.require_same_universe(b);
  std::map<Key, UnitValue> mu;
  for (const auto& [k, v] : a.entries()) mu.emplace(k, unit_min(v, b.membership(k)));
  return FuzzySet<Key>(std::move(mu));
}

template <class Key>
FuzzySet<Key> fuzzy_complement(const FuzzySet<Key>& a) {
  std::map<Key, UnitValue> mu;
  for (const auto& [k, v] : a.entries()) mu.emplace(k, unit_complement(v));
  return FuzzySet<Key>(std::move(mu));
}

/// Complement with respect to a carrier gamma: (gamma - u) clipped at 0.
/// This is the "closed set" construction for fuzzy topologies on gamma.
template <class Key>
FuzzySet<Key> relative_complement(const FuzzySet<Key>& gamma, const FuzzySet<Key>& u) {
  gamma.require_same_universe(u);
  std::map<Key, UnitValue> mu;
  for (const auto& [k, g] : gamma.entries()) {
    Rational d = g.value() - u.membership(k).value();
    if (d < 0) d = 0;
    mu.emplace(k, UnitValue(d));
  }
  return FuzzySet<Key>(std::move(mu));
}

/// Intersection with the constant fuzzy set of height kappa.
template <class Key>
FuzzySet<Key> constant_intersection(const UnitValue& kappa, const FuzzySet<Key>& gamma) {
  std::map<Key, UnitValue> mu;
  for (const auto& [k, g] : gamma.entries()) mu.emplace(k, unit_min(kappa, g));
  return FuzzySet<Key>(std::move(mu));
}

/// Product fuzzy set with min memberships over the n-fold product universe.
/// The product is materialized; exceeding max_size is an error rather than a
/// silent truncation.
template <class Key>
FuzzySet<std::vector<Key>> min_product(const std::vector<FuzzySet<Key>>& factors,
                                       std::size_t max_size = 1000000) {
  if (factors.empty()) throw std::domain_error("min_product of zero factors");
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.size() != 0 && total > max_size / f.size())
      throw std::length_error("product universe exceeds size cap");
    total *= f.size();
  }
  if (total > max_size) throw std::length_error("product universe exceeds size cap");

  std::map<std::vector<Key>, UnitValue> mu;
  std::vector<std::pair<std::vector<Key>, UnitValue>> acc;
  acc.emplace_back(std::vector<Key>{}, UnitValue::one());
  for (const auto& f : factors) {
    std::vector<std::pair<std::vector<Key>, UnitValue>> next;
    next.reserve(acc.size() * f.size());
    for (const auto& [tuple, m] : acc)
      for (const auto& [k, v] : f.entries()) {
        auto t = tuple;
        t.push_back(k);
        next.emplace_back(std::move(t), unit_min(m, v));
      }
    acc = std::move(next);
  }
  for (auto& [tuple, m] : acc) mu.emplace(std::move(tuple), m);
  return FuzzySet<std::vector<Key>>(std::move(mu));
}

/// Image of a fuzzy set under a point map h (sup over fibers; empty fibers
/// get membership 0). If no codomain universe is supplied, the image of the
/// domain universe is used.
template <class KeyIn, class KeyOut>
FuzzySet<KeyOut> zadeh_image(const std::function<KeyOut(const KeyIn&)>& h,
                             const FuzzySet<KeyIn>& a,
                             const std::vector<KeyOut>* codomain = nullptr) {
  std::map<KeyOut, UnitValue> mu;
  if (codomain != nullptr)
    for (const KeyOut& y : *codomain) mu.emplace(y, UnitValue::zero());
  for (const auto& [x, v] : a.entries()) {
    KeyOut y = h(x);
    auto it = mu.find(y);
    if (it == mu.end())
      mu.emplace(std::move(y), v);
    else
      it->second = unit_max(it->second, v);
  }
  return FuzzySet<KeyOut>(std::move(mu));
}

/// Preimage under a point map: (phi^{-1} U)(s) = U(phi(s)), taken as 0 when
/// phi(s) falls outside U's universe.
template <class KeyIn, class KeyOut>
FuzzySet<KeyIn> preimage(const std::function<KeyOut(const KeyIn&)>& phi,
                         const FuzzySet<KeyOut>& u, const std::vector<KeyIn>& domain) {
  std::map<KeyIn, UnitValue> mu;
  for (const KeyIn& x : domain) {
    KeyOut y = phi(x);
    mu.emplace(x, u.contains(y) ? u.membership(y) : UnitValue::zero());
  }
  if (mu.size() != domain.size()) throw std::domain_error("domain elements must be distinct");
  return FuzzySet<KeyIn>(std::move(mu));
}

// ---- Vector-space carrier operations (rational coordinate points) ----

inline RatPoint point_add(const RatPoint& a, const RatPoint& b) {
  if (a.size() != b.size()) throw std::domain_error("point dimension mismatch");
  RatPoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline RatPoint point_scale(const Rational& lambda, const RatPoint& a) {
  RatPoint c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = lambda * a[i];
  return c;
}

inline RatPoint point_negate(const RatPoint& a) { return point_scale(Rational(-1), a); }

inline bool point_is_zero(const RatPoint& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// Pushforward of D under s -> lambda*s. For lambda = 0 the whole set
/// collapses onto the origin with the sup rule.
inline PointFuzzySet scalar_mul(const Rational& lambda, const PointFuzzySet& d) {
  std::function<RatPoint(const RatPoint&)> h = [&lambda](const RatPoint& p) {
    return point_scale(lambda, p);
  };
  return zadeh_image(h, d);
}

/// Fuzzy sum A + B: image of the min-product under coordinatewise addition.
inline PointFuzzySet fuzzy_sum(const PointFuzzySet& a, const PointFuzzySet& b,
                               std::size_t max_size = 1000000) {
  if (a.size() != 0 && b.size() != 0 && a.size() > max_size / b.size())
    throw std::length_error("sum universe exceeds size cap");
  std::map<RatPoint, UnitValue> mu;
  for (const auto& [x, vx] : a.entries())
    for (const auto& [y, vy] : b.entries()) {
      RatPoint s = point_add(x, y);
      UnitValue m = unit_min(vx, vy);
      auto it = mu.find(s);
      if (it == mu.end())
        mu.emplace(std::move(s), m);
      else
        it->second = unit_max(it->second, m);
    }
  return PointFuzzySet(std::move(mu));
}

/// A fuzzy set over coordinates in R^n given by a total evaluation rule plus
/// a finite sample grid used by the decidable property checks.
class SampledFuzzySet {
 public:
  using Rule = std::function<UnitValue(const RatPoint&)>;

  SampledFuzzySet(std::size_t carrier_dim, Rule rule, std::vector<RatPoint> sample_grid)
      : dim_(carrier_dim), rule_(std::move(rule)), grid_(std::move(sample_grid)) {
    if (dim_ == 0) throw std::domain_error("carrier dimension must be positive");
    if (grid_.empty()) throw std::domain_error("sample grid must be nonempty");
    for (const auto& p : grid_)
      if (p.size() != dim_) throw std::domain_error("grid point dimension mismatch");
  }

  std::size_t carrier_dim() const { return dim_; }
  const std::vector<RatPoint>& sample_grid() const { return grid_; }

  /// Total: any coordinate point may be evaluated, on or off the grid.
  UnitValue membership(const RatPoint& p) const {
    if (p.size() != dim_) throw std::domain_error("point dimension mismatch");
    return rule_(p);
  }

  /// t-cut taken over the sample grid.
  std::vector<RatPoint> t_cut(const UnitValue& t) const {
    std::vector<RatPoint> cut;
    for (const auto& p : grid_)
      if (rule_(p) >= t) cut.push_back(p);
    return cut;
  }

 private:
  std::size_t dim_;
  Rule rule_;
  std::vector<RatPoint> grid_;
};

/// Direct sum along a decomposition x = x0 + x1 supplied by the caller:
/// (U0 (+) U1)(x) = min(U0(x0), U1(x1)). Uniqueness of the decomposition is
/// the splitter's contract; a splitter that reports failure (by throwing)
/// propagates as a domain error.
inline SampledFuzzySet::Rule direct_sum_rule(
    SampledFuzzySet::Rule u0, SampledFuzzySet::Rule u1,
    std::function<std::pair<RatPoint, RatPoint>(const RatPoint&)> split) {
  return [u0 = std::move(u0), u1 = std::move(u1),
          split = std::move(split)](const RatPoint& x) -> UnitValue {
    auto [x0, x1] = split(x);
    return unit_min(u0(x0), u1(x1));
  };
}

}  // namespace fll
