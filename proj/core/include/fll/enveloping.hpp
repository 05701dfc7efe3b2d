#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fll/lie_algebra.hpp"
#include "fll/rational.hpp"
#include "fll/report.hpp"

namespace fll {

/// A product of generators by basis index, in arbitrary order. Nondecreasing
/// words are the canonical (PBW) monomials.
using Word = std::vector<unsigned>;

/// Exponent vector of a commutative monomial X_1^{k_1}...X_n^{k_n}.
using Exponents = std::vector<unsigned>;

inline bool word_sorted(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

inline Word word_of_exponents(const Exponents& e) {
  Word w;
  for (unsigned i = 0; i < e.size(); ++i) w.insert(w.end(), e[i], i);
  return w;
}

inline Exponents exponents_of_word(const Word& w, std::size_t dim) {
  Exponents e(dim, 0);
  for (unsigned i : w) e.at(i) += 1;
  return e;
}

/// Which inversion the straightening loop rewrites first. Both strategies
/// must reach the same normal form; the confluence check exercises that.
enum class RewriteStrategy { LeftmostInversion, RightmostInversion };

template <class K>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct CoeffOps<double> {
  static bool is_zero(double c) { return c == 0.0; }
  static double from_rational(const Rational& r) { return to_double(r); }
};

/// An element of the enveloping algebra in PBW normal form: a map from
/// nondecreasing words to coefficients. K is the coefficient scalar —
/// Rational for the exact pipeline, double for operator substitutions that
/// involve floating adjoint matrices.
template <class K>
class EnvPoly {
 public:
  explicit EnvPoly(const LieAlgebraSpec& algebra) : algebra_(&algebra) {}

  const LieAlgebraSpec& algebra() const { return *algebra_; }
  const std::map<Word, K>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
  }

  void add_term(const Word& sorted_word, const K& c) {
    if (!word_sorted(sorted_word)) throw std::domain_error("PBW term must be nondecreasing");
    for (unsigned i : sorted_word)
      if (i >= algebra_->dim()) throw std::domain_error("generator index out of range");
    auto it = terms_.find(sorted_word);
    if (it == terms_.end()) {
      if (!CoeffOps<K>::is_zero(c)) terms_.emplace(sorted_word, c);
      return;
    }
    it->second += c;
    if (CoeffOps<K>::is_zero(it->second)) terms_.erase(it);
  }

  static EnvPoly one(const LieAlgebraSpec& algebra) {
    EnvPoly p(algebra);
    p.add_term({}, K{1});
    return p;
  }

  static EnvPoly generator(const LieAlgebraSpec& algebra, unsigned i) {
    EnvPoly p(algebra);
    p.add_term({i}, K{1});
    return p;
  }

  template <class Coord>
  static EnvPoly from_vector(const LieAlgebraSpec& algebra, const std::vector<Coord>& coords) {
    if (coords.size() != algebra.dim()) throw std::domain_error("coordinate length mismatch");
    EnvPoly p(algebra);
    for (unsigned i = 0; i < coords.size(); ++i) p.add_term({i}, K{coords[i]});
    return p;
  }

  /// PBW straightening of a single word: repeatedly rewrite X_j X_i ->
  /// X_i X_j + [X_j, X_i] at an adjacent inversion. Each step decreases
  /// (degree, inversion count) lexicographically, so the loop terminates.
  static EnvPoly normal_form(const LieAlgebraSpec& algebra, Word w, K coeff,
                             RewriteStrategy strategy = RewriteStrategy::LeftmostInversion) {
    EnvPoly out(algebra);
    if (CoeffOps<K>::is_zero(coeff)) return out;
    std::vector<std::pair<Word, K>> pending;
    pending.emplace_back(std::move(w), std::move(coeff));
    while (!pending.empty()) {
      auto [word, c] = std::move(pending.back());
      pending.pop_back();
      const std::size_t pos = find_inversion(word, strategy);
      if (pos == word.size()) {
        out.add_term(word, c);
        continue;
      }
      const unsigned j = word[pos], i = word[pos + 1];  // j > i
      Word swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      pending.emplace_back(std::move(swapped), c);
      for (unsigned k = 0; k < algebra.dim(); ++k) {
        const Rational& s = algebra.c(j, i, k);
        if (s == 0) continue;
        Word contracted;
        contracted.reserve(word.size() - 1);
        contracted.insert(contracted.end(), word.begin(), word.begin() + pos);
        contracted.push_back(k);
        contracted.insert(contracted.end(), word.begin() + pos + 2, word.end());
        pending.emplace_back(std::move(contracted), c * CoeffOps<K>::from_rational(s));
      }
    }
    return out;
  }

  EnvPoly& operator+=(const EnvPoly& other) {
    require_same_algebra(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }

  EnvPoly& operator-=(const EnvPoly& other) {
    require_same_algebra(other);
    for (const auto& [w, c] : other.terms_) add_term(w, K{-c});
    return *this;
  }

  EnvPoly& scale(const K& s) {
    if (CoeffOps<K>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend EnvPoly operator+(EnvPoly a, const EnvPoly& b) { return a += b; }
  friend EnvPoly operator-(EnvPoly a, const EnvPoly& b) { return a -= b; }

  /// Composition of operators: concatenate words pairwise and straighten.
  friend EnvPoly operator*(const EnvPoly& a, const EnvPoly& b) {
    a.require_same_algebra(b);
    EnvPoly out(*a.algebra_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        K c = ca * cb;
        if (word_sorted(w))
          out.add_term(w, c);
        else
          out += normal_form(*a.algebra_, std::move(w), std::move(c));
      }
    return out;
  }

  friend bool operator==(const EnvPoly& a, const EnvPoly& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const EnvPoly& a, const EnvPoly& b) { return !(a == b); }

  void require_same_algebra(const EnvPoly& other) const {
    if (algebra_ != other.algebra_)
      throw std::domain_error("operands live over different algebras");
  }

 private:
  static std::size_t find_inversion(const Word& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::LeftmostInversion) {
      for (std::size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p] > w[p + 1]) return p;
    } else {
      for (std::size_t p = w.size(); p-- > 1;)
        if (w[p - 1] > w[p]) return p - 1;
    }
    return w.size();
  }

  const LieAlgebraSpec* algebra_;
  std::map<Word, K> terms_;
};

using EnvElement = EnvPoly<Rational>;
using EnvElementD = EnvPoly<double>;

/// An element of the symmetric algebra S(g): commutative polynomial in the
/// basis generators with exact rational coefficients.
class SymPoly {
 public:
  explicit SymPoly(const LieAlgebraSpec& algebra) : algebra_(&algebra) {}

  const LieAlgebraSpec& algebra() const { return *algebra_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) {
      std::size_t s = 0;
      for (unsigned k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != algebra_->dim()) throw std::domain_error("exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  static SymPoly monomial(const LieAlgebraSpec& algebra, const Exponents& e, Rational c) {
    SymPoly p(algebra);
    p.add_term(e, std::move(c));
    return p;
  }

  SymPoly& operator+=(const SymPoly& other) {
    if (algebra_ != other.algebra_)
      throw std::domain_error("operands live over different algebras");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

 private:
  const LieAlgebraSpec* algebra_;
  std::map<Exponents, Rational> terms_;
};

/// The symmetrization map S(g) -> U(g): each monomial is averaged over all
/// orderings of its factors. Distinct arrangements of the multiset word are
/// enumerated once and weighted by the multinomial orbit size, which gives
/// the same sum as running over all p! permutations.
EnvElement symmetrize(const SymPoly& p, unsigned degree_cap = 6);

/// Top filtration-degree part of an element, with PBW words read as
/// commutative monomials.
SymPoly graded_symbol(const EnvElement& a);

/// Builds the matrix of symmetrization from the graded monomial basis of
/// S(g) (degree <= max_degree) to the PBW basis and verifies it is
/// unitriangular with respect to the filtration, hence invertible, and the
/// identity on generators.
CheckReport symmetrization_bijectivity_check(const LieAlgebraSpec& algebra, unsigned max_degree);

/// (ad X)(D) = X~ D - D X~, exact.
template <class K, class Coord>
EnvPoly<K> ad_operator(const std::vector<Coord>& x, const EnvPoly<K>& d) {
  const EnvPoly<K> xe = EnvPoly<K>::template from_vector<Coord>(d.algebra(), x);
  return xe * d - d * xe;
}

/// Truncated series sum_{m<trunc} (ad X)^m(D)/m!, exact over rationals. For
/// nilpotent algebras the iterates vanish and the sum is the whole series.
EnvElement exp_ad_operator(const RatVec& x, const EnvElement& d, unsigned trunc);

/// Ad(g) on operators: substitute each generator X_i by its image under the
/// adjoint matrix in every word, then restraighten.
template <class K>
EnvPoly<K> ad_group_operator(const std::vector<std::vector<K>>& adjoint, const EnvPoly<K>& d) {
  const LieAlgebraSpec& algebra = d.algebra();
  const std::size_t n = algebra.dim();
  if (adjoint.size() != n) throw std::domain_error("adjoint matrix has wrong shape");
  std::vector<EnvPoly<K>> images;
  images.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    EnvPoly<K> img(algebra);
    for (unsigned j = 0; j < n; ++j)
      if (!CoeffOps<K>::is_zero(adjoint[j][i])) img.add_term({j}, adjoint[j][i]);
    images.push_back(std::move(img));
  }
  EnvPoly<K> out(algebra);
  for (const auto& [w, c] : d.terms()) {
    EnvPoly<K> prod = EnvPoly<K>::one(algebra);
    prod.scale(c);
    for (unsigned i : w) prod = prod * images[i];
    out += prod;
  }
  return out;
}

/// Coefficient-wise max |a - b| over the union of PBW words.
double env_max_abs_diff(const EnvElement& a, const EnvElementD& b);
double env_max_abs_diff(const EnvElementD& a, const EnvElementD& b);

EnvElementD env_to_double(const EnvElement& a);

/// Enumerates all exponent vectors over `dim` variables of total degree
/// exactly `degree`, in lexicographic order.
std::vector<Exponents> exponents_of_degree(std::size_t dim, unsigned degree);

}  // namespace fll
