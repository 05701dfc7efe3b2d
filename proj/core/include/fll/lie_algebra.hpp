#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fll/rational.hpp"
#include "fll/report.hpp"

namespace fll {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

/// A finite-dimensional real Lie algebra presented by rational structure
/// constants: [X_i, X_j] = sum_k c[i][j][k] X_k over a fixed basis.
///
/// Antisymmetry and the Jacobi identity are the data invariants; they are
/// validated by jacobi_check rather than at construction so that a broken
/// table can itself be used as a negative fixture.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec(std::string name, std::vector<std::string> basis_labels,
                 std::vector<std::vector<std::vector<Rational>>> c);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  /// Bilinear expansion of [x, y] through the structure constants. Exact.
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  /// Matrix of ad x = [x, .] in the basis (column j = bracket(x, e_j)).
  RatMat ad_matrix(const RatVec& x) const;

  /// Built-in algebras. The cross-product table is the bracket attached to
  /// the (a,b,c) coordinates in the fuzzy subalgebra fixture; it coincides
  /// with so(3), not with the standard sl2 bracket.
  static const LieAlgebraSpec& so3_cross();
  static const LieAlgebraSpec& sl2();
  static const LieAlgebraSpec& heisenberg();

  /// Looks up a built-in by name; returns nullptr when unknown.
  static const LieAlgebraSpec* builtin(const std::string& name);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<Rational>>> c_;  // c_[i][j][k]
};

/// Exact verification of antisymmetry and the Jacobi identity; on failure
/// the witness carries the violating index tuple and both sides.
CheckReport jacobi_check(const LieAlgebraSpec& algebra);

RatVec rat_vec(std::initializer_list<long> entries);
RatVec zero_vec(std::size_t n);
RatVec mat_apply(const RatMat& m, const RatVec& x);

}  // namespace fll
