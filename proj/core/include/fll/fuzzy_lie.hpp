#pragma once

#include <vector>

#include "fll/fuzzy_set.hpp"
#include "fll/lie_algebra.hpp"
#include "fll/report.hpp"

namespace fll {

/// A fuzzy set over the coordinate carrier of a Lie algebra, together with
/// the finite sample grid and scalar set the axiom checks quantify over.
/// Checks are sound on the grid: a failure is a certificate, a pass is
/// explicitly grid-relative.
class FuzzyLieSet {
 public:
  FuzzyLieSet(const LieAlgebraSpec& algebra, SampledFuzzySet set,
              std::vector<Rational> scalar_samples);

  const LieAlgebraSpec& algebra() const { return *algebra_; }
  const SampledFuzzySet& set() const { return set_; }
  const std::vector<Rational>& scalar_samples() const { return scalars_; }

  UnitValue membership(const RatPoint& p) const { return set_.membership(p); }

 private:
  const LieAlgebraSpec* algebra_;
  SampledFuzzySet set_;
  std::vector<Rational> scalars_;
};

/// U(s+t) >= min(U(s), U(t)) over grid pairs and U(a s) >= U(s) over
/// (scalar, grid) pairs. Sums and scalar multiples are evaluated through the
/// total rule, on or off the grid.
CheckReport is_fuzzy_subspace(const FuzzyLieSet& f);

/// Subspace clauses plus bracket dominance U([s,t]) >= min(U(s), U(t)) and
/// closure of every grid-level t-cut under addition and scalars.
CheckReport is_fuzzy_subalgebra(const FuzzyLieSet& f);

/// Subspace clauses plus the one-sided bracket condition U([s,t]) >= U(s).
CheckReport is_fuzzy_ideal(const FuzzyLieSet& f);

/// The cross-product-algebra fixture: membership 1 at the origin, 1/2 on the
/// punctured first axis, 0 elsewhere; built as the direct sum with the
/// constant-one set on the zero complement. A fuzzy subalgebra but not a
/// fuzzy ideal.
FuzzyLieSet axis_line_fixture();

/// Indicator of the center of the heisenberg algebra (a fuzzy ideal).
FuzzyLieSet heisenberg_center_fixture();

}  // namespace fll
