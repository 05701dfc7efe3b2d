#pragma once

#include <map>
#include <string>
#include <vector>

#include "fll/fuzzy_set.hpp"
#include "fll/report.hpp"

namespace fll {

/// A fuzzy point: one support element carrying a positive height.
struct FuzzyPoint {
  Label support;
  UnitValue height;  // in (0, 1]
};

/// Containment of a point in a fuzzy set: height <= U(support). The source
/// definitions leave this open; this is the standard convention.
bool point_in(const FuzzyPoint& p, const FiniteFuzzySet& u);

/// A candidate fuzzy topology: a carrier gamma, a finite family of fuzzy
/// subsets of gamma, and the denominator q of the rational grid {k/q} used
/// wherever a definition quantifies over all heights in [0,1].
class FuzzyTopSpace {
 public:
  FuzzyTopSpace(FiniteFuzzySet carrier, std::vector<FiniteFuzzySet> family, unsigned grid_q = 10);

  const FiniteFuzzySet& carrier() const { return carrier_; }
  const std::vector<FiniteFuzzySet>& family() const { return family_; }
  unsigned grid_q() const { return grid_q_; }

  bool in_family(const FiniteFuzzySet& u) const;

  /// Grid heights 0, 1/q, ..., 1.
  std::vector<UnitValue> height_grid() const;

 private:
  FiniteFuzzySet carrier_;
  std::vector<FiniteFuzzySet> family_;
  unsigned grid_q_;
};

/// Axioms for a fuzzy topology on the carrier: (i) constant intersections
/// kappa ∩ gamma for every grid height, (ii) closure under unions (checked
/// pairwise; finite unions reduce to iterated binary ones), (iii) closure
/// under pairwise intersections. Reports the first violated axiom with a
/// witness.
CheckReport is_fuzzy_topology(const FuzzyTopSpace& space);

/// The topology a base generates: the closure of base ∪ {kappa ∩ gamma}
/// under binary unions and intersections, iterated to a fixpoint. Finite on
/// grid-valued inputs; exceeding max_family is an error.
FuzzyTopSpace generate_topology(const FiniteFuzzySet& carrier,
                                const std::vector<FiniteFuzzySet>& base, unsigned grid_q,
                                std::size_t max_family = 4096);

/// Every family member must be the union of the base members below it (the
/// maximal generating subfamily, which is the canonical unique choice).
CheckReport is_open_base(const std::vector<FiniteFuzzySet>& base, const FuzzyTopSpace& space);

/// Hausdorff separation of grid fuzzy points with distinct supports by
/// disjoint open sets.
CheckReport is_hausdorff(const FuzzyTopSpace& space);

/// For every subfamily covering the carrier there must be a finite
/// subcollection whose union dominates gamma - epsilon. Finite families
/// satisfy this outright; the checker verifies it literally and reports the
/// smallest subcover of the full-family cover. Exhaustive subfamily
/// enumeration is capped at family size 12; past that the caller must name
/// candidate covers (as index lists into the family).
CheckReport is_compact(const FuzzyTopSpace& space, const UnitValue& epsilon,
                       const std::vector<std::vector<std::size_t>>* covers = nullptr);

/// Separation of U into two distinct disjoint nonzero open parts.
CheckReport is_separated(const FiniteFuzzySet& u, const FuzzyTopSpace& space);

/// Connected iff no fuzzy closed subset (complement-in-gamma of an open set)
/// is separated.
CheckReport is_connected(const FuzzyTopSpace& space);

/// A proper function between fuzzy topological spaces, induced by a total
/// point map: F(x,y) = lambda(x) when y = point_map(x), else 0. The
/// construction demands lambda(x) <= U(point_map(x)).
class ProperFunction {
 public:
  ProperFunction(const FuzzyTopSpace& source, const FuzzyTopSpace& target,
                 std::map<Label, Label> point_map);

  const FuzzyTopSpace& source() const { return *source_; }
  const FuzzyTopSpace& target() const { return *target_; }
  Label apply(const Label& x) const;
  const std::map<Label, Label>& point_map() const { return map_; }

  bool bijective() const;

 private:
  const FuzzyTopSpace* source_;
  const FuzzyTopSpace* target_;
  std::map<Label, Label> map_;
};

/// Preimages of target opens must be open in the source.
CheckReport is_fuzzy_continuous(const ProperFunction& f);
/// Images of source opens must be open in the target.
CheckReport is_fuzzy_open(const ProperFunction& f);
/// Bijective + continuous + open.
CheckReport is_fuzzy_homeomorphism(const ProperFunction& f);

/// Finite group presented by its multiplication table.
class GroupTable {
 public:
  GroupTable(std::vector<Label> elements, std::map<std::pair<Label, Label>, Label> table);

  const std::vector<Label>& elements() const { return elements_; }
  Label mul(const Label& a, const Label& b) const;
  Label inverse(const Label& a) const;
  const Label& identity() const { return identity_; }

  static GroupTable cyclic(unsigned n);

 private:
  std::vector<Label> elements_;
  std::map<std::pair<Label, Label>, Label> table_;
  Label identity_;
};

/// Compatibility of a fuzzy topology with the group structure: the
/// multiplication preimage of every open set must lie in the product
/// topology generated by min-products of opens, and the inversion preimage
/// must be open.
CheckReport is_compatible_group_topology(const GroupTable& group, const FuzzyTopSpace& space);

}  // namespace fll
