#pragma once

// Internal declarations of the individual suite checks; the public surface
// is the registry in fll/suites.hpp.

#include "fll/config.hpp"
#include "fll/report.hpp"

namespace fll::checks {

// fuzzy-core
CheckReport fuzzy_core_oracle(const SuiteConfig&);
CheckReport lattice_laws(const SuiteConfig&);
CheckReport tcut_antitone(const SuiteConfig&);
CheckReport image_preimage_properties(const SuiteConfig&);
CheckReport set_serialization_roundtrip(const SuiteConfig&);

// topology
CheckReport topology_axioms_pass(const SuiteConfig&);
CheckReport topology_axioms_missing_union(const SuiteConfig&);
CheckReport topology_open_base(const SuiteConfig&);
CheckReport topology_hausdorff_pass(const SuiteConfig&);
CheckReport topology_hausdorff_indiscrete(const SuiteConfig&);
CheckReport topology_compact(const SuiteConfig&);
CheckReport topology_separation(const SuiteConfig&);
CheckReport topology_connected(const SuiteConfig&);
CheckReport topology_continuity(const SuiteConfig&);
CheckReport topology_composition(const SuiteConfig&);
CheckReport topology_group_pass(const SuiteConfig&);
CheckReport topology_group_fail(const SuiteConfig&);

// lie
CheckReport lie_jacobi_builtins(const SuiteConfig&);
CheckReport lie_jacobi_violation(const SuiteConfig&);
CheckReport lie_bracket_oracle(const SuiteConfig&);
CheckReport lie_ad_matrix(const SuiteConfig&);
CheckReport lie_ad_automorphism(const SuiteConfig&);
CheckReport lie_exp_ad(const SuiteConfig&);

// fuzzy-lie
CheckReport fuzzy_lie_subspace(const SuiteConfig&);
CheckReport fuzzy_lie_subalgebra(const SuiteConfig&);
CheckReport fuzzy_lie_ideal_center(const SuiteConfig&);
CheckReport fuzzy_lie_implications(const SuiteConfig&);

// example-2-2
CheckReport example22_subalgebra(const SuiteConfig&);
CheckReport example22_ideal(const SuiteConfig&);

// pbw
CheckReport pbw_normal_form_oracle(const SuiteConfig&);
CheckReport pbw_confluence(const SuiteConfig&);
CheckReport pbw_env_mul(const SuiteConfig&);
CheckReport pbw_bijectivity(const SuiteConfig&);

// symmetrize
CheckReport sym_powers(const SuiteConfig&);
CheckReport sym_oracle(const SuiteConfig&);
CheckReport sym_graded_symbol(const SuiteConfig&);
CheckReport sym_bijectivity(const SuiteConfig&);
CheckReport sym_mixed_partial(const SuiteConfig&);

// adjoint
CheckReport adj_derivation(const SuiteConfig&);
CheckReport adj_exp_automorphism(const SuiteConfig&);
CheckReport adj_group_vs_series(const SuiteConfig&);
CheckReport adj_vector_field_bracket(const SuiteConfig&);

// spherical
CheckReport sph_def_conditions(const SuiteConfig&);
CheckReport sph_functional_equation(const SuiteConfig&);
CheckReport sph_convolution(const SuiteConfig&);
CheckReport sph_resolution_consistency(const SuiteConfig&);
CheckReport sph_quadrature_consistency(const SuiteConfig&);

// gate
CheckReport gate_branches(const SuiteConfig&);
CheckReport gate_tcut_nesting(const SuiteConfig&);

}  // namespace fll::checks
