#pragma once

#include <string>

#include "fll/enveloping.hpp"
#include "fll/fuzzy_lie.hpp"
#include "fll/fuzzy_set.hpp"
#include "fll/lie_algebra.hpp"
#include "fll/topology.hpp"
#include "json.hpp"

namespace fll {

// Finite fuzzy sets: {"universe": [...], "membership": {"elem": "p/q", ...}}
// with memberships as exact rational strings.
nlohmann::json fuzzy_set_to_json(const FiniteFuzzySet& s);
FiniteFuzzySet fuzzy_set_from_json(const nlohmann::json& j);

// Spaces: {"carrier": <fuzzy set>, "family": [<fuzzy set>...], "grid_q": 10}
nlohmann::json space_to_json(const FuzzyTopSpace& space);
FuzzyTopSpace space_from_json(const nlohmann::json& j);

// Algebras: {"dim": n, "labels": [...], "c": [[[k, "p/q"], ...], ...]} where
// "c" lists, row-major over the (i,j) bracket pairs, the sparse [k, coeff]
// expansion of [X_i, X_j].
nlohmann::json algebra_to_json(const LieAlgebraSpec& algebra);
LieAlgebraSpec algebra_from_json(const nlohmann::json& j);

/// Resolves {"algebra": "name"} against the built-ins or interns an inline
/// spec so callers can hold a stable reference.
const LieAlgebraSpec& resolve_algebra(const nlohmann::json& j);
const LieAlgebraSpec& intern_algebra(LieAlgebraSpec spec);

/// Algebra selection for the CLI: empty picks the three built-ins, a
/// built-in name picks that one, anything else is read as the path of an
/// algebra JSON file (loaded once and interned).
std::vector<const LieAlgebraSpec*> select_algebras(const std::string& selector);

// Fuzzy Lie sets: {"algebra": ..., "rule": {"pieces": [{"pattern":
// ["zero"|"nonzero"|"any", ...], "value": "p/q"}, ...], "default": "p/q"},
// "grid": [[...]], "scalars": ["0","1","-1",...]}. The first matching piece
// wins; the pattern constrains each coordinate to be zero, nonzero or
// arbitrary.
FuzzyLieSet fuzzy_lie_from_json(const nlohmann::json& j);

// Enveloping/symmetric elements: {"algebra": "...", "terms": [{"word":
// [0,0,1], "coeff": "1/2"}, ...]}; words must be nondecreasing for
// enveloping elements.
nlohmann::json env_to_json(const EnvElement& a);
EnvElement env_from_json(const nlohmann::json& j);
nlohmann::json sym_to_json(const SymPoly& p);
SymPoly sym_from_json(const nlohmann::json& j);

}  // namespace fll
