#pragma once

#include "tdc/families.hpp"
#include "tdc/graph.hpp"

namespace tdc {

enum class FormulaInvariant { kTdc, kGammaT };

// Closed-form chi_d^t(C(family)) from the formula catalog, or gamma_t(C(K_n))
// under the gamma variant. Throws UnsupportedFamilyError when no closed form
// covers the family.
long long formula_value(const FamilySpec& spec, FormulaInvariant invariant = FormulaInvariant::kTdc);

// chi_d^t of complement(central(g)): n for trees, m otherwise (g connected,
// n >= 4; throws ParameterError when the hypothesis fails).
long long formula_complement_central(const Graph& g);

}  // namespace tdc
