#pragma once

#include "cursor.hpp"
#include "forest_hopf/scalar.hpp"

namespace fhopf::detail {

/// True when the cursor (after whitespace) sits on the weight symbol `L`.
bool at_weight_symbol(Cursor& cur);
/// True when the cursor sits at something that starts a coefficient factor.
bool at_coeff_factor(Cursor& cur);

/// factor := integer ('/' integer)? | 'L' | '(' sum ')', optionally '^' integer
WeightPoly parse_coeff_factor(Cursor& cur);
/// sum := ('-')? product (('+'|'-') product)*, product := factor ('*' factor)*
WeightPoly parse_coeff_sum(Cursor& cur);

}  // namespace fhopf::detail
