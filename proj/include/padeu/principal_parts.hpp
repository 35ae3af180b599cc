#pragma once
#include "padeu/grid.hpp"
#include "padeu/rational_fn.hpp"
#include "padeu/roots.hpp"

namespace padeu {

// Sum of the principal parts of R at every pole lying in (or within
// tau_inclusion of) the sampled region. Result is float mode. A pole whose
// distance to the sample sits within tau_root of the inclusion threshold is
// ambiguous and rejected, so verdicts never hinge on root-finding noise.
RationalFunction principal_parts(const RationalFunction& R, const CompactSample& region,
                                 const Tolerances& tol = {});

}  // namespace padeu
