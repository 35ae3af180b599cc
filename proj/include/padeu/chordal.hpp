#pragma once
#include <functional>

#include "padeu/extended.hpp"
#include "padeu/grid.hpp"
#include "padeu/rational_fn.hpp"

namespace padeu {

using SphereFn = std::function<ExtendedValue(Cd)>;

struct SupResult {
  double sup = 0;
  Cd argmax{0, 0};
};

// Max over the sample of chi(F(z), G(z)); poles are ordinary values here.
SupResult sup_chordal(const SphereFn& F, const SphereFn& G, const CompactSample& K);
SupResult sup_chordal(const RationalFunction& F, const RationalFunction& G,
                      const CompactSample& K, const Tolerances& tol = {});

// Dyadic-rounding rationalization: round every coefficient of q to the
// nearest multiple of 2^-k, raising k until the chordal sup over K against
// the float original drops below eps. Coprimality is re-established by the
// exact constructor.
RationalFunction rationalize(const RationalFunction& q, const CompactSample& K, double eps,
                             const Tolerances& tol = {});

// Nearest multiple of 2^-k; exact since doubles are dyadic.
mpq_class dyadic_round(double x, int k);
mpq_class dyadic_round(const mpq_class& x, int k);

}  // namespace padeu
