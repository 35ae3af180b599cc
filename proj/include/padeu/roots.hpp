#pragma once
#include <vector>

#include "padeu/polynomial.hpp"
#include "padeu/tolerances.hpp"

namespace padeu {

struct RootCluster {
  Cd root;
  int multiplicity = 1;
};

// All complex roots of a nonconstant polynomial via the companion matrix,
// with near-coincident eigenvalues merged into multiplicity clusters at tau_root.
std::vector<RootCluster> poly_roots(const Polynomial& p, const Tolerances& tol = {});

}  // namespace padeu
