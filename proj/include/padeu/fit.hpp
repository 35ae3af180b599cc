#pragma once
#include <vector>

#include "padeu/rational_fn.hpp"

namespace padeu {

// One least-squares row: match the order-th derivative at `point` to `value`.
struct FitTarget {
  Cd point;
  int order = 0;
  Cd value;
};

struct PoleSite {
  Cd location;
  int multiplicity = 1;
};

struct FitOptions {
  double eps_fit = 1e-10;
  int min_degree = 4;
  int max_degree = 90;
  int degree_step = 2;
  // Order-l rows are weighted deriv_scale^l / l!, the size of the order-l jet
  // term at radius deriv_scale. Unit weights make high-degree fits infeasible:
  // the derivative of an oscillating fit error is ~1/spacing larger than the
  // error itself, so a degree-D fit error grows by roughly D/radius per order.
  double deriv_scale = 0.0625;
};

struct FitResult {
  RationalFunction fn;
  double residual = 0;
  int degree = 0;
  bool converged = false;
};

// Weighted discrete least squares in a scaled monomial basis, optionally
// augmented with 1/(z-pi)^j columns. Degree escalates until the max weighted
// row residual drops below eps_fit; exhausting the cap is a pipeline_error
// that reports the best residual seen. The result is an exact-mode rational
// function: the double solution is reassembled in rational arithmetic (high-
// degree fits cancel too heavily to survive a float monomial conversion) and
// its coefficients are dyadically compressed with enough bits to keep the
// perturbation below eps_fit/8 on the target set.
FitResult runge_fit(const std::vector<FitTarget>& targets, const std::vector<PoleSite>& poles,
                    const FitOptions& opts = {});

}  // namespace padeu
