#pragma once
#include "padeu/rational_fn.hpp"

namespace padeu {

// Truncated Taylor expansion of a function at a center: coeffs[k] multiplies
// (z - center)^k, so order() is the highest retained power.
struct TaylorJet {
  ComplexScalar center;
  std::vector<ComplexScalar> coeffs;

  Mode mode() const { return center.mode(); }
  int order() const { return int(coeffs.size()) - 1; }
  ComplexScalar coeff(int k) const {
    if (k < 0 || size_t(k) >= coeffs.size()) return ComplexScalar::zero(mode());
    return coeffs[size_t(k)];
  }
  void check() const {
    for (const auto& c : coeffs)
      if (c.mode() != center.mode()) throw precondition_error("mixed-mode jet");
  }
};

// Taylor coefficients of R about zeta through order M, by the division
// recurrence b_0 a_n = c_n - sum_{k=1..n} b_k a_{n-k} on the shifted
// numerator and denominator. zeta must not be a pole of R.
TaylorJet jet_of_rational(const RationalFunction& R, const ComplexScalar& zeta, int M,
                          const Tolerances& tol = {});

// S_k: the degree-<=k truncation as a polynomial in (z - center) recentered
// to z. k < 0 gives the zero polynomial; k beyond the jet order is an error.
Polynomial partial_sum(const TaylorJet& jet, int k);

// Same truncation left in powers of (z - center); used by the determinant
// formulas, which work in the shifted variable.
Polynomial partial_sum_centered(const TaylorJet& jet, int k);

}  // namespace padeu
