#include "padeu/series.hpp"

namespace padeu {

TaylorJet jet_of_rational(const RationalFunction& R, const ComplexScalar& zeta, int M,
                          const Tolerances& tol) {
  if (zeta.mode() != R.mode()) throw precondition_error("jet center mode differs from function");
  if (M < 0) throw precondition_error("negative jet order");

  Polynomial num = R.num().shifted(zeta);
  Polynomial den = R.den().shifted(zeta);
  ComplexScalar b0 = den.coeff(0);
  if (R.mode() == Mode::exact) {
    if (b0.is_zero()) throw precondition_error("jet center is a pole");
  } else {
    if (b0.abs() <= tol.tau_root) throw precondition_error("jet center is within tau_root of a pole");
  }

  TaylorJet jet{zeta, {}};
  jet.coeffs.assign(size_t(M) + 1, ComplexScalar::zero(R.mode()));
  for (int n = 0; n <= M; ++n) {
    ComplexScalar s = num.coeff(n);
    for (int k = 1; k <= n; ++k) s -= den.coeff(k) * jet.coeffs[size_t(n - k)];
    jet.coeffs[size_t(n)] = s / b0;
  }
  return jet;
}

Polynomial partial_sum_centered(const TaylorJet& jet, int k) {
  if (k > jet.order())
    throw precondition_error("partial sum order exceeds available jet order");
  if (k < 0) return Polynomial::zero(jet.mode());
  std::vector<ComplexScalar> c(jet.coeffs.begin(), jet.coeffs.begin() + k + 1);
  return Polynomial(std::move(c), jet.mode());
}

Polynomial partial_sum(const TaylorJet& jet, int k) {
  return partial_sum_centered(jet, k).shifted(-jet.center);
}

}  // namespace padeu
