#include "padeu/principal_parts.hpp"

#include <cmath>
#include <sstream>

namespace padeu {

namespace {

// Divide p by (z - pi), dropping the remainder (caller knows pi is a root).
Polynomial deflate(const Polynomial& p, Cd pi) {
  int n = p.degree_or(-1);
  if (n < 1) return Polynomial::zero(Mode::floating);
  std::vector<ComplexScalar> q(size_t(n), ComplexScalar::zero(Mode::floating));
  Cd acc = p.coeff(n).fval();
  for (int k = n - 1; k >= 0; --k) {
    q[size_t(k)] = ComplexScalar(acc);
    acc = p.coeff(k).fval() + pi * acc;
  }
  return Polynomial(std::move(q), Mode::floating);
}

}  // namespace

RationalFunction principal_parts(const RationalFunction& R, const CompactSample& region,
                                 const Tolerances& tol) {
  RationalFunction r = R.mode() == Mode::floating ? R : R.to_float();
  RationalFunction acc = RationalFunction::zero(Mode::floating);
  if (r.den().degree_or(0) < 1) return acc;

  double tau_inc = tol.inclusion_for_h(region.grid.h);
  auto clusters = poly_roots(r.den(), tol);
  for (const auto& cl : clusters) {
    double dist = sample_distance(cl.root, region);
    if (std::abs(dist - tau_inc) <= tol.tau_root) {
      std::ostringstream os;
      os << "pole at (" << cl.root.real() << "," << cl.root.imag()
         << ") is within tau_root of the inclusion threshold; verdict would be unstable";
      throw precondition_error(os.str());
    }
    if (dist > tau_inc) continue;

    // rho = den / (z - pi)^m, then the first m Taylor coefficients of
    // num/rho at pi are the Laurent data of the pole.
    int m = cl.multiplicity;
    Polynomial rho = r.den();
    for (int i = 0; i < m; ++i) rho = deflate(rho, cl.root);
    ComplexScalar pi(Cd(cl.root));
    Polynomial num_at = r.num().shifted(pi);
    Polynomial rho_at = rho.shifted(pi);
    Cd b0 = rho_at.coeff(0).fval();
    if (std::abs(b0) == 0.0) throw pipeline_error("degenerate deflation in principal_parts");
    std::vector<Cd> g(size_t(m), Cd{0, 0});
    for (int n = 0; n < m; ++n) {
      Cd s = num_at.coeff(n).fval();
      for (int k = 1; k <= n; ++k) s -= rho_at.coeff(k).fval() * g[size_t(n - k)];
      g[size_t(n)] = s / b0;
    }

    // pp = (g_0 + g_1 (z-pi) + ... + g_{m-1} (z-pi)^{m-1}) / (z-pi)^m
    Polynomial shifted_num(Mode::floating);
    {
      std::vector<ComplexScalar> c;
      for (Cd v : g) c.emplace_back(v);
      Polynomial in_u(std::move(c), Mode::floating);
      shifted_num = in_u.shifted(ComplexScalar(-cl.root));  // rewrite in z
    }
    Polynomial lin({ComplexScalar(-cl.root), ComplexScalar(Cd{1, 0})}, Mode::floating);
    Polynomial denom = Polynomial::constant(ComplexScalar::one(Mode::floating));
    for (int i = 0; i < m; ++i) denom = denom * lin;
    acc = acc + RationalFunction(std::move(shifted_num), std::move(denom));
  }
  return acc;
}

}  // namespace padeu
