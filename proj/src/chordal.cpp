#include "padeu/chordal.hpp"

#include <sstream>

namespace padeu {

SupResult sup_chordal(const SphereFn& F, const SphereFn& G, const CompactSample& K) {
  if (K.points.empty()) throw precondition_error("sup_chordal over an empty sample");
  SupResult r;
  r.argmax = K.points.front();
  for (Cd z : K.points) {
    double d = chi(F(z), G(z));
    if (d > r.sup) {
      r.sup = d;
      r.argmax = z;
    }
  }
  return r;
}

SupResult sup_chordal(const RationalFunction& F, const RationalFunction& G,
                      const CompactSample& K, const Tolerances& tol) {
  return sup_chordal([&](Cd z) { return F.eval_extended(z, tol); },
                     [&](Cd z) { return G.eval_extended(z, tol); }, K);
}

mpq_class dyadic_round(const mpq_class& x, int k) {
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, unsigned(k));
  mpq_class scaled = x * mpq_class(two_k);
  // nearest integer: floor((2*num + den) / (2*den))
  mpz_class n = scaled.get_num(), d = scaled.get_den();
  mpz_class num2 = 2 * n + d, den2 = 2 * d, q;
  mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
  mpq_class out(q, two_k);
  out.canonicalize();
  return out;
}

mpq_class dyadic_round(double x, int k) { return dyadic_round(mpq_class(x), k); }

namespace {

Polynomial round_poly(const Polynomial& p, int k) {
  std::vector<ComplexScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    Cd v = x.fval();
    c.push_back(ComplexScalar(ExactComplex{dyadic_round(v.real(), k), dyadic_round(v.imag(), k)}));
  }
  return Polynomial(std::move(c), Mode::exact);
}

}  // namespace

RationalFunction rationalize(const RationalFunction& q, const CompactSample& K, double eps,
                             const Tolerances& tol) {
  if (eps <= 0) throw precondition_error("rationalize needs eps > 0");
  if (q.mode() == Mode::exact) return q;
  if (K.points.empty()) throw precondition_error("rationalize needs a nonempty sample");

  double best = -1;
  for (int k = 8; k <= tol.rationalize_max_bits; k += 8) {
    Polynomial den = round_poly(q.den(), k);
    if (den.is_zero()) continue;
    Polynomial num = round_poly(q.num(), k);
    RationalFunction cand(std::move(num), std::move(den));
    double sup = sup_chordal(cand, q, K, tol).sup;
    if (sup < eps) return cand;
    if (best < 0 || sup < best) best = sup;
  }
  std::ostringstream os;
  os << "rationalize: eps = " << eps << " unachievable within 2^-" << tol.rationalize_max_bits
     << " rounding (best sup " << best << ")";
  throw pipeline_error(os.str());
}

}  // namespace padeu
