#include "padeu/pade.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace padeu {

namespace {

ComplexScalar det_dense(std::vector<std::vector<ComplexScalar>> m, Mode mode) {
  size_t n = m.size();
  if (n == 0) return ComplexScalar::one(mode);
  ComplexScalar det = ComplexScalar::one(mode);
  int sign = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    if (mode == Mode::exact) {
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) return ComplexScalar::zero(mode);
    } else {
      double best = -1;
      for (size_t k = col; k < n; ++k) {
        double a = m[k][col].abs();
        if (a > best) {
          best = a;
          piv = k;
        }
      }
      if (best == 0.0) return ComplexScalar::zero(mode);
    }
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    det *= m[col][col];
    ComplexScalar inv = ComplexScalar::one(mode) / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      ComplexScalar f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return sign < 0 ? -det : det;
}

double maxabs(const Polynomial& p) {
  double m = 0;
  for (const auto& c : p.coeffs()) m = std::max(m, c.abs());
  return m;
}

Polynomial numeric_trim(const Polynomial& p, double floor_abs) {
  auto c = p.coeffs();
  while (!c.empty() && c.back().abs() <= floor_abs) c.pop_back();
  return Polynomial(std::move(c), p.mode());
}

void check_orders(const TaylorJet& jet, int p, int q, int need) {
  if (p < 0 || q < 0) throw precondition_error("pade orders must be nonnegative");
  if (jet.order() < need) throw precondition_error("insufficient jet order for requested [p/q]");
}

// Accuracy-through-order in the shifted variable, then recenter and make the
// denominator monic. The residual check is the defining identity
// B*f - A = O(u^{p+q+1}) and doubles as the Taylor-match invariant.
PadeApproximant finalize(Polynomial A_s, Polynomial B_s, const TaylorJet& jet, int p, int q,
                         PadeSource src, const Tolerances& tol) {
  Mode mode = jet.mode();
  if (mode == Mode::floating) {
    double mb = maxabs(B_s);
    B_s = numeric_trim(B_s, tol.tau_hankel * mb);
    A_s = numeric_trim(A_s, 0.0);
  }
  if (B_s.is_zero()) throw pipeline_error("pade denominator vanished after trimming");

  Polynomial jp = partial_sum_centered(jet, p + q);
  Polynomial resid = B_s * jp - A_s;
  if (mode == Mode::exact) {
    for (int k = 0; k <= p + q; ++k)
      if (!resid.coeff(k).is_zero())
        throw pipeline_error("exact pade failed accuracy-through-order check");
  } else {
    double scale = std::max(1.0, maxabs(jp)) * std::max(1.0, maxabs(B_s));
    for (int k = 0; k <= p + q; ++k)
      if (resid.coeff(k).abs() > 1e-6 * scale)
        throw pipeline_error("float pade lost accuracy-through-order");
  }

  ComplexScalar inv = ComplexScalar::one(mode) / B_s.leading();
  A_s = A_s.scaled(inv);
  B_s = B_s.scaled(inv);
  PadeApproximant pa;
  pa.p = p;
  pa.q = q;
  pa.zeta = jet.center;
  pa.A = A_s.shifted(-jet.center);
  pa.B = B_s.shifted(-jet.center);
  pa.source = src;
  return pa;
}

}  // namespace

HankelReport hankel_det(const TaylorJet& jet, int p, int q, const Tolerances& tol) {
  jet.check();
  check_orders(jet, p, q, q >= 1 ? p + q - 1 : 0);
  Mode mode = jet.mode();
  HankelReport rep;
  rep.p = p;
  rep.q = q;
  rep.zeta = jet.center;
  if (q == 0) {
    rep.det = ComplexScalar::one(mode);
    rep.in_D = true;
    rep.margin = std::numeric_limits<double>::infinity();
    return rep;
  }
  const size_t n = size_t(q);
  std::vector<std::vector<ComplexScalar>> m(n, std::vector<ComplexScalar>(n));
  double scale = 0;
  for (int r = 0; r < q; ++r) {
    double row = 0;
    for (int c = 0; c < q; ++c) {
      m[size_t(r)][size_t(c)] = jet.coeff(p - q + 1 + r + c);
      row += m[size_t(r)][size_t(c)].abs();
    }
    scale = std::max(scale, row);
  }
  rep.det = det_dense(std::move(m), mode);
  if (mode == Mode::exact) {
    rep.in_D = !rep.det.is_zero();
    rep.margin = rep.det.abs();
  } else {
    rep.margin = scale > 0 ? rep.det.abs() / scale : 0.0;
    rep.in_D = rep.margin > tol.tau_hankel;
  }
  return rep;
}

PadeApproximant pade_jacobi(const TaylorJet& jet, int p, int q, const Tolerances& tol) {
  jet.check();
  check_orders(jet, p, q, p + q);
  if (!hankel_det(jet, p, q, tol).in_D)
    throw precondition_error("jet is not in D_{p,q}: hankel test failed");
  Mode mode = jet.mode();

  // Minor j drops column j; rows hold a_{p-q+r+j}, r = 1..q.
  std::vector<ComplexScalar> minors(size_t(q) + 1, ComplexScalar::one(mode));
  for (int j = 0; j <= q; ++j) {
    const size_t n = size_t(q);
    std::vector<std::vector<ComplexScalar>> m(n, std::vector<ComplexScalar>(n));
    for (int r = 1; r <= q; ++r) {
      int cc = 0;
      for (int col = 0; col <= q; ++col) {
        if (col == j) continue;
        m[size_t(r - 1)][size_t(cc++)] = jet.coeff(p - q + r + col);
      }
    }
    minors[size_t(j)] = det_dense(std::move(m), mode);
  }

  Polynomial A_s = Polynomial::zero(mode);
  std::vector<ComplexScalar> bc(size_t(q) + 1, ComplexScalar::zero(mode));
  for (int j = 0; j <= q; ++j) {
    ComplexScalar w = (j % 2 == 0) ? minors[size_t(j)] : -minors[size_t(j)];
    bc[size_t(q - j)] = w;
    int k = p - q + j;
    if (k < 0) continue;
    Polynomial term = Polynomial::monomial(q - j, w) * partial_sum_centered(jet, k);
    A_s = A_s + term;
  }
  Polynomial B_s(std::move(bc), mode);
  return finalize(std::move(A_s), std::move(B_s), jet, p, q, PadeSource::jacobi, tol);
}

std::optional<PadeApproximant> try_pade_solve(const TaylorJet& jet, int p, int q,
                                              const Tolerances& tol) {
  jet.check();
  check_orders(jet, p, q, p + q);
  Mode mode = jet.mode();

  std::vector<ComplexScalar> B(size_t(q) + 1, ComplexScalar::zero(mode));
  B[0] = ComplexScalar::one(mode);

  if (q > 0 && mode == Mode::exact) {
    // Exact elimination; singularity here is this algorithm's own verdict.
    std::vector<std::vector<ComplexScalar>> m(size_t(q),
                                              std::vector<ComplexScalar>(size_t(q) + 1));
    for (int j = 0; j < q; ++j) {
      for (int k = 1; k <= q; ++k) m[size_t(j)][size_t(k - 1)] = jet.coeff(p + 1 + j - k);
      m[size_t(j)][size_t(q)] = -jet.coeff(p + 1 + j);
    }
    for (int col = 0; col < q; ++col) {
      int piv = col;
      while (piv < q && m[size_t(piv)][size_t(col)].is_zero()) ++piv;
      if (piv == q) return std::nullopt;
      std::swap(m[size_t(piv)], m[size_t(col)]);
      ComplexScalar inv = ComplexScalar::one(mode) / m[size_t(col)][size_t(col)];
      for (int r = 0; r < q; ++r) {
        if (r == col || m[size_t(r)][size_t(col)].is_zero()) continue;
        ComplexScalar f = m[size_t(r)][size_t(col)] * inv;
        for (int c = col; c <= q; ++c) m[size_t(r)][size_t(c)] -= f * m[size_t(col)][size_t(c)];
      }
    }
    for (int k = 1; k <= q; ++k)
      B[size_t(k)] = m[size_t(k - 1)][size_t(q)] / m[size_t(k - 1)][size_t(k - 1)];
  } else if (q > 0) {
    if (!hankel_det(jet, p, q, tol).in_D) return std::nullopt;
    Eigen::MatrixXcd M(q, q);
    Eigen::VectorXcd rhs(q);
    for (int j = 0; j < q; ++j) {
      for (int k = 1; k <= q; ++k) M(j, k - 1) = jet.coeff(p + 1 + j - k).fval();
      rhs(j) = -jet.coeff(p + 1 + j).fval();
    }
    Eigen::VectorXcd x = M.partialPivLu().solve(rhs);
    if (!x.allFinite()) return std::nullopt;
    for (int k = 1; k <= q; ++k) B[size_t(k)] = ComplexScalar(Cd(x(k - 1)));
  }

  Polynomial B_s(std::move(B), mode);
  std::vector<ComplexScalar> ac(size_t(p) + 1, ComplexScalar::zero(mode));
  for (int k = 0; k <= p; ++k) {
    ComplexScalar s = ComplexScalar::zero(mode);
    for (int i = 0; i <= std::min(k, q); ++i) s += B_s.coeff(i) * jet.coeff(k - i);
    ac[size_t(k)] = s;
  }
  Polynomial A_s(std::move(ac), mode);
  return finalize(std::move(A_s), std::move(B_s), jet, p, q, PadeSource::solve, tol);
}

PadeApproximant pade_solve(const TaylorJet& jet, int p, int q, const Tolerances& tol) {
  auto pa = try_pade_solve(jet, p, q, tol);
  if (!pa) throw precondition_error("jet is not in D_{p,q}: linear system singular");
  return *pa;
}

EReport in_E(const PadeApproximant& pa, const CompactSample& K, const Tolerances& tol) {
  if (K.points.empty()) throw precondition_error("in_E over an empty sample");
  EReport rep;
  rep.passes = true;
  rep.delta = std::numeric_limits<double>::infinity();
  bool exact = pa.mode() == Mode::exact;
  mpq_class best;
  bool have_best = false;
  for (Cd z : K.points) {
    double v;
    if (exact) {
      ComplexScalar zx = ComplexScalar::exact_from_cd(z);
      mpq_class s = pa.A.eval(zx).xval().norm2() + pa.B.eval(zx).xval().norm2();
      if (!have_best || s < best) {
        best = s;
        have_best = true;
        rep.argmin = z;
      }
      v = s.get_d();
    } else {
      v = std::norm(pa.A.eval_cd(z)) + std::norm(pa.B.eval_cd(z));
      if (v < rep.delta) rep.argmin = z;
    }
    rep.delta = std::min(rep.delta, v);
  }
  if (exact) {
    rep.delta = best.get_d();
    rep.passes = best > mpq_class(tol.tau_E);
  } else {
    rep.passes = rep.delta > tol.tau_E;
  }
  return rep;
}

ExtendedValue pade_eval_deriv(const PadeApproximant& pa, int l, Cd z, const Tolerances& tol) {
  if (l < 0) throw precondition_error("negative derivative order");
  return pa.rational().derivative(l).eval_extended(z, tol);
}

Prop22Report verify_prop22(const RationalFunction& phi, const ComplexScalar& zeta, int p, int q,
                           const Tolerances& tol) {
  if (phi.mode() != zeta.mode()) throw precondition_error("phi and zeta modes differ");
  if (phi.is_zero()) throw precondition_error("phi must be a nonzero rational function");
  if (phi.mode() == Mode::exact && phi.den().eval(zeta).is_zero())
    throw precondition_error("zeta is a pole of phi");

  Prop22Report rep;
  rep.k = *phi.num().degree();
  rep.lambda = *phi.den().degree();
  bool admissible = (q == rep.lambda && p >= rep.k) || (p == rep.k && q >= rep.lambda);
  if (!admissible)
    throw precondition_error("(p,q) not admissible: need q = deg den with p >= deg num, "
                             "or p = deg num with q >= deg den");

  TaylorJet jet = jet_of_rational(phi, zeta, p + q, tol);
  rep.in_D = hankel_det(jet, p, q, tol).in_D;
  if (!rep.in_D) return rep;

  PadeApproximant jac = pade_jacobi(jet, p, q, tol);
  auto sol = try_pade_solve(jet, p, q, tol);
  if (!sol) return rep;

  if (phi.mode() == Mode::exact) {
    rep.reproduced = jac.rational() == phi && sol->rational() == phi;
  } else {
    // 64 probes on the circle of radius 1/2 about zeta, chordal sup.
    RationalFunction rj = jac.rational(), rs = sol->rational();
    double sup = 0;
    Cd c = zeta.to_cd();
    for (int i = 0; i < 64; ++i) {
      double th = 2 * M_PI * i / 64;
      Cd z = c + 0.5 * Cd{std::cos(th), std::sin(th)};
      sup = std::max(sup, chi(rj.eval_extended(z, tol), phi.eval_extended(z, tol)));
      sup = std::max(sup, chi(rs.eval_extended(z, tol), phi.eval_extended(z, tol)));
    }
    rep.reproduced = sup < tol.tau_verify;
  }
  return rep;
}

}  // namespace padeu
