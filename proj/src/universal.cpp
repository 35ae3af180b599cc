#include "padeu/universal.hpp"
#include <cstdio>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "padeu/chordal.hpp"
#include "padeu/principal_parts.hpp"
#include "padeu/roots.hpp"

namespace padeu {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kGuardCap = 10;
constexpr int kLadderLen = 40;
constexpr int kRestarts = 6;

std::string zs(Cd z) {
  std::ostringstream os;
  os << std::setprecision(9) << z.real();
  os << (z.imag() < 0 ? "-" : "+") << std::setprecision(9) << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::optional<std::pair<int, int>> IndexSetF::smallest_admissible(int pmin, int qmin) const {
  std::optional<std::pair<int, int>> best;
  auto offer = [&](int p, int q) {
    if (p < 0 || q < 0 || p <= pmin || q <= qmin) return;
    if (!best || std::make_pair(p + q, p) < std::make_pair(best->first + best->second, best->first))
      best = std::make_pair(p, q);
  };
  for (auto [p, q] : pairs) offer(p, q);
  for (const auto& r : rules) {
    if (r.kind == FRule::Kind::diagonal) {
      int n = std::max({pmin, qmin, 0}) + 1;
      offer(n, n);
    } else {
      offer(std::max(pmin + 1, 0), r.q);
    }
  }
  return best;
}

std::vector<std::pair<int, int>> IndexSetF::tail(int horizon) const {
  std::vector<std::pair<int, int>> out = pairs;
  for (const auto& r : rules)
    for (int n = 1; n <= horizon; ++n)
      out.emplace_back(n, r.kind == FRule::Kind::diagonal ? n : r.q);
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return std::make_pair(a.first + a.second, a.first) < std::make_pair(b.first + b.second, b.first);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ConstructionProblem::validate(const Tolerances& tol) const {
  if (L.empty() || K.empty()) throw precondition_error("L and K must both be nonempty");
  if (!samples_disjoint(L, K, 0.0)) throw precondition_error("L and K must be disjoint");
  if (!(eps > 0)) throw precondition_error("eps must be positive");
  if (s < 0) throw precondition_error("derivative order s must be nonnegative");
  if (F.empty()) throw precondition_error("index set F is empty");
  if (g.mode() != h.mode()) throw precondition_error("g and h must share an arithmetic mode");
  if (g.den().degree_or(0) > 0) {
    double thresh = std::max(tol.inclusion_for_h(L.grid.h), tol.inclusion_for_h(K.grid.h));
    for (const auto& rc : poly_roots(g.den().to_float(), tol)) {
      double dist = std::min(sample_distance(rc.root, L), sample_distance(rc.root, K));
      if (dist <= thresh) throw precondition_error("g has a pole on or near L or K");
    }
  }
}

Certificate verify_certificate(const RationalFunction& f, int p, int q, const CompactSample& L,
                               const CompactSample& K, const RationalFunction& h, int s,
                               double eps, Metric metric, const Tolerances& tol) {
  Certificate c;
  c.p = p;
  c.q = q;
  c.s = std::max(s, 0);
  c.eps = eps;
  c.metric = metric_name(metric);
  c.arithmetic = mode_name(f.mode());
  c.tol = tol;
  c.err_ii_per_l.assign(size_t(c.s) + 1, 0.0);
  c.err_ii_by_sample.assign(L.points.size(), 0.0);
  c.err_iii_by_sample.assign(K.points.size(), 0.0);
  c.all_in_D = true;
  c.hankel_min_margin = kInf;
  c.e_margin = kInf;

  auto fail = [&](const std::string& msg) {
    if (c.failures.size() < 40)
      c.failures.push_back(msg);
    else if (c.failures.size() == 40)
      c.failures.push_back("(further failures suppressed)");
  };

  if (p < 0 || q < 0) fail("p and q must be nonnegative");
  if (s < 0) fail("derivative order s must be nonnegative");
  if (!(eps > 0)) fail("eps must be positive");
  if (L.empty()) fail("L is empty");
  if (h.mode() != f.mode()) fail("f and h are in different arithmetic modes");
  if (!samples_disjoint(L, K, 0.0)) fail("L and K share a sample point");
  if (!c.failures.empty()) return c;

  const bool exact = f.mode() == Mode::exact;
  CompactSample KL = union_samples(K, L, "K+L");

  bool all_identity = exact;

  std::vector<RationalFunction> fder{f};
  auto f_deriv = [&](int l) -> const RationalFunction& {
    while (int(fder.size()) <= l) fder.push_back(fder.back().derivative());
    return fder[size_t(l)];
  };

  // When the approximant reproduces f, its (A, B) and hence the E-test and
  // the K-side error are the same at every center; cache them.
  std::optional<Polynomial> memoA, memoB;
  EReport memoE;
  std::optional<double> memo_err3;

  for (Cd zeta : L.points) {
    ComplexScalar zc = exact ? ComplexScalar::exact_from_cd(zeta) : ComplexScalar(zeta);
    TaylorJet jet;
    try {
      jet = jet_of_rational(f, zc, p + q + c.s, tol);
    } catch (const precondition_error&) {
      c.all_in_D = false;
      all_identity = false;
      c.hankel_margins.push_back(0.0);
      c.hankel_min_margin = 0.0;
      fail("pole of f at center " + zs(zeta));
      continue;
    }
    HankelReport hr = hankel_det(jet, p, q, tol);
    c.hankel_margins.push_back(hr.margin);
    c.hankel_min_margin = std::min(c.hankel_min_margin, hr.margin);
    if (!hr.in_D) {
      c.all_in_D = false;
      all_identity = false;
      fail("Hankel determinant test fails at center " + zs(zeta));
      continue;
    }

    PadeApproximant pa = pade_jacobi(jet, p, q, tol);
    auto alt = try_pade_solve(jet, p, q, tol);
    if (!alt) {
      fail("linear-system construction finds a singular system at center " + zs(zeta));
    } else if (exact) {
      if (!(alt->rational() == pa.rational()))
        fail("determinant and linear-system approximants disagree at center " + zs(zeta));
    } else {
      double scale = 1.0, diff = 0.0;
      for (const auto& cf : pa.A.coeffs()) scale = std::max(scale, cf.abs());
      for (const auto& cf : pa.B.coeffs()) scale = std::max(scale, cf.abs());
      int top = std::max(pa.A.degree_or(-1), pa.B.degree_or(-1));
      for (int k = 0; k <= top; ++k) {
        diff = std::max(diff, (pa.A.coeff(k) - alt->A.coeff(k)).abs());
        diff = std::max(diff, (pa.B.coeff(k) - alt->B.coeff(k)).abs());
      }
      if (diff > 1e-6 * scale)
        fail("determinant and linear-system approximants disagree at center " + zs(zeta));
    }

    EReport er;
    if (exact && memoA && pa.A == *memoA && pa.B == *memoB) {
      er = memoE;
    } else {
      er = in_E(pa, KL, tol);
      if (exact) {
        memoA = pa.A;
        memoB = pa.B;
        memoE = er;
      }
    }
    c.e_margin = std::min(c.e_margin, er.delta);
    if (!er.passes) {
      std::ostringstream os;
      os << "common-zero test fails at center " << zs(zeta) << " (delta " << er.delta << " at z="
         << zs(er.argmin) << ")";
      fail(os.str());
    }

    RationalFunction par = pa.rational();
    bool identity = exact && par == f;
    all_identity = all_identity && identity;

    if (!identity) {
      for (int l = 0; l <= c.s; ++l) {
        const RationalFunction& fd = f_deriv(l);
        for (size_t iz = 0; iz < L.points.size(); ++iz) {
          Cd z = L.points[iz];
          ExtendedValue pv = pade_eval_deriv(pa, l, z, tol);
          ExtendedValue fv = fd.eval_extended(z, tol);
          double e = (pv.infinite || fv.infinite) ? kInf : std::abs(pv.value - fv.value);
          c.err_ii_per_l[size_t(l)] = std::max(c.err_ii_per_l[size_t(l)], e);
          c.err_ii_by_sample[iz] = std::max(c.err_ii_by_sample[iz], e);
        }
      }
    }

    double e3;
    if (identity && memo_err3) {
      e3 = *memo_err3;  // per-sample maxima already reflect this center
    } else {
      e3 = 0;
      for (size_t iz = 0; iz < K.points.size(); ++iz) {
        Cd z = K.points[iz];
        ExtendedValue pv = par.eval_extended(z, tol);
        ExtendedValue hv = h.eval_extended(z, tol);
        double e = metric == Metric::chordal
                       ? chi(pv, hv)
                       : ((pv.infinite || hv.infinite) ? kInf : std::abs(pv.value - hv.value));
        e3 = std::max(e3, e);
        c.err_iii_by_sample[iz] = std::max(c.err_iii_by_sample[iz], e);
      }
      if (identity) memo_err3 = e3;
    }
    c.err_iii = std::max(c.err_iii, e3);
  }

  c.err_ii = *std::max_element(c.err_ii_per_l.begin(), c.err_ii_per_l.end());
  c.exact_reproduction = exact && all_identity;
  if (!(c.err_ii < eps)) {
    std::ostringstream os;
    os << "err_ii = " << c.err_ii << " is not below eps = " << eps;
    fail(os.str());
  }
  if (!(c.err_iii < eps)) {
    std::ostringstream os;
    os << "err_iii = " << c.err_iii << " is not below eps = " << eps;
    fail(os.str());
  }
  c.passes = c.failures.empty();
  return c;
}

namespace {

Polynomial embed_poly(const Polynomial& p) {
  std::vector<ComplexScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(ComplexScalar::exact_from_cd(x.to_cd()));
  return Polynomial(std::move(c), Mode::exact);
}

RationalFunction embed_exact(const RationalFunction& r) {
  return RationalFunction(embed_poly(r.num()), embed_poly(r.den()));
}

// Exact jet values become weighted fit rows; points where fn still has a
// pole contribute no rows (the certificate, not the fit, judges them).
void add_targets(std::vector<FitTarget>& out, const CompactSample& pts,
                 const RationalFunction& fn, int G, const Tolerances& tol) {
  for (Cd z : pts.points) {
    TaylorJet jet;
    try {
      jet = jet_of_rational(fn, ComplexScalar::exact_from_cd(z), G, tol);
    } catch (const precondition_error&) {
      continue;
    }
    ComplexScalar fact = ComplexScalar::one(Mode::exact);
    for (int l = 0; l <= G; ++l) {
      if (l >= 2) fact = fact * ComplexScalar::integer(l, Mode::exact);
      out.push_back({z, l, (jet.coeff(l) * fact).to_cd()});
    }
  }
}

std::vector<PoleSite> basis_poles(const std::vector<const RationalFunction*>& fns,
                                  const ConstructionProblem& pr, const Tolerances& tol) {
  double thresh = std::max(tol.inclusion_for_h(pr.L.grid.h), tol.inclusion_for_h(pr.K.grid.h));
  std::vector<RootCluster> keep;
  for (const auto* f : fns) {
    if (f->den().degree_or(0) < 1) continue;
    for (const auto& rc : poly_roots(f->den().to_float(), tol)) {
      double dist = std::min(sample_distance(rc.root, pr.L), sample_distance(rc.root, pr.K));
      if (dist > thresh) keep.push_back(rc);
    }
  }
  std::sort(keep.begin(), keep.end(), [](const RootCluster& a, const RootCluster& b) {
    return a.root.real() != b.root.real() ? a.root.real() < b.root.real()
                                          : a.root.imag() < b.root.imag();
  });
  std::vector<PoleSite> sites;
  for (const auto& rc : keep) {
    if (!sites.empty() && std::abs(sites.back().location - rc.root) <= tol.tau_root)
      sites.back().multiplicity = std::max(sites.back().multiplicity, rc.multiplicity);
    else
      sites.push_back({rc.root, rc.multiplicity});
  }
  return sites;
}

UniversalWitness run_ladder(const ConstructionProblem& pr, const Polynomial& A,
                            const Polynomial& B, int p, int q, int T, double err_fit,
                            const Tolerances& tol) {
  double maxz = 0, maxzL = 0, maxB = 0;
  Polynomial Bf = B.to_float();
  for (Cd z : pr.L.points) {
    maxz = std::max(maxz, std::abs(z));
    maxzL = std::max(maxzL, std::abs(z));
    maxB = std::max(maxB, std::abs(Bf.eval_cd(z)));
  }
  for (Cd z : pr.K.points) {
    maxz = std::max(maxz, std::abs(z));
    maxB = std::max(maxB, std::abs(Bf.eval_cd(z)));
  }
  // Start well above the perturbation budget so the first rung fails; the
  // first passing rung then has an already-failed certificate at 2d.
  double d0 = 8.0 * pr.eps / (1.0 + std::pow(maxz, T) * maxB);

  UniversalWitness w;
  auto attempt = [&](double dj, Certificate& cert, RationalFunction& f) -> bool {
    ComplexScalar ds = ComplexScalar::exact_from_cd(Cd(dj, 0));
    Polynomial N = A + Polynomial::monomial(T, ds) * B;
    if (!coprime(N, B)) return false;
    f = RationalFunction(N, B);
    cert = verify_certificate(f, p, q, pr.L, pr.K, pr.h, pr.s, pr.eps, pr.metric, tol);
    cert.d = Cd(dj, 0);
    cert.T = T;
    cert.err_fit = err_fit;
    cert.perturbation = dj * std::pow(maxzL, T);
    return true;
  };

  for (int restart = 0; restart < kRestarts; ++restart) {
    w.ladder_d.clear();
    w.ladder_perturbation.clear();
    bool anchor_failed = false;
    for (int j = 0; j < kLadderLen; ++j) {
      double dj = std::ldexp(d0, -j);
      if (dj == 0) break;
      Certificate cert;
      RationalFunction f = RationalFunction::zero(Mode::exact);
      if (!attempt(dj, cert, f)) continue;  // d hit a common factor; next rung
      w.ladder_d.push_back(dj);
      w.ladder_perturbation.push_back(cert.perturbation);
#ifdef PADEU_LADDER_TRACE
      std::fprintf(stderr, "rung %d d=%.3e passes=%d err_ii=%.3e err_iii=%.3e", j, dj,
                   int(cert.passes), cert.err_ii, cert.err_iii);
      for (const auto& s : cert.failures) std::fprintf(stderr, " [%s]", s.c_str());
      std::fprintf(stderr, "\n");
#endif
      if (!cert.passes) {
        if (j == 0) anchor_failed = true;
        continue;
      }
      if (j == 0) break;  // ladder is not anchored; raise d0 and retry
      w.f = f;
      w.cert = cert;
      return w;
    }
    if (!anchor_failed && !w.ladder_d.empty()) {
      d0 *= 4;
      continue;
    }
    if (anchor_failed) throw pipeline_error("d-ladder exhausted without a passing certificate");
    break;
  }
  // Anchoring failed to bite (the target is insensitive to the perturbation);
  // fall back to the plain first rung.
  Certificate cert;
  RationalFunction f = RationalFunction::zero(Mode::exact);
  if (attempt(d0, cert, f) && cert.passes) {
    w.ladder_d.assign(1, d0);
    w.ladder_perturbation.assign(1, cert.perturbation);
    w.f = f;
    w.cert = cert;
    return w;
  }
  throw pipeline_error("d-ladder exhausted without a passing certificate");
}

}  // namespace

UniversalWitness construct_candidate(const ConstructionProblem& pr, const Tolerances& tol) {
  pr.validate(tol);
  if (pr.g.mode() != Mode::exact)
    throw precondition_error("construct_candidate needs exact-mode g and h");

  RationalFunction mu = embed_exact(principal_parts(pr.h.to_float(), pr.K, tol));
  RationalFunction gl = pr.g - mu;  // target on L
  RationalFunction hk = pr.h - mu;  // target on K, principal parts peeled off

  std::vector<PoleSite> sites = basis_poles({&pr.g, &hk}, pr, tol);

  FitOptions fo;
  fo.eps_fit = pr.eps / 2;

  int G = pr.s;
  int p = 0, q = 0, degB = 0;
  FitResult fit{RationalFunction::zero(Mode::floating), 0, 0, false};
  RationalFunction AB = RationalFunction::zero(Mode::exact);
  for (int pass = 0;; ++pass) {
    std::vector<FitTarget> targets;
    add_targets(targets, pr.L, gl, G, tol);
    add_targets(targets, pr.K, hk, G, tol);
    fit = runge_fit(targets, sites, fo);
    AB = mu + fit.fn;  // fit is already exact-mode
    int degA = AB.num().degree_or(0);
    degB = AB.den().degree_or(0);
    auto pq = pr.F.smallest_admissible(std::max(degA, degB), degB);
    if (!pq) throw pipeline_error("no admissible (p, q) in F: index set too small");
    p = pq->first;
    q = pq->second;
    int want = std::max(pr.s, std::min(p + q + 1, kGuardCap));
    if (pass >= 1 || want == G) break;
    G = want;
  }

  return run_ladder(pr, AB.num(), AB.den(), p, q, p - degB, fit.residual, tol);
}

UniversalWitness construct_candidate_poly(const ConstructionProblem& pr, const Tolerances& tol) {
  pr.validate(tol);
  if (pr.g.mode() != Mode::exact)
    throw precondition_error("construct_candidate_poly needs exact-mode g and h");
  if (pr.h.den().degree_or(0) != 0)
    throw precondition_error("construct_candidate_poly needs a polynomial target h");
  if (pr.metric != Metric::euclidean)
    throw precondition_error("construct_candidate_poly measures condition (iii) in the euclidean metric");
  if (!grid_complement_connected(pr.K))
    throw precondition_error("K must have a connected grid complement");

  FitOptions fo;
  fo.eps_fit = pr.eps / 2;

  int G = pr.s;
  int p = 0, q = 0;
  FitResult fit{RationalFunction::zero(Mode::floating), 0, 0, false};
  RationalFunction ht = RationalFunction::zero(Mode::exact);
  for (int pass = 0;; ++pass) {
    std::vector<FitTarget> targets;
    add_targets(targets, pr.L, pr.g, G, tol);
    add_targets(targets, pr.K, pr.h, G, tol);
    fit = runge_fit(targets, {}, fo);
    ht = fit.fn;
    if (ht.den().degree_or(0) != 0)
      throw pipeline_error("polynomial fit produced a nonconstant denominator");
    auto pq = pr.F.smallest_admissible(ht.num().degree_or(-1), -1);
    if (!pq) throw pipeline_error("no admissible (p, q) in F: index set too small");
    p = pq->first;
    q = pq->second;
    int want = std::max(pr.s, std::min(p + q + 1, kGuardCap));
    if (pass >= 1 || want == G) break;
    G = want;
  }

  Polynomial one = Polynomial::constant(ComplexScalar::one(Mode::exact));
  return run_ladder(pr, ht.num(), one, p, q, p, fit.residual, tol);
}

}  // namespace padeu
