#pragma once
#include <optional>

#include "padeu/grid.hpp"
#include "padeu/series.hpp"

namespace padeu {

struct HankelReport {
  int p = 0, q = 0;
  ComplexScalar zeta;
  ComplexScalar det;
  bool in_D = false;
  // Float mode: |det| / max row 1-norm, compared against tau_hankel.
  // Exact mode: |det| as a double, informational only. q = 0 gives +inf.
  double margin = 0;
};

enum class PadeSource { jacobi, solve };

// [p/q] approximant at zeta: A, B in the z basis, B monic, B(zeta) != 0,
// and the Taylor expansion of A/B at zeta agreeing with the source jet
// through order p + q.
struct PadeApproximant {
  int p = 0, q = 0;
  ComplexScalar zeta;
  Polynomial A, B;
  PadeSource source = PadeSource::jacobi;

  RationalFunction rational() const { return RationalFunction(A, B); }
  Mode mode() const { return A.mode(); }
};

// q x q Hankel test matrix entry (r, c) = a_{p-q+1+r+c}, coefficients of
// negative index read as zero. q = 0 is vacuously nonsingular.
HankelReport hankel_det(const TaylorJet& jet, int p, int q, const Tolerances& tol = {});

// Determinant construction: both numerator and denominator arise from the
// same (q+1) x (q+1) matrix pattern, differing only in the first row, so the
// cofactor minors are shared. Requires the Hankel test to pass.
PadeApproximant pade_jacobi(const TaylorJet& jet, int p, int q, const Tolerances& tol = {});

// Linear-system construction: B_0 = 1, solve the q accuracy-through-order
// equations for B_1..B_q, then A = (jet * B) truncated at degree p.
// Returns nullopt when elimination finds the system singular; this verdict
// is independent of hankel_det and must agree with it in exact mode.
std::optional<PadeApproximant> try_pade_solve(const TaylorJet& jet, int p, int q,
                                              const Tolerances& tol = {});
PadeApproximant pade_solve(const TaylorJet& jet, int p, int q, const Tolerances& tol = {});

struct EReport {
  bool passes = false;
  double delta = 0;  // min over the sample of |A(z)|^2 + |B(z)|^2
  Cd argmin{0, 0};
};

// Common-zero test on a sample: delta = min |A|^2 + |B|^2, passes iff
// delta > tau_E (compared exactly in exact mode).
EReport in_E(const PadeApproximant& pa, const CompactSample& K, const Tolerances& tol = {});

// l-th derivative of the approximant on the sphere.
ExtendedValue pade_eval_deriv(const PadeApproximant& pa, int l, Cd z, const Tolerances& tol = {});

struct Prop22Report {
  int k = 0, lambda = 0;  // coprime numerator/denominator degrees of phi
  bool in_D = false;
  bool reproduced = false;  // both constructions return phi itself
};

// Checks that an admissible (p, q) pair reproduces a rational phi at zeta:
// exact mode demands identity after normalization, float mode a chordal sup
// below tau_verify on 64 probes around zeta. Non-admissible (p, q) — that is,
// outside {(k, lambda)} U {(p, lambda): p > k} U {(k, q): q > lambda} — is a
// precondition violation.
Prop22Report verify_prop22(const RationalFunction& phi, const ComplexScalar& zeta, int p, int q,
                           const Tolerances& tol = {});

}  // namespace padeu
