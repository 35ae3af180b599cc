#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padeu/compacta.hpp"
#include "padeu/fit.hpp"
#include "padeu/pade.hpp"

namespace padeu {

enum class Metric { chordal, euclidean };

inline const char* metric_name(Metric m) { return m == Metric::chordal ? "chordal" : "euclidean"; }

// Generator rule contributing a cofinal tail of index pairs.
struct FRule {
  enum class Kind { diagonal, fixed_q };
  Kind kind = Kind::diagonal;
  int q = 0;  // fixed_q only
};

// Finite explicit pairs plus generator rules; the rules guarantee that
// admissible pairs exist beyond any degree the pipeline produces.
struct IndexSetF {
  std::vector<std::pair<int, int>> pairs;
  std::vector<FRule> rules;

  static IndexSetF explicit_pairs(std::vector<std::pair<int, int>> ps) {
    IndexSetF f;
    f.pairs = std::move(ps);
    return f;
  }
  static IndexSetF diagonal() {
    IndexSetF f;
    f.rules.push_back({FRule::Kind::diagonal, 0});
    return f;
  }
  static IndexSetF fixed_q(int q) {
    IndexSetF f;
    f.rules.push_back({FRule::Kind::fixed_q, q});
    return f;
  }

  bool empty() const { return pairs.empty() && rules.empty(); }

  // Least member under (p+q, p) lexicographic order with p > pmin, q > qmin.
  std::optional<std::pair<int, int>> smallest_admissible(int pmin, int qmin) const;

  // Members generated up to the horizon, sorted by (p+q, p); for tail checks.
  std::vector<std::pair<int, int>> tail(int horizon) const;
};

struct ConstructionProblem {
  CompactSample L, K;
  RationalFunction g = RationalFunction::zero(Mode::exact);
  RationalFunction h = RationalFunction::zero(Mode::exact);
  IndexSetF F;
  int s = 0;
  double eps = 0;
  Metric metric = Metric::chordal;

  void validate(const Tolerances& tol = {}) const;  // throws precondition_error
};

// Measured outcome of one (f, p, q) candidate. The verify-computed core is
// reproducible bit-for-bit in exact mode; d, T, err_fit, perturbation are
// annotations the constructors fill in afterwards.
struct Certificate {
  int p = 0, q = 0;
  int s = 0;
  double eps = 0;
  std::string metric = "chordal";
  std::string arithmetic = "exact";

  bool passes = false;
  bool all_in_D = false;
  bool exact_reproduction = false;  // pade == f identically at every center
  double hankel_min_margin = 0;
  double e_margin = 0;
  double err_ii = 0;
  std::vector<double> err_ii_per_l;  // indices 0..s
  double err_iii = 0;
  std::vector<double> hankel_margins;      // aligned with L.points
  std::vector<double> err_ii_by_sample;    // per z in L, max over centers and l
  std::vector<double> err_iii_by_sample;   // per z in K, max over centers
  std::vector<std::string> failures;
  Tolerances tol;

  // construction annotations
  Cd d{0, 0};
  int T = 0;
  double err_fit = 0;
  double perturbation = 0;  // max over L of |d z^T|
};

struct UniversalWitness {
  RationalFunction f = RationalFunction::zero(Mode::exact);
  Certificate cert;
  // d-ladder trace over evaluated rungs, pass or fail; perturbations halve.
  std::vector<double> ladder_d;
  std::vector<double> ladder_perturbation;
};

// Checks conditions (i)-(iii) for the pair (p, q) over every center in L:
// Hankel nonsingularity, membership in E over K + L, derivative reproduction
// on L, and target approximation on K in the requested metric. Failures are
// recorded in the certificate, never thrown.
Certificate verify_certificate(const RationalFunction& f, int p, int q, const CompactSample& L,
                               const CompactSample& K, const RationalFunction& h, int s,
                               double eps, Metric metric, const Tolerances& tol = {});

// Rational-target construction: principal parts near K, exact two-set
// least-squares fit, then the perturbation f = (A + d z^T B)/B on a halving
// d-ladder until the certificate passes. The ladder is anchored so
// its first rung fails; doubling the returned d therefore reproduces an
// already-failed rung.
UniversalWitness construct_candidate(const ConstructionProblem& problem,
                                     const Tolerances& tol = {});

// Polynomial-target variant (euclidean metric on K): f = h_fit + d z^p.
UniversalWitness construct_candidate_poly(const ConstructionProblem& problem,
                                          const Tolerances& tol = {});

}  // namespace padeu
