#include "padeu/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "padeu/chordal.hpp"

namespace padeu {

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Polynomial dyadic_compress(const Polynomial& p, int k) {
  std::vector<ComplexScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    const auto& e = x.xval();
    c.push_back(ComplexScalar(ExactComplex{dyadic_round(e.re, k), dyadic_round(e.im, k)}));
  }
  return Polynomial(std::move(c), Mode::exact);
}

// d^l/dz^l of ((z-z0)/rho)^k at z.
Cd monomial_deriv(Cd z, Cd z0, double rho, int k, int l) {
  if (l > k) return {0, 0};
  double falling = 1;
  for (int t = 0; t < l; ++t) falling *= double(k - t);
  Cd u = (z - z0) / rho;
  return falling * std::pow(u, k - l) / std::pow(rho, l);
}

// d^l/dz^l of (z-pi)^(-j) at z.
Cd pole_deriv(Cd z, Cd pi, int j, int l) {
  double rising = 1;
  for (int t = 0; t < l; ++t) rising *= double(j + t);
  Cd w = 1.0 / (z - pi);
  Cd v = rising * std::pow(w, j + l);
  return (l % 2) ? -v : v;
}

}  // namespace

FitResult runge_fit(const std::vector<FitTarget>& targets, const std::vector<PoleSite>& poles,
                    const FitOptions& opts) {
  if (targets.empty()) throw precondition_error("runge_fit: no targets");
  if (opts.eps_fit <= 0) throw precondition_error("runge_fit: eps_fit must be positive");
  if (opts.min_degree < 0 || opts.max_degree < opts.min_degree || opts.degree_step < 1)
    throw precondition_error("runge_fit: bad degree schedule");
  if (opts.deriv_scale <= 0) throw precondition_error("runge_fit: deriv_scale must be positive");
  for (const auto& t : targets) {
    if (t.order < 0) throw precondition_error("runge_fit: negative derivative order");
    for (const auto& p : poles)
      if (std::abs(t.point - p.location) < 1e-14)
        throw precondition_error("runge_fit: target coincides with a basis pole");
  }
  for (const auto& p : poles)
    if (p.multiplicity < 1) throw precondition_error("runge_fit: pole multiplicity must be >= 1");

  Cd z0{0, 0};
  for (const auto& t : targets) z0 += t.point;
  z0 /= double(targets.size());
  double rho = 1;
  for (const auto& t : targets) rho = std::max(rho, std::abs(t.point - z0));

  int pole_cols = 0;
  for (const auto& p : poles) pole_cols += p.multiplicity;

  const size_t rows = targets.size();
  Eigen::VectorXcd rhs(rows);
  std::vector<double> weight(rows);
  for (size_t r = 0; r < rows; ++r) {
    weight[r] = std::pow(opts.deriv_scale, targets[r].order) / factorial(targets[r].order);
    rhs[long(r)] = weight[r] * targets[r].value;
  }

  double best_res = std::numeric_limits<double>::infinity();

  std::vector<int> schedule;
  for (int d = opts.min_degree;; d += opts.degree_step) {
    schedule.push_back(std::min(d, opts.max_degree));
    if (d >= opts.max_degree) break;
  }

  for (int D : schedule) {
    int cols = D + 1 + pole_cols;
    Eigen::MatrixXcd A(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
      const auto& t = targets[r];
      for (int k = 0; k <= D; ++k) A(long(r), k) = weight[r] * monomial_deriv(t.point, z0, rho, k, t.order);
      int c = D + 1;
      for (const auto& p : poles)
        for (int j = 1; j <= p.multiplicity; ++j)
          A(long(r), c++) = weight[r] * pole_deriv(t.point, p.location, j, t.order);
    }
    Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(rhs);
    double res = (A * sol - rhs).cwiseAbs().maxCoeff();
    // The computed residual is only meaningful down to the rounding noise of
    // the row sums; a huge cancelling solution can fake convergence.
    double mag = 0;
    for (size_t r = 0; r < rows; ++r) {
      double m = 0;
      for (int k = 0; k < cols; ++k) m += std::abs(A(long(r), k)) * std::abs(sol[k]);
      mag = std::max(mag, m);
    }
    res = std::max(res, mag * 1e-15);

    if (res >= opts.eps_fit) {
      best_res = std::min(best_res, res);
      continue;
    }

    // Rebuild sum sol_k ((z - z0)/rho)^k in exact arithmetic: the scaled
    // coefficients can be large and cancelling, and a basis change in doubles
    // loses far more than the achieved residual. The result stays in exact
    // mode; coefficients are compressed to kbits dyadic places, with kbits
    // chosen so the compression error on the target radius is below
    // eps_fit/8 a priori.
    double R = 1;
    for (const auto& t : targets) R = std::max(R, std::abs(t.point));
    int kbits = int(std::ceil((double(D) * std::log2(R) + std::log2(double(D) + 1) +
                               std::log2(8.0 / opts.eps_fit)))) +
                2;
    kbits = std::max(kbits, 64);
    Polynomial lin_u = Polynomial(
        {ComplexScalar::exact_from_cd(-z0) / ComplexScalar::exact_from_cd(Cd(rho, 0)),
         ComplexScalar::one(Mode::exact) / ComplexScalar::exact_from_cd(Cd(rho, 0))},
        Mode::exact);
    Polynomial acc = Polynomial::zero(Mode::exact);
    Polynomial base = Polynomial::constant(ComplexScalar::one(Mode::exact));
    for (int k = 0; k <= D; ++k) {
      acc = acc + base.scaled(ComplexScalar::exact_from_cd(sol[k]));
      if (k < D) base = base * lin_u;
    }
    acc = dyadic_compress(acc, kbits);
    RationalFunction fn = RationalFunction::from_poly(acc);
    int c = D + 1;
    for (const auto& p : poles) {
      Cd pl = p.location;
      Polynomial lin =
          Polynomial({ComplexScalar::exact_from_cd(-pl), ComplexScalar::one(Mode::exact)},
                     Mode::exact);
      Polynomial den = Polynomial::constant(ComplexScalar::one(Mode::exact));
      for (int t = 0; t < p.multiplicity; ++t) den = den * lin;
      Polynomial num = Polynomial::zero(Mode::exact);
      Polynomial pw = Polynomial::constant(ComplexScalar::one(Mode::exact));
      // coefficient of 1/(z-pi)^j pairs with (z-pi)^(m-j) in the numerator
      std::vector<Cd> cs(size_t(p.multiplicity));
      for (int j = 1; j <= p.multiplicity; ++j) cs[size_t(j - 1)] = sol[c++];
      for (int j = p.multiplicity; j >= 1; --j) {
        num = num + pw.scaled(ComplexScalar::exact_from_cd(cs[size_t(j - 1)]));
        pw = pw * lin;
      }
      fn = fn + RationalFunction(num, den);
    }

    return FitResult{fn, res, D, true};
  }

  std::ostringstream os;
  os << "runge_fit: degree cap " << opts.max_degree << " reached, best residual " << best_res
     << " (eps_fit " << opts.eps_fit << ")";
  throw pipeline_error(os.str());
}

}  // namespace padeu
