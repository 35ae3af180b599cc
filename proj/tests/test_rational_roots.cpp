#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "padeu/compacta.hpp"
#include "padeu/principal_parts.hpp"
#include "padeu/roots.hpp"
#include "test_util.hpp"

using namespace padeu;
using namespace testutil;

namespace {

Polynomial fpoly(std::initializer_list<double> re) {
  std::vector<ComplexScalar> c;
  for (double v : re) c.push_back(ComplexScalar(Cd{v, 0}));
  return Polynomial(std::move(c), Mode::floating);
}

Polynomial from_roots(const std::vector<Cd>& roots) {
  Polynomial p = Polynomial::constant(ComplexScalar::one(Mode::floating));
  for (Cd r : roots)
    p = p * Polynomial({ComplexScalar(-r), ComplexScalar(Cd{1, 0})}, Mode::floating);
  return p;
}

CompactSample segment(double a, double b, double h) {
  CompactSample s;
  s.label = "segment";
  s.grid = GridSpec{a, b, -h, h, h};
  for (double x = a; x <= b + 1e-12; x += h) s.points.push_back(Cd{x, 0});
  s.normalize();
  return s;
}

}  // namespace

TEST_CASE("poly_roots: linear and double roots") {
  auto r1 = poly_roots(fpoly({-2, 1}));
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0].root - Cd{2, 0}) < 1e-12);
  CHECK(r1[0].multiplicity == 1);

  auto r2 = poly_roots(fpoly({1, -2, 1}));  // (z-1)^2
  REQUIRE(r2.size() == 1);
  CHECK(std::abs(r2[0].root - Cd{1, 0}) < 1e-6);
  CHECK(r2[0].multiplicity == 2);

  CHECK_THROWS_AS(poly_roots(fpoly({3})), precondition_error);
  CHECK_THROWS_AS(poly_roots(Polynomial::zero(Mode::floating)), precondition_error);
}

TEST_CASE("poly_roots: construct-from-roots recovery") {
  Rng g = make_rng(201);
  for (int t = 0; t < 25; ++t) {
    // well-separated roots so clustering cannot merge distinct ones
    std::vector<Cd> roots;
    while (roots.size() < size_t(irand(g, 1, 6))) {
      Cd c = crand(g, 3.0);
      bool ok = true;
      for (Cd r : roots) ok = ok && std::abs(r - c) > 0.3;
      if (ok) roots.push_back(c);
    }
    auto found = poly_roots(from_roots(roots));
    REQUIRE(found.size() == roots.size());
    std::sort(roots.begin(), roots.end(), [](Cd a, Cd b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(std::abs(found[i].root - roots[i]) < 1e-8);
      CHECK(found[i].multiplicity == 1);
    }
  }
}

TEST_CASE("principal_parts: explicit split 1/z + 1") {
  RationalFunction r(fpoly({1, 1}), fpoly({0, 1}));  // (1+z)/z = 1/z + 1
  CompactSample reg = segment(-0.5, 0.5, 0.125);
  RationalFunction mu = principal_parts(r, reg);
  // mu = 1/z
  REQUIRE(mu.den().degree_or(-1) == 1);
  CHECK(std::abs(mu.den().coeff(0).to_cd()) < 1e-12);
  CHECK(std::abs(mu.num().eval_cd(Cd{0, 0}) - Cd{1, 0}) < 1e-10);
  // R - mu is analytic on the region: the float difference has no gcd
  // cancellation, so probe just off the old pole instead of on it
  RationalFunction rest = r - mu;
  Cd pr{1e-3, 0};
  CHECK(std::abs(rest.num().eval_cd(pr) / rest.den().eval_cd(pr) - Cd{1, 0}) < 1e-8);
}

TEST_CASE("principal_parts: far poles contribute nothing") {
  RationalFunction r(fpoly({1}), fpoly({-4, 1}));  // 1/(z-4)
  CompactSample reg = segment(-0.5, 0.5, 0.125);
  CHECK(principal_parts(r, reg).is_zero());
}

TEST_CASE("principal_parts: residue oracle on 1/((z-2)(z-5))") {
  RationalFunction r(fpoly({1}), fpoly({10, -7, 1}));
  CompactSample reg = segment(1.5, 2.5, 0.125);
  RationalFunction mu = principal_parts(r, reg);
  // only the pole at 2 is inside; residue by limit with Richardson step to
  // kill the O(h) term: 2 L(h/2) - L(h) where L(h) = h R(2+h)
  auto lim = [&](double h) {
    Cd z{2 + h, 0};
    return Cd{h, 0} * r.num().eval_cd(z) / r.den().eval_cd(z);
  };
  double h = std::ldexp(1.0, -12);
  Cd by_limit = 2.0 * lim(h / 2) - lim(h);
  CHECK(std::abs(by_limit - Cd{-1.0 / 3.0, 0}) < 1e-8);
  // mu is a single simple pole with monic linear den, so its numerator
  // constant is the extracted residue
  REQUIRE(mu.den().degree_or(-1) == 1);
  REQUIRE(mu.num().degree_or(-1) == 0);
  CHECK(std::abs(mu.num().coeff(0).to_cd() - by_limit) < 1e-8);
}

TEST_CASE("principal_parts: multiple pole keeps full Laurent block") {
  // 1/(z-1)^2 + 2/(z-1) = (2z-1)/(z-1)^2
  RationalFunction r(fpoly({-1, 2}), fpoly({1, -2, 1}));
  CompactSample reg = segment(0.5, 1.5, 0.125);
  RationalFunction mu = principal_parts(r, reg);
  CHECK(mu.den().degree_or(-1) == 2);
  for (double x : {1.3, 0.7, 1.1}) {
    Cd z{x, 0.05};
    Cd rv = r.num().eval_cd(z) / r.den().eval_cd(z);
    Cd mv = mu.num().eval_cd(z) / mu.den().eval_cd(z);
    CHECK(std::abs(rv - mv) < 1e-9);  // difference is identically 0 here
  }
}

TEST_CASE("principal_parts: ambiguity band is rejected") {
  CompactSample reg = segment(-0.5, 0.5, 0.125);
  double tau_inc = reg.grid.h / 2;
  // pole exactly tau_inclusion away from the nearest sample: unstable verdict
  RationalFunction r(fpoly({1}), fpoly({-(0.5 + tau_inc), 1}));
  CHECK_THROWS_AS(principal_parts(r, reg), precondition_error);
  // nudge the pole outside the band and the verdict is clean again
  RationalFunction r2(fpoly({1}), fpoly({-(0.5 + tau_inc + 1e-3), 1}));
  CHECK(principal_parts(r2, reg).is_zero());
}

TEST_CASE("principal_parts: R - mu stays bounded on a fine scan") {
  Rng g = make_rng(202);
  Tolerances tol;
  for (int t = 0; t < 10; ++t) {
    // two poles straddling the region, one inside one outside
    Cd inside{urand(g, -0.3, 0.3), 0};
    Cd outside{urand(g, 2.0, 3.0), urand(g, -1.0, 1.0)};
    Polynomial den = Polynomial({ComplexScalar(-inside), ComplexScalar(Cd{1, 0})}, Mode::floating) *
                     Polynomial({ComplexScalar(-outside), ComplexScalar(Cd{1, 0})}, Mode::floating);
    Polynomial num = rand_poly(g, 1, Mode::floating);
    if (num.is_zero()) continue;
    RationalFunction r(num, den);
    CompactSample reg = segment(-0.5, 0.5, 0.125);
    RationalFunction rest = r - principal_parts(r, reg, tol);
    double cap = 1.0 / tol.tau_root;
    for (double x = -0.5; x <= 0.5; x += 0.01) {
      Cd z{x, 0.003};
      CHECK(std::abs(rest.num().eval_cd(z) / rest.den().eval_cd(z)) < cap);
    }
  }
}
