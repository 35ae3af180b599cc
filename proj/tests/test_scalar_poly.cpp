#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padeu/polynomial.hpp"
#include "padeu/rational_fn.hpp"
#include "test_util.hpp"

using namespace padeu;
using namespace testutil;

namespace {

ComplexScalar q(long nre, long dre, long nim = 0, long dim = 1) {
  mpq_class re(nre, dre), im(nim, dim);
  re.canonicalize();
  im.canonicalize();
  return ComplexScalar(ExactComplex{re, im});
}

Polynomial xpoly(std::initializer_list<long> ints) {
  std::vector<ComplexScalar> c;
  for (long v : ints) c.push_back(ComplexScalar::integer(v, Mode::exact));
  return Polynomial(std::move(c), Mode::exact);
}

// Naive power-sum evaluation, the oracle for Horner.
ComplexScalar eval_naive(const Polynomial& p, const ComplexScalar& z) {
  ComplexScalar acc = ComplexScalar::zero(p.mode());
  ComplexScalar pw = ComplexScalar::one(p.mode());
  for (int k = 0; k <= p.degree_or(-1); ++k) {
    acc += p.coeff(k) * pw;
    pw *= z;
  }
  return acc;
}

}  // namespace

TEST_CASE("scalar arithmetic: exact closure and identities") {
  Rng g = make_rng(101);
  for (int t = 0; t < 50; ++t) {
    ComplexScalar a = qrand(g), b = qrand_nonzero(g), c = qrand(g);
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
  }
  CHECK(ComplexScalar::rational(2, 4, Mode::exact) == q(1, 2));
  CHECK_THROWS_AS(q(1, 1) / ComplexScalar::zero(Mode::exact), precondition_error);
}

TEST_CASE("scalar modes: mixing is rejected, embedding is lossless") {
  ComplexScalar e = ComplexScalar::one(Mode::exact);
  ComplexScalar f = ComplexScalar::one(Mode::floating);
  CHECK_THROWS_AS(e + f, precondition_error);
  CHECK_THROWS_AS(f * e, precondition_error);
  CHECK(e != f);  // cross-mode equality is false, not an error

  Rng g = make_rng(102);
  for (int t = 0; t < 200; ++t) {
    Cd z{urand(g, -1e6, 1e6), urand(g, -1e-6, 1e-6)};
    CHECK(ComplexScalar::exact_from_cd(z).to_cd() == z);
  }
}

TEST_CASE("rational string round trip") {
  CHECK(rat_str(mpq_class(-3, 7)) == "-3/7");
  CHECK(rat_parse("22/7") == mpq_class(22, 7));
  Rng g = make_rng(103);
  for (int t = 0; t < 50; ++t) {
    mpq_class v(irand(g, -1000, 1000), irand(g, 1, 997));
    v.canonicalize();
    CHECK(rat_parse(rat_str(v)) == v);
  }
}

TEST_CASE("poly_eval matches the naive oracle") {
  CHECK(Polynomial::constant(q(1, 1)).eval(q(5, 1)) == q(1, 1));
  // z^2 at 1+i -> 2i
  Polynomial z2 = Polynomial::monomial(2, ComplexScalar::one(Mode::exact));
  CHECK(z2.eval(q(1, 1, 1, 1)) == q(0, 1, 2, 1));

  Rng g = make_rng(104);
  for (int t = 0; t < 40; ++t) {
    Polynomial p = rand_poly(g, int(irand(g, 0, 8)), Mode::exact);
    ComplexScalar z = qrand(g);
    CHECK(p.eval(z) == eval_naive(p, z));
  }
  for (int t = 0; t < 40; ++t) {
    Polynomial p = rand_poly(g, int(irand(g, 0, 8)), Mode::floating);
    ComplexScalar z(crand(g, 2.0));
    double scale = std::max(1.0, eval_naive(p, z).abs());
    CHECK((p.eval(z) - eval_naive(p, z)).abs() <= 1e-12 * scale);
  }
}

TEST_CASE("polynomial ring laws hold bit-for-bit in exact mode") {
  Rng g = make_rng(105);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = rand_poly(g, int(irand(g, 0, 6)), Mode::exact);
    Polynomial r = rand_poly(g, int(irand(g, 0, 6)), Mode::exact);
    Polynomial s = rand_poly(g, int(irand(g, 0, 6)), Mode::exact);
    CHECK((p + r) * s == p * s + r * s);
    CHECK(p * r == r * p);
    CHECK((p + r) + s == p + (r + s));
  }
}

TEST_CASE("degree bookkeeping and trimming") {
  Polynomial z = Polynomial::zero(Mode::exact);
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(z.degree_or(-1) == -1);
  CHECK_THROWS_AS(z.leading(), precondition_error);

  // trailing zeros trim away; a difference that cancels the top term drops degree
  Polynomial a = xpoly({1, 2, 3});
  Polynomial b = xpoly({0, 0, 3});
  CHECK((a - b).degree_or(-1) == 1);
  CHECK(Polynomial({q(0, 1), q(0, 1)}, Mode::exact).is_zero());
  CHECK_THROWS_AS(Polynomial({ComplexScalar::one(Mode::exact), ComplexScalar::one(Mode::floating)},
                             Mode::exact),
                  precondition_error);
}

TEST_CASE("shifted recenters correctly") {
  Rng g = make_rng(106);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = rand_poly(g, int(irand(g, 0, 6)), Mode::exact);
    ComplexScalar zeta = qrand(g), w = qrand(g);
    CHECK(p.shifted(zeta).eval(w) == p.eval(w + zeta));
  }
  Polynomial p = rand_poly(g, 4, Mode::exact);
  CHECK(p.shifted(ComplexScalar::zero(Mode::exact)) == p);
}

TEST_CASE("divmod is exact euclidean division") {
  Rng g = make_rng(107);
  for (int t = 0; t < 30; ++t) {
    Polynomial a = rand_poly(g, int(irand(g, 0, 8)), Mode::exact);
    Polynomial b = rand_poly(g, int(irand(g, 0, 4)), Mode::exact);
    auto dm = a.divmod(b);
    CHECK(dm.quot * b + dm.rem == a);
    CHECK(dm.rem.degree_or(-1) < b.degree_or(0));
  }
  CHECK_THROWS_AS(xpoly({1}).divmod(Polynomial::zero(Mode::exact)), precondition_error);
}

TEST_CASE("poly_gcd: worked examples and construct-then-check") {
  // gcd(z^2-1, z-1) = z-1
  CHECK(poly_gcd(xpoly({-1, 0, 1}), xpoly({-1, 1})) == xpoly({-1, 1}));
  // gcd(z+1, z+2) = 1
  CHECK(poly_gcd(xpoly({1, 1}), xpoly({2, 1})) == xpoly({1}));
  // gcd(0, B) = monic(B)
  CHECK(poly_gcd(Polynomial::zero(Mode::exact), xpoly({2, 4})) == xpoly({2, 4}).monic());

  Rng g = make_rng(108);
  for (int t = 0; t < 20; ++t) {
    Polynomial p = rand_poly(g, int(irand(g, 1, 3)), Mode::exact);
    Polynomial qq = rand_poly(g, int(irand(g, 1, 3)), Mode::exact);
    Polynomial r = rand_poly(g, int(irand(g, 1, 3)), Mode::exact);
    if (poly_gcd(qq, r).degree_or(0) != 0) continue;  // want coprime cofactors
    CHECK(poly_gcd(p * qq, p * r) == p.monic());
  }
  CHECK_THROWS_AS(poly_gcd(rand_poly(g, 2, Mode::floating), rand_poly(g, 2, Mode::floating)),
                  precondition_error);
}

TEST_CASE("rational function construction normalizes to coprime monic") {
  // (z^2-1)/(z-1) -> z+1
  RationalFunction r(xpoly({-1, 0, 1}), xpoly({-1, 1}));
  CHECK(r.num() == xpoly({1, 1}));
  CHECK(r.den() == xpoly({1}));
  // (2z)/2 -> z/1
  RationalFunction r2(xpoly({0, 2}), xpoly({2}));
  CHECK(r2.num() == xpoly({0, 1}));
  CHECK(r2.den() == xpoly({1}));

  Rng g = make_rng(109);
  for (int t = 0; t < 20; ++t) {
    RationalFunction rr = rand_rational(g, int(irand(g, 0, 4)), int(irand(g, 0, 4)));
    CHECK(coprime(rr.num(), rr.den()));
    CHECK(rr.den().leading() == ComplexScalar::one(Mode::exact));
    // renormalizing is idempotent
    CHECK(RationalFunction(rr.num(), rr.den()) == rr);
    // scaling num and den together leaves the function unchanged
    ComplexScalar c = qrand_nonzero(g);
    CHECK(RationalFunction(rr.num().scaled(c), rr.den().scaled(c)) == rr);
  }
  CHECK_THROWS_AS(RationalFunction(xpoly({1}), Polynomial::zero(Mode::exact)),
                  precondition_error);
}

TEST_CASE("rational derivatives: worked examples and finite differences") {
  // (z^2)' = 2z
  RationalFunction z2 = RationalFunction::from_poly(xpoly({0, 0, 1}));
  CHECK(z2.derivative() == RationalFunction::from_poly(xpoly({0, 2})));
  // (1/(1-z))'' = 2/(1-z)^3; monic denominator flips signs
  RationalFunction geo(xpoly({1}), xpoly({1, -1}));
  RationalFunction want(xpoly({-2}), xpoly({-1, 3, -3, 1}));
  CHECK(geo.derivative(2) == want);
  CHECK_THROWS_AS(geo.derivative(-1), precondition_error);

  Rng g = make_rng(110);
  int checked = 0;
  while (checked < 20) {
    Polynomial num = rand_poly(g, int(irand(g, 0, 3)), Mode::floating);
    Polynomial den = rand_poly(g, int(irand(g, 1, 3)), Mode::floating);
    if (num.is_zero()) continue;
    RationalFunction r(num, den);
    RationalFunction dr = r.derivative();
    Cd z = crand(g, 1.5);
    if (std::abs(r.den().eval_cd(z)) < 0.3) continue;  // stay clear of poles
    double h = 1e-6;
    Cd fd = (r.num().eval_cd(z + h) / r.den().eval_cd(z + h) -
             r.num().eval_cd(z - h) / r.den().eval_cd(z - h)) /
            (2 * h);
    Cd an = dr.num().eval_cd(z) / dr.den().eval_cd(z);
    double scale = std::max(1.0, std::abs(an));
    CHECK(std::abs(fd - an) <= 1e-5 * scale);
    ++checked;
  }
}

TEST_CASE("rational evaluation: pole handling") {
  RationalFunction geo(xpoly({1}), xpoly({1, -1}));  // 1/(1-z), normalized to -1/(z-1)
  CHECK(geo.eval(q(2, 1)) == q(-1, 1));
  CHECK_THROWS_AS(geo.eval(q(1, 1)), precondition_error);
  CHECK(geo.eval_extended(Cd{1, 0}).infinite);
  CHECK(!geo.eval_extended(Cd{0, 0}).infinite);

  RationalFunction geof = geo.to_float();
  Tolerances tol;
  CHECK(geof.eval_extended(Cd{1, 0}, tol).infinite);
  CHECK(geof.eval_extended(Cd{2, 0}, tol).value == Cd{-1, 0});
}
