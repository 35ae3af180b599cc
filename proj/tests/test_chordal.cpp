#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "padeu/chordal.hpp"
#include "test_util.hpp"

using namespace padeu;
using namespace testutil;

namespace {

Polynomial fpoly(std::initializer_list<double> re) {
  std::vector<ComplexScalar> c;
  for (double v : re) c.push_back(ComplexScalar(Cd{v, 0}));
  return Polynomial(std::move(c), Mode::floating);
}

CompactSample circle_sample(int n) {
  CompactSample s;
  s.label = "circle";
  s.grid = GridSpec{-1.1, 1.1, -1.1, 1.1, 0.1};
  for (int k = 0; k < n; ++k) {
    double t = 2 * M_PI * k / n;
    s.points.push_back(Cd{std::cos(t), std::sin(t)});
  }
  s.normalize();
  return s;
}

ExtendedValue rand_point(Rng& g, bool allow_inf = true) {
  if (allow_inf && irand(g, 0, 9) == 0) return ExtendedValue::inf();
  return ExtendedValue::finite(crand(g, 5.0));
}

}  // namespace

TEST_CASE("chi: pinned values") {
  CHECK(chi(ExtendedValue::finite(Cd{0, 0}), ExtendedValue::inf()) == 1.0);
  CHECK(chi(ExtendedValue::inf(), ExtendedValue::inf()) == 0.0);
  CHECK(chi(Cd{1, 0}, Cd{-1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(chi(Cd{0, 0}, Cd{1, 0}) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(chi(ExtendedValue::finite(Cd{3, -4}), ExtendedValue::inf()) ==
        doctest::Approx(1.0 / std::sqrt(26.0)).epsilon(1e-15));
}

TEST_CASE("chi: metric axioms on random sphere triples") {
  auto g = make_rng(501);
  for (int t = 0; t < 10000; ++t) {
    ExtendedValue a = rand_point(g), b = rand_point(g), c = rand_point(g);
    double ab = chi(a, b), ba = chi(b, a), ac = chi(a, c), cb = chi(c, b);
    CHECK(ab == ba);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(ab <= ac + cb + 1e-12);
    CHECK(chi(a, a) == 0.0);
  }
}

TEST_CASE("chi is dominated by the euclidean distance") {
  auto g = make_rng(502);
  for (int t = 0; t < 2000; ++t) {
    Cd a = crand(g, 10.0), b = crand(g, 10.0);
    CHECK(chi(a, b) <= std::abs(a - b) + 1e-15);
  }
}

TEST_CASE("sup_chordal: identical functions, poles, and refinement") {
  CompactSample K = circle_sample(64);
  RationalFunction id = RationalFunction::from_poly(fpoly({0, 1}));
  CHECK(sup_chordal(id, id, K).sup == 0.0);

  // a pole against the infinite constant is a chordal match
  CompactSample origin;
  origin.label = "origin";
  origin.grid = GridSpec{-0.1, 0.1, -0.1, 0.1, 0.1};
  origin.points.push_back(Cd{0, 0});
  origin.normalize();
  RationalFunction inv(fpoly({1}), fpoly({0, 1}));
  SphereFn F = [&](Cd z) { return inv.eval_extended(z); };
  SphereFn G = [](Cd) { return ExtendedValue::inf(); };
  CHECK(sup_chordal(F, G, origin).sup == 0.0);

  // z vs z + 0.1 on the unit circle: analytic max at z = -1, and refining
  // the sample can only increase the sup
  RationalFunction shifted = RationalFunction::from_poly(fpoly({0.1, 1}));
  SupResult coarse = sup_chordal(id, shifted, K);
  SupResult fine = sup_chordal(id, shifted, circle_sample(640));
  double analytic = 0.1 / (std::sqrt(2.0) * std::sqrt(1.81));
  CHECK(fine.sup >= coarse.sup);
  CHECK(coarse.sup == doctest::Approx(analytic).epsilon(1e-2));
  CHECK(fine.sup == doctest::Approx(analytic).epsilon(1e-4));
  CHECK(std::abs(fine.argmax - Cd{-1, 0}) < 0.05);

  CompactSample empty;
  CHECK_THROWS_AS((void)sup_chordal(id, id, empty), precondition_error);
}

TEST_CASE("rationalize: dyadic coefficients come back exactly") {
  CompactSample K = circle_sample(32);
  RationalFunction q(fpoly({0.5, -0.25}), fpoly({1, 0.125}));
  RationalFunction r = rationalize(q, K, 1e-9);
  REQUIRE(r.mode() == Mode::exact);
  CHECK(sup_chordal(r, q, K).sup < 1e-14);
  // identical, up to the monic normalization, to the exact embedding
  auto dy = [](double v) { return ComplexScalar(ExactComplex{mpq_class(v), mpq_class(0)}); };
  RationalFunction want(Polynomial({dy(0.5), dy(-0.25)}, Mode::exact),
                        Polynomial({dy(1), dy(0.125)}, Mode::exact));
  CHECK(r == want);
}

TEST_CASE("rationalize: run-and-measure on non-dyadic targets") {
  CompactSample K = circle_sample(32);
  RationalFunction pi_z = RationalFunction::from_poly(fpoly({0, M_PI}));
  RationalFunction r = rationalize(pi_z, K, 1e-3);
  CHECK(r.mode() == Mode::exact);
  CHECK(sup_chordal(r, pi_z, K).sup < 1e-3);

  RationalFunction c = RationalFunction::from_poly(fpoly({M_PI}));
  RationalFunction rc = rationalize(c, K, 1e-6);
  CHECK(sup_chordal(rc, c, K).sup < 1e-6);

  // exact input passes through untouched
  RationalFunction already = rationalize(r, K, 1e-12);
  CHECK(already == r);
}

TEST_CASE("rationalize: failure and preconditions") {
  CompactSample K = circle_sample(32);
  RationalFunction c = RationalFunction::from_poly(fpoly({M_PI}));
  Tolerances tight;
  tight.rationalize_max_bits = 8;
  CHECK_THROWS_AS((void)rationalize(c, K, 1e-12, tight), pipeline_error);
  try {
    (void)rationalize(c, K, 1e-12, tight);
  } catch (const pipeline_error& e) {
    CHECK(std::string(e.what()).find("unachievable") != std::string::npos);
  }
  CHECK_THROWS_AS((void)rationalize(c, K, 0.0), precondition_error);
  CompactSample empty;
  CHECK_THROWS_AS((void)rationalize(c, empty, 1e-3), precondition_error);
}

TEST_CASE("dyadic_round: nearest multiple of 2^-k") {
  mpq_class third(1, 3);
  CHECK(dyadic_round(third, 2) == mpq_class(1, 4));
  CHECK(dyadic_round(mpq_class(-1, 3), 2) == mpq_class(-1, 4));
  CHECK(dyadic_round(0.0, 8) == 0);
  // k-bit dyadics are fixed points
  auto g = make_rng(503);
  for (int t = 0; t < 200; ++t) {
    mpq_class d(irand(g, -4000, 4000), 1);
    d /= 1024;  // denominator 2^10
    CHECK(dyadic_round(d, 10) == d);
    CHECK(dyadic_round(d, 14) == d);
  }
  // doubles are dyadic, so a deep enough rounding is the identity
  double x = 0.15625;
  CHECK(dyadic_round(x, 5) == mpq_class(5, 32));
  CHECK(dyadic_round(x, 40) == mpq_class(5, 32));
}
