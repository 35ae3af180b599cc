#pragma once
#include "padeu/extended.hpp"
#include "padeu/polynomial.hpp"
#include "padeu/tolerances.hpp"

namespace padeu {

// Quotient of polynomials. rat_normalize is applied on construction: exact
// mode cancels the gcd and makes the denominator monic, float mode only
// normalizes the leading denominator coefficient.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction from_poly(Polynomial p) {
    Mode m = p.mode();
    return RationalFunction(std::move(p), Polynomial::constant(ComplexScalar::one(m)));
  }
  static RationalFunction zero(Mode m) { return from_poly(Polynomial::zero(m)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  Mode mode() const { return num_.mode(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction derivative(int order = 1) const;

  // Throws when the denominator vanishes at z (exactly, in exact mode).
  ComplexScalar eval(const ComplexScalar& z) const;
  // Pole-aware evaluation onto the sphere. In exact mode the pole test is
  // exact (after cancellation a zero denominator means a genuine pole);
  // in float mode |den(z)| <= tau_pole maps to infinity.
  ExtendedValue eval_extended(Cd z, const Tolerances& tol = {}) const;

  RationalFunction to_float() const {
    return RationalFunction(num_.to_float(), den_.to_float());
  }

 private:
  Polynomial num_, den_;
};

}  // namespace padeu
