#include "padeu/rational_fn.hpp"

namespace padeu {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.mode() != den_.mode()) throw precondition_error("mixed-mode rational function");
  if (den_.is_zero()) throw precondition_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(ComplexScalar::one(num_.mode()));
    return;
  }
  if (num_.mode() == Mode::exact) {
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree_or(0) > 0) {
      num_ = num_.divmod(g).quot;
      den_ = den_.divmod(g).quot;
    }
  }
  ComplexScalar inv = ComplexScalar::one(den_.mode()) / den_.leading();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction RationalFunction::derivative(int order) const {
  if (order < 0) throw precondition_error("negative derivative order");
  RationalFunction r = *this;
  for (int i = 0; i < order; ++i)
    r = RationalFunction(r.num_.derivative() * r.den_ - r.num_ * r.den_.derivative(),
                         r.den_ * r.den_);
  return r;
}

ComplexScalar RationalFunction::eval(const ComplexScalar& z) const {
  ComplexScalar d = den_.eval(z);
  if (d.is_zero()) throw precondition_error("evaluation at a pole");
  return num_.eval(z) / d;
}

ExtendedValue RationalFunction::eval_extended(Cd z, const Tolerances& tol) const {
  if (mode() == Mode::exact) {
    ComplexScalar zx = ComplexScalar::exact_from_cd(z);
    ComplexScalar d = den_.eval(zx);
    if (d.is_zero()) return ExtendedValue::inf();
    return ExtendedValue::finite((num_.eval(zx) / d).to_cd());
  }
  Cd d = den_.eval_cd(z);
  if (std::abs(d) <= tol.tau_pole) return ExtendedValue::inf();
  return ExtendedValue::finite(num_.eval_cd(z) / d);
}

}  // namespace padeu
