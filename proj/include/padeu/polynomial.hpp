#pragma once
#include <optional>
#include <vector>

#include "padeu/scalar.hpp"

namespace padeu {

// Dense polynomial, coefficients ascending, trailing zeros trimmed.
// The zero polynomial has an empty coefficient vector and no degree.
class Polynomial {
 public:
  Polynomial() : mode_(Mode::floating) {}
  explicit Polynomial(Mode m) : mode_(m) {}
  explicit Polynomial(std::vector<ComplexScalar> coeffs, Mode m) : mode_(m), c_(std::move(coeffs)) {
    for (const auto& x : c_)
      if (x.mode() != mode_) throw precondition_error("polynomial with mixed-mode coefficients");
    trim();
  }

  static Polynomial zero(Mode m) { return Polynomial(m); }
  static Polynomial constant(ComplexScalar v) {
    Mode m = v.mode();
    return Polynomial({std::move(v)}, m);
  }
  static Polynomial monomial(int k, ComplexScalar lead) {
    Mode m = lead.mode();
    std::vector<ComplexScalar> c(size_t(k) + 1, ComplexScalar::zero(m));
    c[size_t(k)] = std::move(lead);
    return Polynomial(std::move(c), m);
  }
  static Polynomial identity(Mode m) { return monomial(1, ComplexScalar::one(m)); }

  Mode mode() const { return mode_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return int(c_.size()) - 1;
  }
  // Degree with the convention deg 0 = -1, handy for size arithmetic.
  int degree_or(int fallback) const { return c_.empty() ? fallback : int(c_.size()) - 1; }

  ComplexScalar coeff(int k) const {
    if (k < 0 || size_t(k) >= c_.size()) return ComplexScalar::zero(mode_);
    return c_[size_t(k)];
  }
  const std::vector<ComplexScalar>& coeffs() const { return c_; }
  ComplexScalar leading() const {
    if (c_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const ComplexScalar& s) const;
  bool operator==(const Polynomial& o) const { return mode_ == o.mode_ && c_ == o.c_; }

  ComplexScalar eval(const ComplexScalar& z) const;
  Cd eval_cd(Cd z) const;  // float-mode fast path

  // P(z + zeta): recenter so the coefficient list is the Taylor jet at zeta.
  Polynomial shifted(const ComplexScalar& zeta) const;
  Polynomial derivative() const;
  Polynomial truncated(int max_deg) const;  // drop terms above max_deg
  Polynomial monic() const;
  Polynomial to_float() const;

  // Euclidean division; exact in exact mode, leading-coefficient pivots in float.
  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Mode mode_;
  std::vector<ComplexScalar> c_;
};

struct Polynomial::DivMod {
  Polynomial quot, rem;
};

// Exact monic gcd (euclidean algorithm); exact mode only.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

bool coprime(const Polynomial& a, const Polynomial& b);

}  // namespace padeu
