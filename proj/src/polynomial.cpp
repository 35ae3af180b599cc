#include "padeu/polynomial.hpp"

#include <algorithm>

namespace padeu {

namespace {
void check_modes(const Polynomial& a, const Polynomial& b) {
  if (a.mode() != b.mode()) throw precondition_error("mixed-mode polynomial arithmetic");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_modes(*this, o);
  std::vector<ComplexScalar> r(std::max(c_.size(), o.c_.size()), ComplexScalar::zero(mode_));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r), mode_);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<ComplexScalar> r = c_;
  for (auto& x : r) x = -x;
  return Polynomial(std::move(r), mode_);
}

Polynomial Polynomial::scaled(const ComplexScalar& s) const {
  if (s.mode() != mode_) throw precondition_error("mixed-mode polynomial scale");
  std::vector<ComplexScalar> r = c_;
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r), mode_);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_modes(*this, o);
  if (c_.empty() || o.c_.empty()) return Polynomial(mode_);
  std::vector<ComplexScalar> r(c_.size() + o.c_.size() - 1, ComplexScalar::zero(mode_));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r), mode_);
}

ComplexScalar Polynomial::eval(const ComplexScalar& z) const {
  if (z.mode() != mode_) throw precondition_error("mixed-mode polynomial eval");
  ComplexScalar acc = ComplexScalar::zero(mode_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

Cd Polynomial::eval_cd(Cd z) const {
  if (mode_ != Mode::floating) throw precondition_error("eval_cd needs float mode");
  Cd acc{0, 0};
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].fval();
  return acc;
}

Polynomial Polynomial::shifted(const ComplexScalar& zeta) const {
  if (zeta.mode() != mode_) throw precondition_error("mixed-mode polynomial shift");
  // Synthetic division by (z - zeta), repeated: Horner-style Taylor shift.
  std::vector<ComplexScalar> w = c_;
  size_t n = w.size();
  for (size_t j = 0; j + 1 < n; ++j)
    for (size_t i = n - 1; i >= j + 1; --i) w[i - 1] += zeta * w[i];
  return Polynomial(std::move(w), mode_);
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial(mode_);
  std::vector<ComplexScalar> r(c_.size() - 1, ComplexScalar::zero(mode_));
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * ComplexScalar::integer(long(i), mode_);
  return Polynomial(std::move(r), mode_);
}

Polynomial Polynomial::truncated(int max_deg) const {
  if (max_deg < 0) return Polynomial(mode_);
  if (size_t(max_deg) + 1 >= c_.size()) return *this;
  return Polynomial(std::vector<ComplexScalar>(c_.begin(), c_.begin() + max_deg + 1), mode_);
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw precondition_error("cannot normalize the zero polynomial");
  ComplexScalar inv = ComplexScalar::one(mode_) / c_.back();
  return scaled(inv);
}

Polynomial Polynomial::to_float() const {
  std::vector<ComplexScalar> r;
  r.reserve(c_.size());
  for (const auto& x : c_) r.push_back(x.to_float());
  return Polynomial(std::move(r), Mode::floating);
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  check_modes(*this, divisor);
  if (divisor.is_zero()) throw precondition_error("polynomial division by zero");
  std::vector<ComplexScalar> rem = c_;
  int dd = *divisor.degree();
  int dn = int(rem.size()) - 1;
  if (dn < dd) return {Polynomial(mode_), *this};
  std::vector<ComplexScalar> quot(size_t(dn - dd) + 1, ComplexScalar::zero(mode_));
  ComplexScalar lead_inv = ComplexScalar::one(mode_) / divisor.leading();
  for (int k = dn - dd; k >= 0; --k) {
    ComplexScalar q = rem[size_t(k + dd)] * lead_inv;
    quot[size_t(k)] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dd; ++i) rem[size_t(k + i)] -= q * divisor.coeff(i);
  }
  rem.resize(size_t(dd) > 0 ? size_t(dd) : 0);
  return {Polynomial(std::move(quot), mode_), Polynomial(std::move(rem), mode_)};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.mode() != Mode::exact || b.mode() != Mode::exact)
    throw precondition_error("poly_gcd requires exact mode");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

bool coprime(const Polynomial& a, const Polynomial& b) {
  Polynomial g = poly_gcd(a, b);
  return g.degree() == std::optional<int>(0);
}

}  // namespace padeu
