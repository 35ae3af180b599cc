#pragma once
#include <gmpxx.h>

#include <complex>
#include <string>
#include <variant>

#include "padeu/errors.hpp"

namespace padeu {

using Cd = std::complex<double>;

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

// Complex number with rational real and imaginary parts.
struct ExactComplex {
  mpq_class re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  ExactComplex operator-() const { return {-re, -im}; }
  ExactComplex operator+(const ExactComplex& o) const { return {re + o.re, im + o.im}; }
  ExactComplex operator-(const ExactComplex& o) const { return {re - o.re, im - o.im}; }
  ExactComplex operator*(const ExactComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ExactComplex operator/(const ExactComplex& o) const {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw precondition_error("exact division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  bool operator==(const ExactComplex& o) const { return re == o.re && im == o.im; }

  ExactComplex conj() const { return {re, -im}; }
  mpq_class norm2() const { return re * re + im * im; }
  Cd to_cd() const { return {re.get_d(), im.get_d()}; }
};

// Runtime-tagged scalar: every container of these carries a single mode and
// mixed-mode arithmetic is a caller bug, reported as precondition_error.
class ComplexScalar {
 public:
  ComplexScalar() : v_(Cd{0.0, 0.0}) {}
  explicit ComplexScalar(ExactComplex x) : v_(std::move(x)) {}
  explicit ComplexScalar(Cd z) : v_(z) {}

  static ComplexScalar zero(Mode m) {
    return m == Mode::exact ? ComplexScalar(ExactComplex{}) : ComplexScalar(Cd{0, 0});
  }
  static ComplexScalar one(Mode m) {
    return m == Mode::exact ? ComplexScalar(ExactComplex{1, 0}) : ComplexScalar(Cd{1, 0});
  }
  static ComplexScalar integer(long n, Mode m) {
    return m == Mode::exact ? ComplexScalar(ExactComplex{mpq_class(n), 0})
                            : ComplexScalar(Cd(double(n), 0));
  }
  static ComplexScalar rational(long num, long den, Mode m) {
    if (m == Mode::exact) {
      mpq_class q(num, den);
      q.canonicalize();
      return ComplexScalar(ExactComplex{q, 0});
    }
    return ComplexScalar(Cd(double(num) / double(den), 0));
  }
  // Doubles are dyadic rationals, so this embedding is lossless.
  static ComplexScalar exact_from_cd(Cd z) {
    return ComplexScalar(ExactComplex{mpq_class(z.real()), mpq_class(z.imag())});
  }

  Mode mode() const { return std::holds_alternative<ExactComplex>(v_) ? Mode::exact : Mode::floating; }
  bool is_exact() const { return mode() == Mode::exact; }

  const ExactComplex& xval() const {
    if (!is_exact()) throw precondition_error("scalar is not in exact mode");
    return std::get<ExactComplex>(v_);
  }
  Cd fval() const {
    if (is_exact()) throw precondition_error("scalar is not in float mode");
    return std::get<Cd>(v_);
  }
  // Explicit lossy direction.
  Cd to_cd() const { return is_exact() ? std::get<ExactComplex>(v_).to_cd() : std::get<Cd>(v_); }
  ComplexScalar to_float() const { return ComplexScalar(to_cd()); }

  bool is_zero() const {
    return is_exact() ? std::get<ExactComplex>(v_).is_zero() : std::get<Cd>(v_) == Cd{0, 0};
  }
  double abs() const { return std::abs(to_cd()); }

  ComplexScalar operator-() const {
    return is_exact() ? ComplexScalar(-std::get<ExactComplex>(v_))
                      : ComplexScalar(-std::get<Cd>(v_));
  }
  ComplexScalar operator+(const ComplexScalar& o) const {
    check(o);
    return is_exact() ? ComplexScalar(std::get<ExactComplex>(v_) + o.xval())
                      : ComplexScalar(std::get<Cd>(v_) + o.fval());
  }
  ComplexScalar operator-(const ComplexScalar& o) const {
    check(o);
    return is_exact() ? ComplexScalar(std::get<ExactComplex>(v_) - o.xval())
                      : ComplexScalar(std::get<Cd>(v_) - o.fval());
  }
  ComplexScalar operator*(const ComplexScalar& o) const {
    check(o);
    return is_exact() ? ComplexScalar(std::get<ExactComplex>(v_) * o.xval())
                      : ComplexScalar(std::get<Cd>(v_) * o.fval());
  }
  ComplexScalar operator/(const ComplexScalar& o) const {
    check(o);
    if (!is_exact() && std::abs(o.fval()) == 0.0)
      throw precondition_error("float division by zero");
    return is_exact() ? ComplexScalar(std::get<ExactComplex>(v_) / o.xval())
                      : ComplexScalar(std::get<Cd>(v_) / o.fval());
  }
  ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
  ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
  ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

  ComplexScalar conj() const {
    return is_exact() ? ComplexScalar(std::get<ExactComplex>(v_).conj())
                      : ComplexScalar(std::conj(std::get<Cd>(v_)));
  }

  // Exact equality in exact mode; bitwise in float mode.
  bool operator==(const ComplexScalar& o) const {
    if (mode() != o.mode()) return false;
    return is_exact() ? xval() == o.xval() : fval() == o.fval();
  }
  bool operator!=(const ComplexScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check(const ComplexScalar& o) const {
    if (mode() != o.mode())
      throw precondition_error("mixed-mode scalar arithmetic (exact vs float)");
  }
  std::variant<ExactComplex, Cd> v_;
};

// "num/den" with both parts always present, deterministic.
std::string rat_str(const mpq_class& q);
mpq_class rat_parse(const std::string& s);

}  // namespace padeu
