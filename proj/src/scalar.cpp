#include "padeu/scalar.hpp"

#include <sstream>

namespace padeu {

std::string rat_str(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rat_parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  try {
    mpq_class q(s);
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw parse_error("zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal '" + s + "'");
  }
}

std::string ComplexScalar::str() const {
  std::ostringstream os;
  if (is_exact()) {
    const auto& x = xval();
    os << rat_str(x.re) << (sgn(x.im) < 0 ? " - " : " + ") << rat_str(::abs(x.im)) << "i";
  } else {
    Cd z = fval();
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

}  // namespace padeu
