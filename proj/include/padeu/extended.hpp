#pragma once
#include <cmath>

#include "padeu/scalar.hpp"

namespace padeu {

// Point of the Riemann sphere: a finite complex value or infinity.
struct ExtendedValue {
  bool infinite = false;
  Cd value{0, 0};

  static ExtendedValue inf() { return {true, Cd{0, 0}}; }
  static ExtendedValue finite(Cd z) { return {false, z}; }
};

// Chordal metric on the sphere, range [0, 1] with chi(0, inf) = 1.
inline double chi(const ExtendedValue& a, const ExtendedValue& b) {
  auto lift = [](Cd z) { return std::sqrt(1.0 + std::norm(z)); };
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite) return 1.0 / lift(b.value);
  if (b.infinite) return 1.0 / lift(a.value);
  return std::abs(a.value - b.value) / (lift(a.value) * lift(b.value));
}

inline double chi(Cd a, Cd b) { return chi(ExtendedValue::finite(a), ExtendedValue::finite(b)); }

}  // namespace padeu
