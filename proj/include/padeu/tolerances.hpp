#pragma once

namespace padeu {

// Every numeric gate in the library reads from one of these knobs, so a run
// can be reproduced from the serialized set alone.
struct Tolerances {
  double tau_root = 1e-7;       // root clustering / pole-on-sample test
  double tau_inclusion = -1.0;  // pole-in-region distance; <0 means "h/2 of the grid in play"
  double tau_hankel = 1e-10;    // relative floor for float Hankel nonsingularity
  double tau_E = 1e-12;         // denominator floor for membership in E
  double tau_pole = 1e-12;      // |den(z)| below this evaluates to infinity
  double tau_verify = 1e-8;     // float certificate margins
  int rationalize_max_bits = 256;

  double inclusion_for_h(double h) const {
    return tau_inclusion >= 0 ? tau_inclusion : h / 2;
  }
};

}  // namespace padeu
