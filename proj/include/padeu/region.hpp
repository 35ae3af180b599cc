#pragma once
#include <vector>

#include "padeu/grid.hpp"

namespace padeu {

// Closed-form membership predicate over the plane: primitive shapes plus
// boolean combinations. Degenerate annuli/sectors (r0 == r1 or th0 == th1)
// describe arcs and segments; they carry no grid area and are sampled
// parametrically instead.
struct Region {
  enum class Kind { disk, halfplane, annulus, sector, runion, rintersection, rcomplement };

  Kind kind = Kind::disk;
  bool closed = true;
  Cd center{0, 0};
  double r0 = 0, r1 = 0;
  double th0 = 0, th1 = 0;
  Cd normal{1, 0};  // halfplane outward normal, |normal| = 1
  double offset = 0;  // halfplane: Re(conj(normal) * z) <= offset
  std::vector<Region> children;

  static Region disk(Cd c, double r, bool closed = true);
  static Region halfplane(Cd outward_normal, double offset, bool closed = true);
  static Region annulus(Cd c, double r0, double r1, bool closed = true);
  static Region sector(Cd c, double r0, double r1, double th0, double th1, bool closed = true);
  static Region unite(std::vector<Region> parts);
  static Region intersect(std::vector<Region> parts);
  static Region complement(Region inner);
  static Region box(double x0, double x1, double y0, double y1, bool closed = true);
  static Region everything();

  bool contains(Cd z) const;
  // Signed distance, <= 0 on the set: exact for disks / half-planes /
  // annuli, a conservative min/max combination elsewhere.
  double sdf(Cd z) const;
  double dist_to_set(Cd z) const { return std::max(sdf(z), 0.0); }
  double dist_to_complement(Cd z) const { return std::max(-sdf(z), 0.0); }

  Region closure() const;
  Region interior() const;

  bool thin() const;
  void thin_samples(double spacing, std::vector<Cd>& out) const;
};

}  // namespace padeu
