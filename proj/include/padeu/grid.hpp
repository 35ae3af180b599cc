#pragma once
#include <string>
#include <vector>

#include "padeu/errors.hpp"
#include "padeu/scalar.hpp"

namespace padeu {

// Axis-aligned sampling lattice: points x0 + i*h + I*(y0 + j*h).
struct GridSpec {
  double x0 = -2, x1 = 2, y0 = -2, y1 = 2;
  double h = 0.125;

  int nx() const { return int(std::floor((x1 - x0) / h + 0.5)) + 1; }
  int ny() const { return int(std::floor((y1 - y0) / h + 0.5)) + 1; }
  Cd point(int i, int j) const { return {x0 + i * h, y0 + j * h}; }

  bool valid() const { return h > 0 && x1 > x0 && y1 > y0; }

  // Nearest lattice index of z, or -1 if z is off the lattice by more than slack*h.
  bool locate(Cd z, int& i, int& j, double slack = 1e-9) const {
    double fi = (z.real() - x0) / h, fj = (z.imag() - y0) / h;
    i = int(std::lround(fi));
    j = int(std::lround(fj));
    if (std::abs(fi - i) > slack || std::abs(fj - j) > slack) return false;
    return i >= 0 && i < nx() && j >= 0 && j < ny();
  }
};

// Finite point sample of a compact set, tagged with the grid it came from.
// Points are deduplicated and sorted lexicographically (re, then im) so two
// samples of the same set compare equal.
struct CompactSample {
  std::string label;
  GridSpec grid;
  std::vector<Cd> points;

  void normalize();
  bool contains_point(Cd z, double eps = 1e-12) const;
  bool empty() const { return points.empty(); }
};

bool samples_disjoint(const CompactSample& a, const CompactSample& b, double eps = 1e-12);
double sample_distance(Cd z, const CompactSample& s);  // min over points, +inf if empty

}  // namespace padeu
