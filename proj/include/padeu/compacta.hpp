#pragma once
#include "padeu/grid.hpp"
#include "padeu/region.hpp"

namespace padeu {

// Grid points of the region, plus parametric samples of any thin (zero-area)
// parts at spacing h.
CompactSample sample_region(const Region& region, const GridSpec& grid, const std::string& label);

// L_k = { lattice z in Omega : dist(z, complement) >= 1/k, |z| <= k }.
// Nested by construction. Rejects h > 1/(2n).
std::vector<CompactSample> exhausting_sequence(const Region& omega, const GridSpec& grid, int n);

// Adjoins every bounded complement component that lies entirely inside
// Omega; afterwards each complement component reaches the frame (the finite
// stand-in for infinity) or exits closure(Omega).
CompactSample fill_holes(const CompactSample& K, const Region& omega);

enum class ComplementMode { off_omega, off_closure };

// K_r = { lattice z : |z| <= r, z outside the (closed) region, dist >= 1/r },
// with eastward corridors carved until the complement of K_r is one
// flood-fill component.
std::vector<CompactSample> complement_exhaustion(const Region& omega, const GridSpec& grid,
                                                 ComplementMode mode, int m);

struct SplitSequences {
  std::vector<CompactSample> L;
  std::vector<CompactSample> K;
  std::vector<double> a;
};

// Disjoint families hugging the two boundary pieces: L_n collects closure(S)
// with a band of width a_n inside closure(Omega) plus the interior
// exhaustion; K_r mirrors this outside Omega around closure(T). The bands
// stay separated because 2*a_n + 2h never exceeds dist(closure S, closure T).
SplitSequences split_boundary_sequences(const Region& omega, const Region& S, const Region& T,
                                        const GridSpec& grid, int n_max);

// Half-disk example: L_n = {|z| <= 1 - 1/n} plus the upper sector
// {z != 0 : |z| <= 1, 1/n <= Arg z <= pi - 1/n}; K_1 = {|z| >= 1,
// -2 <= Re z <= 2, Im z <= 0} inside the grid box. Always disjoint.
std::pair<CompactSample, CompactSample> example_46_sets(const GridSpec& grid, int n);

// Point-set helpers shared by the constructions.
CompactSample union_samples(const CompactSample& a, const CompactSample& b,
                            const std::string& label);
double set_min_distance(const std::vector<Cd>& a, const std::vector<Cd>& b);
bool grid_complement_connected(const CompactSample& K);

}  // namespace padeu
