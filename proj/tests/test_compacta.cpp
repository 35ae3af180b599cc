#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <queue>

#include "padeu/compacta.hpp"
#include "test_util.hpp"

using namespace padeu;
using namespace testutil;

namespace {

bool subset_of(const CompactSample& a, const CompactSample& b) {
  for (Cd z : a.points)
    if (!b.contains_point(z, 1e-9)) return false;
  return true;
}

// independent count of complement pockets sealed off from the plane: BFS
// over the grid nodes NOT in the sample, where touching the box edge means
// reaching the unbounded outside
int enclosed_pockets(const CompactSample& s) {
  int nx = s.grid.nx(), ny = s.grid.ny();
  std::vector<char> blocked(size_t(nx) * ny, 0);
  for (Cd z : s.points) {
    int i, j;
    if (s.grid.locate(z, i, j)) blocked[size_t(j) * nx + i] = 1;
  }
  std::vector<char> seen(size_t(nx) * ny, 0);
  int pockets = 0;
  for (int start = 0; start < nx * ny; ++start) {
    if (blocked[size_t(start)] || seen[size_t(start)]) continue;
    bool open = false;
    std::queue<int> bfs;
    bfs.push(start);
    seen[size_t(start)] = 1;
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop();
      int i = cur % nx, j = cur / nx;
      if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) open = true;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        int ii = i + di[d], jj = j + dj[d];
        if (ii < 0 || ii >= nx || jj < 0 || jj >= ny) continue;
        int nxt = jj * nx + ii;
        if (blocked[size_t(nxt)] || seen[size_t(nxt)]) continue;
        seen[size_t(nxt)] = 1;
        bfs.push(nxt);
      }
    }
    if (!open) ++pockets;
  }
  return pockets;
}

}  // namespace

TEST_CASE("exhausting_sequence: unit disk collapses L_1 to the center") {
  Region omega = Region::disk({0, 0}, 1, false);
  GridSpec grid{-2, 2, -2, 2, 0.125};
  auto L = exhausting_sequence(omega, grid, 4);
  REQUIRE(L.size() == 4);
  REQUIRE(L[0].points.size() == 1);
  CHECK(std::abs(L[0].points[0]) < 1e-12);
  for (size_t k = 0; k + 1 < L.size(); ++k) CHECK(subset_of(L[k], L[k + 1]));
  for (size_t k = 0; k < L.size(); ++k) {
    double r = 1.0 / double(k + 1);
    for (Cd z : L[k].points) {
      CHECK(omega.contains(z));
      CHECK(std::abs(z) <= double(k + 1) + 1e-12);
      CHECK(omega.dist_to_complement(z) >= r - 1e-12);
    }
  }
}

TEST_CASE("exhausting_sequence: the whole plane keeps every lattice point in range") {
  GridSpec grid{-2, 2, -2, 2, 0.25};
  auto L = exhausting_sequence(Region::everything(), grid, 2);
  size_t expect = 0;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i)
      if (std::abs(grid.point(i, j)) <= 2.0) ++expect;
  CHECK(L[1].points.size() == expect);
  for (Cd z : L[0].points) CHECK(std::abs(z) <= 1.0 + 1e-12);
}

TEST_CASE("exhausting_sequence: coarse grids are rejected") {
  GridSpec grid{-2, 2, -2, 2, 0.25};
  CHECK_THROWS_WITH_AS((void)exhausting_sequence(Region::everything(), grid, 4),
                       "grid too coarse for exhaustion depth 4: need h <= 0.125",
                       precondition_error);
  CHECK_THROWS_AS((void)exhausting_sequence(Region::everything(), grid, 0), precondition_error);
}

TEST_CASE("fill_holes: solid sets pass through, enclosed holes fill") {
  GridSpec grid{-2, 2, -2, 2, 0.125};
  Region disk = Region::disk({0, 0}, 1);
  CompactSample solid = sample_region(disk, grid, "disk");
  CompactSample same = fill_holes(solid, Region::disk({0, 0}, 1.5));
  CHECK(same.points == solid.points);

  Region ring = Region::annulus({0, 0}, 0.5, 1);
  CompactSample ringed = sample_region(ring, grid, "ring");
  CHECK_FALSE(ringed.contains_point(Cd{0, 0}));

  // hole interior lies inside Omega: it gets adjoined, giving the full disk
  CompactSample filled = fill_holes(ringed, Region::disk({0, 0}, 1.2));
  CHECK(filled.contains_point(Cd{0, 0}));
  CHECK(filled.points == solid.points);
  CompactSample again = fill_holes(filled, Region::disk({0, 0}, 1.2));
  CHECK(again.points == filled.points);

  // hole interior exits Omega: it must stay a hole
  CompactSample kept = fill_holes(ringed, Region::annulus({0, 0}, 0.4, 1.2));
  CHECK_FALSE(kept.contains_point(Cd{0, 0}));
  CHECK(kept.points == ringed.points);
}

TEST_CASE("fill_holes: rejects samples leaving closure(Omega)") {
  GridSpec grid{-2, 2, -2, 2, 0.125};
  CompactSample far = sample_region(Region::disk({1.5, 0}, 0.3), grid, "far");
  CHECK_THROWS_WITH_AS((void)fill_holes(far, Region::disk({0, 0}, 1)),
                       "fill_holes: sample point outside closure(Omega)", precondition_error);
}

TEST_CASE("complement_exhaustion: halfplane gap, nesting, connectivity") {
  Region omega = Region::halfplane(Cd{1, 0}, 0);  // Re z <= 0
  GridSpec grid{-2, 2, -2, 2, 0.125};
  auto K = complement_exhaustion(omega, grid, ComplementMode::off_closure, 3);
  REQUIRE(K.size() == 3);
  for (size_t r = 0; r < K.size(); ++r) {
    double gap = 1.0 / double(r + 1);
    CHECK_FALSE(K[r].points.empty());
    for (Cd z : K[r].points) {
      CHECK(z.real() >= gap - 1e-9);
      CHECK(std::abs(z) <= double(r + 1) + 1e-12);
    }
    // carving leaves no complement pocket sealed off from the plane
    CHECK(enclosed_pockets(K[r]) == 0);
    CHECK(grid_complement_connected(K[r]));
  }
  for (size_t r = 0; r + 1 < K.size(); ++r) CHECK(subset_of(K[r], K[r + 1]));
}

TEST_CASE("complement_exhaustion: nothing lies outside the whole plane") {
  GridSpec grid{-2, 2, -2, 2, 0.25};
  auto K = complement_exhaustion(Region::everything(), grid, ComplementMode::off_omega, 2);
  for (const auto& k : K) CHECK(k.points.empty());
}

TEST_CASE("complement_exhaustion: enclosing bands get carved open") {
  // K_2 around a small disk is a full annulus: it encloses a pocket at the
  // origin and pinches off the four grid corners, all of which the corridor
  // carving must reopen
  Region omega = Region::disk({0, 0}, 0.5);
  GridSpec grid{-2, 2, -2, 2, 0.125};
  auto K = complement_exhaustion(omega, grid, ComplementMode::off_omega, 3);
  REQUIRE(K.size() == 3);
  CHECK_FALSE(K[1].points.empty());
  CHECK_FALSE(K[2].points.empty());
  for (const auto& k : K) {
    CHECK(enclosed_pockets(k) == 0);
    CHECK(grid_complement_connected(k));
  }
  CHECK(subset_of(K[0], K[1]));
  CHECK(subset_of(K[1], K[2]));
}

TEST_CASE("split_boundary_sequences: boundary arcs of the disk") {
  Region omega = Region::disk({0, 0}, 1, false);
  Region S = Region::sector({0, 0}, 1, 1, M_PI / 4, 3 * M_PI / 4);
  Region T = Region::sector({0, 0}, 1, 1, 5 * M_PI / 4, 7 * M_PI / 4);
  GridSpec grid{-2, 2, -2, 2, 1.0 / 32};
  SplitSequences seq = split_boundary_sequences(omega, S, T, grid, 2);
  REQUIRE(seq.L.size() == 2);
  REQUIRE(seq.K.size() == 2);
  REQUIRE(seq.a.size() == 2);
  CHECK(seq.a[0] > 0);
  for (const auto& Ln : seq.L)
    for (const auto& Kr : seq.K) CHECK(samples_disjoint(Ln, Kr, 1e-9));
  CHECK(subset_of(seq.L[0], seq.L[1]));
  // the arc itself is in every L_n, including off-lattice parametric samples
  Cd top{std::cos(M_PI / 2), std::sin(M_PI / 2)};
  CHECK(seq.L[0].contains_point(top, 1e-9));
  CHECK(seq.K[0].contains_point(Cd{0, -1}, 1e-9));
}

TEST_CASE("split_boundary_sequences: touching pieces violate separation") {
  Region omega = Region::disk({0, 0}, 1, false);
  Region S = Region::sector({0, 0}, 1, 1, M_PI / 4, 3 * M_PI / 4);
  GridSpec grid{-2, 2, -2, 2, 1.0 / 32};
  CHECK_THROWS_AS((void)split_boundary_sequences(omega, S, S, grid, 2), precondition_error);
  try {
    (void)split_boundary_sequences(omega, S, S, grid, 2);
  } catch (const precondition_error& e) {
    CHECK(std::string(e.what()).find("separation precondition") != std::string::npos);
  }
}

TEST_CASE("example_46_sets: membership pins and disjointness") {
  GridSpec grid{-2, 2, -2, 2, 0.125};
  auto [L, K] = example_46_sets(grid, 2);
  CHECK_FALSE(L.contains_point(Cd{1, 0}, 1e-9));
  CHECK(K.contains_point(Cd{0, -1}, 1e-9));
  Cd e_m45{std::cos(-M_PI / 4), std::sin(-M_PI / 4)};
  CHECK_FALSE(L.contains_point(e_m45, 1e-9));
  CHECK(samples_disjoint(L, K, 1e-9));

  GridSpec fine{-2, 2, -2, 2, 1.0 / 32};
  for (int n = 2; n <= 8; n += 3) {
    auto [Ln, Kn] = example_46_sets(fine, n);
    CHECK_FALSE(Ln.points.empty());
    CHECK_FALSE(Kn.points.empty());
    CHECK(samples_disjoint(Ln, Kn, 1e-9));
  }

  CHECK_THROWS_WITH_AS((void)example_46_sets(grid, 3),
                       "resolution bound violated: need h <= 0.0833333", precondition_error);
}

TEST_CASE("point-set helpers") {
  CompactSample a, b;
  a.grid = b.grid = GridSpec{-2, 2, -2, 2, 0.5};
  a.label = "a";
  b.label = "b";
  a.points = {Cd{0, 0}, Cd{0.5, 0}};
  b.points = {Cd{0.5, 0}, Cd{3, 4}};
  a.normalize();
  b.normalize();
  CompactSample u = union_samples(a, b, "u");
  CHECK(u.points.size() == 3);
  CHECK(set_min_distance(std::vector<Cd>{Cd{0, 0}}, std::vector<Cd>{Cd{3, 4}}) ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK_FALSE(samples_disjoint(a, b, 1e-12));

  GridSpec grid{-2, 2, -2, 2, 0.125};
  CompactSample ring = sample_region(Region::annulus({0, 0}, 0.6, 1.0), grid, "ring");
  CHECK_FALSE(grid_complement_connected(ring));
  CompactSample solid = sample_region(Region::disk({0, 0}, 1), grid, "solid");
  CHECK(grid_complement_connected(solid));
}
