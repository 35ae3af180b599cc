#include "padeu/compacta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace padeu {

void CompactSample::normalize() {
  auto lex = [](Cd a, Cd b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(points.begin(), points.end(), lex);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool CompactSample::contains_point(Cd z, double eps) const {
  for (Cd p : points)
    if (std::abs(p - z) <= eps) return true;
  return false;
}

double sample_distance(Cd z, const CompactSample& s) {
  double best = std::numeric_limits<double>::infinity();
  for (Cd p : s.points) best = std::min(best, std::abs(p - z));
  return best;
}

double set_min_distance(const std::vector<Cd>& a, const std::vector<Cd>& b) {
  double best = std::numeric_limits<double>::infinity();
  for (Cd x : a)
    for (Cd y : b) best = std::min(best, std::abs(x - y));
  return best;
}

namespace {

long long cell_key(double v, double c) { return (long long)std::floor(v / c); }

struct PointHash {
  double cell;
  std::unordered_map<long long, std::vector<Cd>> buckets;

  explicit PointHash(double c) : cell(c) {}
  static long long mix(long long a, long long b) { return a * 1000003LL + b; }

  void insert(Cd z) { buckets[mix(cell_key(z.real(), cell), cell_key(z.imag(), cell))].push_back(z); }

  bool any_within(Cd z, double eps) const {
    long long cx = cell_key(z.real(), cell), cy = cell_key(z.imag(), cell);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find(mix(cx + dx, cy + dy));
        if (it == buckets.end()) continue;
        for (Cd p : it->second)
          if (std::abs(p - z) <= eps) return true;
      }
    return false;
  }
};

}  // namespace

bool samples_disjoint(const CompactSample& a, const CompactSample& b, double eps) {
  if (a.points.empty() || b.points.empty()) return true;
  PointHash h(std::max(eps, 1e-12));
  for (Cd z : a.points) h.insert(z);
  for (Cd z : b.points)
    if (h.any_within(z, eps)) return false;
  return true;
}

CompactSample union_samples(const CompactSample& a, const CompactSample& b,
                            const std::string& label) {
  CompactSample u;
  u.label = label;
  u.grid = a.grid;
  u.points = a.points;
  u.points.insert(u.points.end(), b.points.begin(), b.points.end());
  u.normalize();
  return u;
}

CompactSample sample_region(const Region& region, const GridSpec& grid, const std::string& label) {
  if (!grid.valid()) throw precondition_error("invalid grid");
  CompactSample s;
  s.label = label;
  s.grid = grid;
  int nx = grid.nx(), ny = grid.ny();
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Cd z = grid.point(i, j);
      if (region.contains(z)) s.points.push_back(z);
    }
  std::vector<Cd> thin;
  region.thin_samples(grid.h, thin);
  for (Cd z : thin)
    if (z.real() >= grid.x0 - 1e-12 && z.real() <= grid.x1 + 1e-12 &&
        z.imag() >= grid.y0 - 1e-12 && z.imag() <= grid.y1 + 1e-12)
      s.points.push_back(z);
  s.normalize();
  return s;
}

std::vector<CompactSample> exhausting_sequence(const Region& omega, const GridSpec& grid, int n) {
  if (n < 1) throw precondition_error("exhausting_sequence needs n >= 1");
  if (grid.h > 1.0 / (2 * n)) {
    std::ostringstream os;
    os << "grid too coarse for exhaustion depth " << n << ": need h <= " << 1.0 / (2 * n);
    throw precondition_error(os.str());
  }
  std::vector<CompactSample> out;
  int nx = grid.nx(), ny = grid.ny();
  for (int k = 1; k <= n; ++k) {
    CompactSample s;
    s.label = "L" + std::to_string(k);
    s.grid = grid;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        Cd z = grid.point(i, j);
        if (std::abs(z) > double(k)) continue;
        if (!omega.contains(z)) continue;
        if (omega.dist_to_complement(z) >= 1.0 / k) s.points.push_back(z);
      }
    s.normalize();
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Mask {
  GridSpec grid;
  int nx = 0, ny = 0;
  std::vector<char> on;

  explicit Mask(const GridSpec& g) : grid(g), nx(g.nx()), ny(g.ny()), on(size_t(nx) * ny, 0) {}

  size_t idx(int i, int j) const { return size_t(j) * nx + i; }
  bool get(int i, int j) const { return on[idx(i, j)] != 0; }
  void set(int i, int j, bool v) { on[idx(i, j)] = v ? 1 : 0; }

  static Mask from_sample(const CompactSample& s) {
    Mask m(s.grid);
    for (Cd z : s.points) {
      int i, j;
      if (s.grid.locate(z, i, j)) m.set(i, j, true);
    }
    return m;
  }

  std::vector<Cd> lattice_points() const {
    std::vector<Cd> out;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if (get(i, j)) out.push_back(grid.point(i, j));
    return out;
  }
};

struct Components {
  std::vector<int> label;  // -1 off the filled set
  int count = 0;
  std::vector<char> frame;                // component touches the grid frame
  std::vector<std::vector<size_t>> cells;
};

// 4-connected components of the true cells of `in`.
Components flood(const std::vector<char>& in, int nx, int ny) {
  Components c;
  c.label.assign(in.size(), -1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      size_t at = size_t(j) * nx + i;
      if (!in[at] || c.label[at] >= 0) continue;
      int id = c.count++;
      c.frame.push_back(0);
      c.cells.emplace_back();
      std::queue<std::pair<int, int>> q;
      q.push({i, j});
      c.label[at] = id;
      while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        size_t here = size_t(y) * nx + x;
        c.cells[size_t(id)].push_back(here);
        if (x == 0 || y == 0 || x == nx - 1 || y == ny - 1) c.frame[size_t(id)] = 1;
        const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
        for (int t = 0; t < 4; ++t) {
          int u = x + dx[t], v = y + dy[t];
          if (u < 0 || v < 0 || u >= nx || v >= ny) continue;
          size_t n = size_t(v) * nx + u;
          if (!in[n] || c.label[n] >= 0) continue;
          c.label[n] = id;
          q.push({u, v});
        }
      }
    }
  return c;
}

std::vector<char> complement_of(const Mask& m) {
  std::vector<char> inv(m.on.size());
  for (size_t i = 0; i < inv.size(); ++i) inv[i] = m.on[i] ? 0 : 1;
  return inv;
}

// Complement padded with a one-cell halo: the plane outside the grid box is
// complement too, so components split only by the box edge stay connected.
std::vector<char> complement_with_halo(const Mask& m) {
  int px = m.nx + 2, py = m.ny + 2;
  std::vector<char> inv(size_t(px) * py, 1);
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      if (m.get(i, j)) inv[size_t(j + 1) * px + (i + 1)] = 0;
  return inv;
}

}  // namespace

CompactSample fill_holes(const CompactSample& K, const Region& omega) {
  Region closure = omega.closure();
  for (Cd z : K.points)
    if (!closure.contains(z) && omega.dist_to_set(z) > 1e-9)
      throw precondition_error("fill_holes: sample point outside closure(Omega)");

  Mask m = Mask::from_sample(K);
  Components comp = flood(complement_of(m), m.nx, m.ny);
  CompactSample out = K;
  for (int id = 0; id < comp.count; ++id) {
    if (comp.frame[size_t(id)]) continue;
    bool inside = true;
    for (size_t cell : comp.cells[size_t(id)]) {
      Cd z = m.grid.point(int(cell % m.nx), int(cell / m.nx));
      if (!omega.contains(z)) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    for (size_t cell : comp.cells[size_t(id)])
      out.points.push_back(m.grid.point(int(cell % m.nx), int(cell / m.nx)));
  }
  out.normalize();
  return out;
}

bool grid_complement_connected(const CompactSample& K) {
  Mask m = Mask::from_sample(K);
  Components comp = flood(complement_with_halo(m), m.nx + 2, m.ny + 2);
  return comp.count <= 1;
}

std::vector<CompactSample> complement_exhaustion(const Region& omega, const GridSpec& grid,
                                                 ComplementMode mode, int m) {
  if (m < 1) throw precondition_error("complement_exhaustion needs m >= 1");
  Region reg = mode == ComplementMode::off_closure ? omega.closure() : omega;
  std::vector<Mask> masks;
  for (int r = 1; r <= m; ++r) {
    Mask mask(grid);
    for (int j = 0; j < mask.ny; ++j)
      for (int i = 0; i < mask.nx; ++i) {
        Cd z = grid.point(i, j);
        if (std::abs(z) > double(r)) continue;
        if (reg.contains(z)) continue;
        if (reg.dist_to_set(z) >= 1.0 / r) mask.set(i, j, true);
      }
    masks.push_back(std::move(mask));
  }

  // Carve eastward corridors until no complement pocket is cut off from the
  // plane outside (the halo). A corridor carved for one radius is carved in
  // every mask so the K_r stay nested; extra carving only merges complement
  // components, never splits them.
  for (size_t at = 0; at < masks.size(); ++at) {
    Mask& mask = masks[at];
    int px = mask.nx + 2;
    for (int guard = 0; guard < mask.nx * mask.ny; ++guard) {
      Components comp = flood(complement_with_halo(mask), px, mask.ny + 2);
      int pocket = -1;
      size_t head = 0;
      for (int id = 0; id < comp.count; ++id) {
        if (comp.frame[size_t(id)]) continue;  // reaches the halo: not enclosed
        size_t lead = *std::min_element(comp.cells[size_t(id)].begin(),
                                        comp.cells[size_t(id)].end());
        if (pocket < 0 || lead < head) {
          pocket = id;
          head = lead;
        }
      }
      if (pocket < 0) break;
      int j = int(head / px) - 1;
      for (int i = int(head % px) - 1; i < mask.nx; ++i)
        for (auto& mk : masks) mk.set(i, j, false);
    }
  }

  std::vector<CompactSample> out;
  for (size_t at = 0; at < masks.size(); ++at) {
    CompactSample s;
    s.label = "K" + std::to_string(at + 1);
    s.grid = grid;
    s.points = masks[at].lattice_points();
    s.normalize();
    if (!grid_complement_connected(s))
      throw pipeline_error("complement_exhaustion: corridor carving failed to connect");
    out.push_back(std::move(s));
  }
  return out;
}

SplitSequences split_boundary_sequences(const Region& omega, const Region& S, const Region& T,
                                        const GridSpec& grid, int n_max) {
  if (n_max < 1) throw precondition_error("split_boundary_sequences needs n_max >= 1");
  CompactSample Sbar = sample_region(S.closure(), grid, "Sbar");
  CompactSample Tbar = sample_region(T.closure(), grid, "Tbar");

  double a = 0;
  bool have_bands = !Sbar.points.empty() && !Tbar.points.empty();
  if (have_bands) {
    double dsep = set_min_distance(Sbar.points, Tbar.points);
    if (dsep <= 2 * grid.h) {
      std::ostringstream os;
      os << "separation precondition: dist(closure S, closure T) = " << dsep
         << " must exceed 2h = " << 2 * grid.h;
      throw precondition_error(os.str());
    }
    a = dsep / 2 - grid.h;
  }

  std::vector<CompactSample> Lpp = exhausting_sequence(omega, grid, n_max);
  std::vector<CompactSample> Kpp = complement_exhaustion(omega, grid, ComplementMode::off_closure,
                                                         n_max);
  Region obar = omega.closure();

  SplitSequences res;
  res.a.assign(size_t(n_max), a);
  int nx = grid.nx(), ny = grid.ny();
  for (int n = 1; n <= n_max; ++n) {
    CompactSample Ln;
    Ln.label = "L" + std::to_string(n);
    Ln.grid = grid;
    if (have_bands) {
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          Cd z = grid.point(i, j);
          if (!obar.contains(z)) continue;
          if (sample_distance(z, Sbar) <= a) Ln.points.push_back(z);
        }
      Ln.points.insert(Ln.points.end(), Sbar.points.begin(), Sbar.points.end());
    }
    Ln.points.insert(Ln.points.end(), Lpp[size_t(n - 1)].points.begin(),
                     Lpp[size_t(n - 1)].points.end());
    Ln.normalize();
    Ln = fill_holes(Ln, omega);
    Ln.label = "L" + std::to_string(n);
    res.L.push_back(std::move(Ln));

    CompactSample Kr;
    Kr.label = "K" + std::to_string(n);
    Kr.grid = grid;
    if (have_bands) {
      for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
          Cd z = grid.point(i, j);
          if (omega.contains(z)) continue;
          if (sample_distance(z, Tbar) <= a) Kr.points.push_back(z);
        }
      Kr.points.insert(Kr.points.end(), Tbar.points.begin(), Tbar.points.end());
    }
    Kr.points.insert(Kr.points.end(), Kpp[size_t(n - 1)].points.begin(),
                     Kpp[size_t(n - 1)].points.end());
    Kr.normalize();
    res.K.push_back(std::move(Kr));
  }

  for (const auto& Ln : res.L)
    for (const auto& Kr : res.K)
      if (!samples_disjoint(Ln, Kr, 1e-9))
        throw pipeline_error("split_boundary_sequences: L_n and K_r intersect");
  return res;
}

std::pair<CompactSample, CompactSample> example_46_sets(const GridSpec& grid, int n) {
  if (n < 1) throw precondition_error("example_46_sets needs n >= 1");
  if (grid.h > 1.0 / (4 * n)) {
    std::ostringstream os;
    os << "resolution bound violated: need h <= " << 1.0 / (4 * n);
    throw precondition_error(os.str());
  }
  Region Lreg = Region::unite({Region::disk({0, 0}, 1.0 - 1.0 / n),
                               Region::sector({0, 0}, 0, 1, 1.0 / n, M_PI - 1.0 / n)});
  Region Kreg = Region::intersect({Region::complement(Region::disk({0, 0}, 1, false)),
                                   Region::halfplane({1, 0}, 2), Region::halfplane({-1, 0}, 2),
                                   Region::halfplane({0, 1}, 0)});
  CompactSample L = sample_region(Lreg, grid, "L" + std::to_string(n));
  CompactSample K = sample_region(Kreg, grid, "K1");
  if (!samples_disjoint(L, K, 0))
    throw pipeline_error("example_46_sets: L and K intersect");
  return {std::move(L), std::move(K)};
}

}  // namespace padeu
