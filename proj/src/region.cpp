#include "padeu/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padeu {

namespace {
constexpr double kAngleSlack = 1e-12;
constexpr double kFullTurn = 2 * M_PI;

double wrap_nonneg(double a) {
  double r = std::fmod(a, kFullTurn);
  return r < 0 ? r + kFullTurn : r;
}
}  // namespace

Region Region::disk(Cd c, double r, bool closed) {
  Region g;
  g.kind = Kind::disk;
  g.center = c;
  g.r1 = r;
  g.closed = closed;
  return g;
}

Region Region::halfplane(Cd outward_normal, double offset, bool closed) {
  Region g;
  g.kind = Kind::halfplane;
  double n = std::abs(outward_normal);
  if (n == 0) throw precondition_error("halfplane needs a nonzero normal");
  g.normal = outward_normal / n;
  g.offset = offset / n;
  g.closed = closed;
  return g;
}

Region Region::annulus(Cd c, double r0, double r1, bool closed) {
  if (r0 > r1) throw precondition_error("annulus needs r0 <= r1");
  Region g;
  g.kind = Kind::annulus;
  g.center = c;
  g.r0 = r0;
  g.r1 = r1;
  g.closed = closed;
  return g;
}

Region Region::sector(Cd c, double r0, double r1, double th0, double th1, bool closed) {
  if (r0 > r1 || th0 > th1 || th1 - th0 > kFullTurn + kAngleSlack)
    throw precondition_error("sector needs r0 <= r1 and th0 <= th1 <= th0 + 2pi");
  Region g;
  g.kind = Kind::sector;
  g.center = c;
  g.r0 = r0;
  g.r1 = r1;
  g.th0 = th0;
  g.th1 = th1;
  g.closed = closed;
  return g;
}

Region Region::unite(std::vector<Region> parts) {
  Region g;
  g.kind = Kind::runion;
  g.children = std::move(parts);
  return g;
}

Region Region::intersect(std::vector<Region> parts) {
  Region g;
  g.kind = Kind::rintersection;
  g.children = std::move(parts);
  return g;
}

Region Region::complement(Region inner) {
  Region g;
  g.kind = Kind::rcomplement;
  g.children.push_back(std::move(inner));
  return g;
}

Region Region::box(double x0, double x1, double y0, double y1, bool closed) {
  return intersect({halfplane({-1, 0}, -x0, closed), halfplane({1, 0}, x1, closed),
                    halfplane({0, -1}, -y0, closed), halfplane({0, 1}, y1, closed)});
}

Region Region::everything() { return complement(disk({0, 0}, -1)); }

bool Region::contains(Cd z) const {
  switch (kind) {
    case Kind::disk: {
      double d = std::abs(z - center);
      return closed ? d <= r1 : d < r1;
    }
    case Kind::halfplane: {
      double v = (std::conj(normal) * z).real();
      return closed ? v <= offset : v < offset;
    }
    case Kind::annulus: {
      double d = std::abs(z - center);
      return closed ? (d >= r0 && d <= r1) : (d > r0 && d < r1);
    }
    case Kind::sector: {
      Cd w = z - center;
      double d = std::abs(w);
      bool radial = closed ? (d >= r0 && d <= r1) : (d > r0 && d < r1);
      if (!radial) return false;
      if (th1 - th0 >= kFullTurn - kAngleSlack) return true;
      if (d == 0) return false;  // angle undefined at the vertex
      double delta = wrap_nonneg(std::arg(w) - th0);
      double width = th1 - th0;
      return closed ? delta <= width + kAngleSlack
                    : (delta > kAngleSlack && delta < width - kAngleSlack);
    }
    case Kind::runion:
      for (const auto& c : children)
        if (c.contains(z)) return true;
      return false;
    case Kind::rintersection:
      for (const auto& c : children)
        if (!c.contains(z)) return false;
      return true;
    case Kind::rcomplement:
      return !children.front().contains(z);
  }
  return false;
}

namespace {
// Distance from w (relative to the vertex) to the ray at angle th.
double ray_dist(Cd w, double th) {
  Cd dir{std::cos(th), std::sin(th)};
  double t = std::max(0.0, (std::conj(dir) * w).real());
  return std::abs(w - t * dir);
}
}  // namespace

double Region::sdf(Cd z) const {
  switch (kind) {
    case Kind::disk:
      return std::abs(z - center) - r1;
    case Kind::halfplane:
      return (std::conj(normal) * z).real() - offset;
    case Kind::annulus: {
      double d = std::abs(z - center);
      return std::max(r0 - d, d - r1);
    }
    case Kind::sector: {
      Cd w = z - center;
      double d = std::abs(w);
      double radial = std::max(r0 - d, d - r1);
      if (th1 - th0 >= kFullTurn - kAngleSlack) return radial;
      double width = th1 - th0;
      double delta = d == 0 ? 0.0 : wrap_nonneg(std::arg(w) - th0);
      double wedge;
      if (delta <= width) {
        wedge = -std::min(ray_dist(w, th0), ray_dist(w, th1));
        // interior arc-length distance to the angular boundary
        wedge = std::max(wedge, -d * std::min(delta, width - delta));
      } else {
        wedge = std::min(ray_dist(w, th0), ray_dist(w, th1));
      }
      return std::max(radial, wedge);
    }
    case Kind::runion: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : children) best = std::min(best, c.sdf(z));
      return best;
    }
    case Kind::rintersection: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& c : children) best = std::max(best, c.sdf(z));
      return best;
    }
    case Kind::rcomplement:
      return -children.front().sdf(z);
  }
  return 0;
}

Region Region::closure() const {
  Region g = *this;
  switch (kind) {
    case Kind::rcomplement:
      g.children[0] = children[0].interior();
      return g;
    case Kind::runion:
    case Kind::rintersection:
      for (size_t i = 0; i < children.size(); ++i) g.children[i] = children[i].closure();
      return g;
    default:
      g.closed = true;
      return g;
  }
}

Region Region::interior() const {
  Region g = *this;
  switch (kind) {
    case Kind::rcomplement:
      g.children[0] = children[0].closure();
      return g;
    case Kind::runion:
    case Kind::rintersection:
      for (size_t i = 0; i < children.size(); ++i) g.children[i] = children[i].interior();
      return g;
    default:
      g.closed = false;
      return g;
  }
}

bool Region::thin() const {
  switch (kind) {
    case Kind::annulus:
      return r0 == r1;
    case Kind::sector:
      return r0 == r1 || th0 == th1;
    case Kind::runion:
      for (const auto& c : children)
        if (c.thin()) return true;
      return false;
    default:
      return false;
  }
}

void Region::thin_samples(double spacing, std::vector<Cd>& out) const {
  if (spacing <= 0) throw precondition_error("thin_samples needs positive spacing");
  switch (kind) {
    case Kind::annulus:
      if (r0 == r1) {
        int n = std::max(8, int(std::ceil(kFullTurn * r1 / spacing)));
        for (int i = 0; i < n; ++i) {
          double t = kFullTurn * i / n;
          out.push_back(center + r1 * Cd{std::cos(t), std::sin(t)});
        }
      }
      return;
    case Kind::sector:
      if (r0 == r1 && r1 > 0) {
        double width = th1 - th0;
        int n = std::max(2, int(std::ceil(r1 * width / spacing)) + 1);
        for (int i = 0; i < n; ++i) {
          double t = th0 + width * i / (n - 1);
          out.push_back(center + r1 * Cd{std::cos(t), std::sin(t)});
        }
      } else if (th0 == th1) {
        int n = std::max(2, int(std::ceil((r1 - r0) / spacing)) + 1);
        for (int i = 0; i < n; ++i) {
          double r = r0 + (r1 - r0) * i / (n - 1);
          out.push_back(center + r * Cd{std::cos(th0), std::sin(th0)});
        }
      }
      return;
    case Kind::runion:
      for (const auto& c : children) c.thin_samples(spacing, out);
      return;
    default:
      return;
  }
}

}  // namespace padeu
