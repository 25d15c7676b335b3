#include "twocenter/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace twocenter {

Tolerance Tolerance::for_scale(double diagonal) {
  if (!(diagonal > 0.0) || !std::isfinite(diagonal)) diagonal = 1.0;
  return Tolerance{1e-9, 1e-12 * diagonal};
}

Tolerance Tolerance::for_points(std::span<const Point> pts) {
  if (pts.empty()) return {};
  double lx = pts[0].x, hx = pts[0].x, ly = pts[0].y, hy = pts[0].y;
  for (const Point& p : pts) {
    lx = std::min(lx, p.x);
    hx = std::max(hx, p.x);
    ly = std::min(ly, p.y);
    hy = std::max(hy, p.y);
  }
  return for_scale(std::hypot(hx - lx, hy - ly));
}

void require_finite(Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw InputError("non-finite coordinate");
  }
}

void require_finite(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!std::isfinite(pts[i].x) || !std::isfinite(pts[i].y)) {
      std::ostringstream os;
      os << "non-finite coordinate at index " << i;
      throw InputError(os.str());
    }
  }
}

namespace {

bool outside(const Disk& d, Point p) {
  const double r2 = d.radius * d.radius;
  const double scale = std::max({1.0, std::abs(d.center.x), std::abs(d.center.y), d.radius});
  return dist2(d.center, p) > r2 + 1e-13 * scale * scale;
}

Disk diametral(Point a, Point b) { return {midpoint(a, b), 0.5 * dist(a, b)}; }

// Circle through three points; the longest diametral disk when collinear.
Disk disk_through(Point a, Point b, Point c, std::vector<Point>& support) {
  if (auto cc = circumcircle(a, b, c)) {
    support = {a, b, c};
    return *cc;
  }
  const Point pts[3] = {a, b, c};
  double best = -1.0;
  Disk out;
  for (int k = 0; k < 3; ++k) {
    const Point p = pts[k], q = pts[(k + 1) % 3];
    if (dist(p, q) > best) {
      best = dist(p, q);
      out = diametral(p, q);
      support = {p, q};
    }
  }
  return out;
}

}  // namespace

EnclosingDisk smallest_enclosing_disk(std::span<const Point> pts) {
  require_finite(pts);
  EnclosingDisk result;
  if (pts.empty()) {
    result.degenerate = true;
    return result;
  }
  std::vector<Point> p(pts.begin(), pts.end());
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (std::size_t i = p.size(); i > 1; --i) {
    std::swap(p[i - 1], p[rng() % i]);
  }

  Disk d{p[0], 0.0};
  std::vector<Point> support{p[0]};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!outside(d, p[i])) continue;
    d = {p[i], 0.0};
    support = {p[i]};
    for (std::size_t j = 0; j < i; ++j) {
      if (!outside(d, p[j])) continue;
      d = diametral(p[i], p[j]);
      support = {p[i], p[j]};
      for (std::size_t k = 0; k < j; ++k) {
        if (!outside(d, p[k])) continue;
        d = disk_through(p[i], p[j], p[k], support);
      }
    }
  }
  result.disk = d;
  result.support = std::move(support);
  return result;
}

std::optional<Disk> circumcircle(Point a, Point b, Point c) {
  const Point ab = b - a, ac = c - a;
  const double det = 2.0 * cross(ab, ac);
  const double scale = norm(ab) * norm(ac);
  if (!(std::abs(det) > 1e-12 * scale) || scale == 0.0) return std::nullopt;
  const double b2 = norm2(ab), c2 = norm2(ac);
  const Point rel{(ac.y * b2 - ab.y * c2) / det, (ab.x * c2 - ac.x * b2) / det};
  return Disk{a + rel, norm(rel)};
}

std::vector<Point> circle_circle_points(const Disk& d1, const Disk& d2, const Tolerance& tol) {
  const Point delta = d2.center - d1.center;
  const double d = norm(delta);
  const double band = tol.band();
  if (d <= tol.eps_abs) return {};
  if (d > d1.radius + d2.radius + band) return {};
  if (d < std::abs(d1.radius - d2.radius) - band) return {};
  const double a = (d * d + d1.radius * d1.radius - d2.radius * d2.radius) / (2.0 * d);
  const double h2 = d1.radius * d1.radius - a * a;
  const Point u = (1.0 / d) * delta;
  const Point base = d1.center + a * u;
  if (h2 <= band * band) return {base};
  const double h = std::sqrt(h2);
  return {base + h * perp(u), base - h * perp(u)};
}

double pseudo_angle(Point v) {
  if (v.y >= 0.0) {
    return v.x >= 0.0 ? v.y / (v.x + v.y) : 1.0 - v.x / (-v.x + v.y);
  }
  return v.x < 0.0 ? 2.0 - v.y / (-v.x - v.y) : 3.0 + v.x / (v.x - v.y);
}

std::vector<std::size_t> angular_order(Point o, std::span<const Point> pts) {
  require_finite(o);
  require_finite(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == o) {
      std::ostringstream os;
      os << "point " << i << " coincides with the reference point";
      throw InputError(os.str());
    }
  }
  auto half = [](Point v) { return (v.y < 0.0 || (v.y == 0.0 && v.x < 0.0)) ? 1 : 0; };
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const Point a = pts[i] - o, b = pts[j] - o;
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const double c = cross(a, b);
    if (c != 0.0) return c > 0.0;
    return norm2(a) < norm2(b);
  });
  return idx;
}

Point rotate_quarter(Point p, int quarters) {
  switch (((quarters % 4) + 4) % 4) {
    case 1: return {-p.y, p.x};
    case 2: return {-p.x, -p.y};
    case 3: return {p.y, -p.x};
    default: return p;
  }
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace twocenter
