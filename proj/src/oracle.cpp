#include "twocenter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace twocenter {

namespace {

double med_of(std::span<const Point> S, const std::vector<int>& side, int which, const Point* extra) {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (side[k] == which) pts.push_back(S[k]);
  }
  if (extra) pts.push_back(*extra);
  return smallest_enclosing_disk(pts).disk.radius;
}

void consider(OracleResult& best, std::span<const Point> S, const std::vector<int>& side, const Point* o) {
  ++best.enumeration_count;
  const double r = std::max(med_of(S, side, 0, o), med_of(S, side, 1, o));
  if (r < best.radius) {
    best.radius = r;
    best.side = side;
  }
}

}  // namespace

OracleResult brute_two_center(std::span<const Point> S) {
  require_finite(S);
  OracleResult best;
  best.radius = std::numeric_limits<double>::infinity();
  const std::size_t n = S.size();
  std::vector<int> side(n, 0);
  consider(best, S, side, nullptr);
  if (n < 2) return best;

  // Every separable bipartition is a prefix of the points sorted by
  // projection on some direction; one direction strictly between each pair
  // of consecutive critical directions is enough.
  std::vector<double> crit;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Point d = S[b] - S[a];
      if (d.x == 0.0 && d.y == 0.0) continue;
      double phi = std::atan2(d.x, -d.y);  // normal of the pair direction
      phi = std::fmod(phi + 2 * std::numbers::pi, std::numbers::pi);
      crit.push_back(phi);
    }
  }
  crit.push_back(0.0);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
  std::vector<std::size_t> idx(n);
  for (std::size_t c = 0; c < crit.size(); ++c) {
    const double next = c + 1 < crit.size() ? crit[c + 1] : crit[0] + std::numbers::pi;
    const double th = 0.5 * (crit[c] + next);
    const Point u{std::cos(th), std::sin(th)};
    for (std::size_t k = 0; k < n; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return dot(S[x], u) < dot(S[y], u); });
    std::fill(side.begin(), side.end(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      side[idx[k]] = 0;
      consider(best, S, side, nullptr);
    }
  }
  return best;
}

OracleResult brute_restricted(std::span<const Point> S, Point o) {
  require_finite(S);
  require_finite(o);
  const std::size_t n = S.size();
  const auto order = angular_order(o, S);
  // Points on a common ray from o cannot be separated by a cut.
  std::vector<std::vector<std::size_t>> rays;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = order[k];
    if (!rays.empty()) {
      const Point a = S[rays.back().front()] - o, b = S[p] - o;
      if (cross(a, b) == 0.0 && dot(a, b) > 0.0) {
        rays.back().push_back(p);
        continue;
      }
    }
    rays.push_back({p});
  }
  const std::size_t G = rays.size();
  OracleResult best;
  best.radius = std::numeric_limits<double>::infinity();
  std::vector<int> side(n, 0);
  consider(best, S, side, &o);
  for (std::size_t a = 0; a < G; ++a) {
    for (std::size_t len = 1; len < G; ++len) {
      std::fill(side.begin(), side.end(), 0);
      for (std::size_t k = 0; k < len; ++k) {
        for (std::size_t p : rays[(a + k) % G]) side[p] = 1;
      }
      consider(best, S, side, &o);
    }
  }
  return best;
}

bool brute_emptiness(std::span<const Point> X, double r) {
  return smallest_enclosing_disk(X).disk.radius > r;
}

OracleResult brute_convex_contiguous(std::span<const Point> S) {
  require_finite(S);
  const std::size_t n = S.size();
  Point c{};
  for (const Point& p : S) c = c + p;
  if (n > 0) c = (1.0 / static_cast<double>(n)) * c;
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(S[a].y - c.y, S[a].x - c.x) < std::atan2(S[b].y - c.y, S[b].x - c.x);
  });
  OracleResult best;
  best.radius = std::numeric_limits<double>::infinity();
  std::vector<int> side(n, 0);
  consider(best, S, side, nullptr);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t len = 1; len < n; ++len) {
      std::fill(side.begin(), side.end(), 0);
      for (std::size_t k = 0; k < len; ++k) side[order[(a + k) % n]] = 1;
      consider(best, S, side, nullptr);
    }
  }
  return best;
}

}  // namespace twocenter
