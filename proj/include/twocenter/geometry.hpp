#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocenter {

/// Raised for malformed caller input (non-finite coordinates, coincident
/// reference points, non-convex input to the convex solver, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal precondition of a geometric routine is violated.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Twice the signed area of (a, b, c); positive for a left turn.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

struct Disk {
  Point center;
  double radius = 0.0;

  bool contains(Point p, double slack) const { return dist(center, p) <= radius + slack; }
};

/// Comparison slack shared by every predicate. `eps_abs` is in length
/// units; `band()` is the width of the near-tangency zone.
struct Tolerance {
  double eps_rel = 1e-9;
  double eps_abs = 1e-12;

  double band() const { return 10.0 * eps_abs; }

  /// Defaults scaled to the bounding-box diagonal of `pts`.
  static Tolerance for_points(std::span<const Point> pts);
  static Tolerance for_scale(double diagonal);
};

/// a <= b up to the absolute slack.
inline bool approx_le(double a, double b, const Tolerance& tol) { return a <= b + tol.eps_abs; }
inline bool approx_eq(double a, double b, const Tolerance& tol) {
  return std::abs(a - b) <= tol.eps_abs + tol.eps_rel * std::max(std::abs(a), std::abs(b));
}

struct EnclosingDisk {
  Disk disk;
  std::vector<Point> support;  // at most 3 points on the boundary
  bool degenerate = false;     // empty input
};

void require_finite(Point p);
void require_finite(std::span<const Point> pts);

/// Smallest enclosing disk, randomized incremental with a fixed internal
/// seed so results are reproducible.
EnclosingDisk smallest_enclosing_disk(std::span<const Point> pts);

/// Circle through three points; nullopt when they are collinear.
std::optional<Disk> circumcircle(Point a, Point b, Point c);

/// Intersection points of two circles (0, 1 or 2). Two circles whose centre
/// distance is within the tolerance band of tangency yield a single point.
std::vector<Point> circle_circle_points(const Disk& d1, const Disk& d2,
                                        const Tolerance& tol = {});

/// Counterclockwise angular order about `o`, starting at the positive x-axis.
/// Equal directions are ordered nearest first, then by input index.
std::vector<std::size_t> angular_order(Point o, std::span<const Point> pts);

/// Monotone key in [0,4) for the direction of `v`; replaces atan2 when only
/// the order of directions matters.
double pseudo_angle(Point v);

/// Rotates `p` counterclockwise by a quarter turn `quarters` times.
Point rotate_quarter(Point p, int quarters);

/// Convex hull vertices in counterclockwise order (no collinear points).
std::vector<Point> convex_hull(std::vector<Point> pts);

}  // namespace twocenter
