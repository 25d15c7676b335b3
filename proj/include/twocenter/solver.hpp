#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twocenter/decision.hpp"
#include "twocenter/geometry.hpp"

namespace twocenter {

enum class SolveMode { restricted, convex };

struct TwoCenterSolution {
  double radius = 0.0;
  Disk d1;
  Disk d2;
  std::vector<int> side;  // 0: covered by d1, 1: covered by d2
  SolveMode mode = SolveMode::restricted;
  Axis axis = Axis::x;
  std::size_t i = 0;  // witness of the winning split
  std::size_t j = 0;
  bool o_adjusted = false;  // a disk was enlarged to reach o
};

struct SolveOptions {
  std::size_t group_width = 16;
  std::size_t threads = 1;
  bool bisect = false;
  /// Above this many points the candidate enumeration is replaced by
  /// bisection.
  std::size_t candidate_cap = 400;
};

/// Half of every pairwise distance and the circumradius of every
/// non-collinear triple, sorted, with near-equal values merged.
std::vector<double> critical_radii(std::span<const Point> S, const Tolerance& tol = {});

TwoCenterSolution solve_restricted(std::span<const Point> S, Point o, const SolveOptions& opts = {});

/// Whether every point is a strict vertex of the convex hull (no repeats, no
/// three collinear on the hull boundary, not all collinear).
bool in_convex_position(std::span<const Point> S);

TwoCenterSolution solve_convex(std::span<const Point> S, const SolveOptions& opts = {});

}  // namespace twocenter
