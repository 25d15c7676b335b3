#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twocenter/geometry.hpp"

namespace twocenter {

struct OracleResult {
  double radius = 0.0;
  std::vector<int> side;  // 0 or 1 per input point
  std::size_t enumeration_count = 0;
};

/// Optimal two-disk cover radius by trying every line-separable bipartition.
OracleResult brute_two_center(std::span<const Point> S);

/// Optimal cover by two congruent disks that both contain o, trying every
/// cut of the angular order about o into two contiguous runs.
OracleResult brute_restricted(std::span<const Point> S, Point o);

/// Whether the radius-r disks about X have empty common intersection.
bool brute_emptiness(std::span<const Point> X, double r);

/// Best split of a convex-position set into two contiguous runs of its hull
/// order.
OracleResult brute_convex_contiguous(std::span<const Point> S);

}  // namespace twocenter
