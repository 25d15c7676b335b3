#pragma once

#include <span>
#include <vector>

#include "twocenter/arc_chain.hpp"
#include "twocenter/geometry.hpp"

namespace twocenter {

/// Boundary of the common intersection of the radius-r disks centred at X.
/// Empty X yields the whole plane.
ArcChain intersection_hull(std::span<const Point> X, double r, const Tolerance& tol = {});

/// Boundary of the intersection of all radius-r disks containing X. Its
/// vertices are the arc centres of `intersection_hull(X, r)` and its arcs are
/// centred at that chain's vertices.
ArcChain circular_hull(std::span<const Point> X, double r, const Tolerance& tol = {});

enum class Relation { disjoint, a_in_b, b_in_a, crossing };

/// Outcome of intersecting two chains whose generators are separated by a
/// line. For `crossing`, `a_part` is the stretch of the boundary of A lying in
/// B (from s to e) and `b_part` the stretch of B lying in A (from e to s);
/// together they bound the intersection.
struct SeparatedResult {
  Relation relation = Relation::disjoint;
  BoundaryPart a_part;
  BoundaryPart b_part;
  bool touching = false;  // the intersection degenerates to one point
};

SeparatedResult separated_intersect(const ArcChain& a, const ArcChain& b, const Tolerance& tol = {},
                                    int owner_a = 0, int owner_b = 1);

/// Chain of I(L) ∩ I(R) for line-separated generator sets.
ArcChain intersect_separated(const ArcChain& a, const ArcChain& b, const Tolerance& tol = {});

/// Connected components of the common intersection of boundary parts of
/// `chain`, each taken as an angular interval about `witness`.
std::vector<BoundaryPart> clip_boundary(const ArcChain& chain, std::span<const BoundaryPart> parts,
                                        Point witness, const Tolerance& tol = {}, int owner = -1);

/// Same result when the parts split into two families lying on either side
/// of the chain's own generators; each family collapses to one interval
/// first, so at most two components come back.
std::vector<BoundaryPart> clip_boundary_canonical(const ArcChain& chain,
                                                  std::span<const BoundaryPart> left,
                                                  std::span<const BoundaryPart> right,
                                                  Point witness, const Tolerance& tol = {},
                                                  int owner = -1);

/// True when the ranks (positions in `ordered`) of the arc centres rise and
/// fall at most once each around the chain.
bool check_boundary_order(const ArcChain& chain, std::span<const Point> ordered);

/// Whether `p` lies on `arc` (angularly, ignoring the radial distance).
bool on_arc(const CircleArc& arc, Point p, double r, const Tolerance& tol);

}  // namespace twocenter
