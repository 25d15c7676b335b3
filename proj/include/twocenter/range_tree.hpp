#pragma once

#include <functional>
#include <span>
#include <vector>

#include "twocenter/arc_chain.hpp"
#include "twocenter/geometry.hpp"
#include "twocenter/hull.hpp"

namespace twocenter {

struct TreeNode {
  std::size_t lo = 0;  // 1-based inclusive range of the ordered points
  std::size_t hi = 0;
  int left = -1;
  int right = -1;
  ArcChain chain;
};

/// Balanced tree over an angularly ordered point sequence; every node keeps
/// the intersection hull of its range at the build radius. Node 0 is the root.
class CanonicalTree {
 public:
  CanonicalTree() = default;
  CanonicalTree(std::vector<Point> order, double r, const Tolerance& tol = {});

  std::size_t size() const { return pts_.size(); }
  double radius() const { return r_; }
  const std::vector<Point>& points() const { return pts_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int k) const { return nodes_[static_cast<std::size_t>(k)]; }
  std::size_t depth() const { return depth_; }

  /// Maximal nodes tiling [i, j] (1-based, inclusive) from left to right.
  /// Empty when i > j.
  std::vector<int> canonical_nodes(std::size_t i, std::size_t j) const;

 private:
  int build(std::size_t lo, std::size_t hi, std::size_t level, const Tolerance& tol);
  void collect(int k, std::size_t i, std::size_t j, std::vector<int>& out) const;

  std::vector<Point> pts_;
  std::vector<TreeNode> nodes_;
  double r_ = 0.0;
  std::size_t depth_ = 0;
};

/// Pairwise relation of members p < q of a family, with p in the `a` role.
using PairLookup = std::function<SeparatedResult(std::size_t p, std::size_t q)>;

/// Intersection of a family of pairwise line-separated chains: each member's
/// boundary is clipped to the parts that survive against every other member,
/// and the surviving pieces are chained in boundary order.
ArcChain intersect_family(std::span<const ArcChain* const> members, const PairLookup& pair,
                          const Tolerance& tol = {});

/// Whether the family's common intersection is empty (touching counts as
/// nonempty). Same work as `intersect_family` without assembling a chain.
bool family_empty(std::span<const ArcChain* const> members, const PairLookup& pair,
                  const Tolerance& tol = {});

/// Chain of the intersection hull of points i..j (1-based, inclusive),
/// assembled from the canonical nodes. The whole plane when i > j.
ArcChain range_intersection(const CanonicalTree& t, std::size_t i, std::size_t j,
                            const Tolerance& tol = {});

/// Boundary parts of every node of a tree against one fixed chain.
struct DStructure {
  std::vector<SeparatedResult> parts;  // indexed like CanonicalTree::nodes()
  const SeparatedResult& at(int node) const { return parts[static_cast<std::size_t>(node)]; }
};

DStructure build_d_structure(const CanonicalTree& base, const ArcChain& other,
                             const Tolerance& tol = {});

}  // namespace twocenter
