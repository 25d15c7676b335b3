#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "twocenter/geometry.hpp"

namespace twocenter {

/// Arc of the radius-r circle about `center`, traversed from `start` to
/// `end`. A chain with a single arc whose endpoints coincide is a full circle.
struct CircleArc {
  Point center;
  Point start;
  Point end;
  bool ccw = true;
};

/// Persistent sequence of arcs. Implemented as a treap whose nodes are never
/// mutated after construction: split and concat copy only the search paths,
/// so sub-chains share structure with the chain they were cut from.
class ArcSeq {
 public:
  ArcSeq() = default;
  explicit ArcSeq(std::span<const CircleArc> arcs);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const CircleArc& at(std::size_t i) const;

  /// First `k` arcs and the remainder.
  std::pair<ArcSeq, ArcSeq> split(std::size_t k) const;
  static ArcSeq concat(const ArcSeq& a, const ArcSeq& b);

  /// Cyclic rotation so that position `k` comes first.
  ArcSeq rotate(std::size_t k) const;
  /// Position of the arc with the lexicographically smallest centre.
  std::size_t lexmin_position() const;

  std::vector<CircleArc> to_vector() const;

  /// Number of tree nodes shared between two sequences (testing aid for the
  /// path-copying property).
  static std::size_t shared_nodes(const ArcSeq& a, const ArcSeq& b);

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  explicit ArcSeq(NodePtr root) : root_(std::move(root)) {}

  static NodePtr make(const CircleArc& arc, std::uint64_t prio, NodePtr l, NodePtr r);
  static NodePtr merge(const NodePtr& a, const NodePtr& b);
  static std::pair<NodePtr, NodePtr> split(const NodePtr& t, std::size_t k);

  NodePtr root_;
};

enum class ChainKind {
  empty,   // no point lies in every disk
  point,   // the intersection is a single point
  region,  // bounded region with non-empty interior
  plane,   // intersection over the empty set
};

/// Boundary of I_r(X) (or of the circular hull) as a counterclockwise cyclic
/// sequence of radius-r arcs, starting at the arc whose centre is
/// lexicographically smallest.
class ArcChain {
 public:
  ArcChain() = default;

  static ArcChain empty(double r) { return ArcChain(r, ChainKind::empty, {}); }
  static ArcChain plane(double r) { return ArcChain(r, ChainKind::plane, {}); }
  static ArcChain point(double r, Point p, Point generator);
  static ArcChain circle(double r, Point center);
  /// Builds a region chain from arcs in boundary order; rotates to the
  /// canonical start.
  static ArcChain region(double r, std::span<const CircleArc> arcs);
  static ArcChain region(double r, ArcSeq arcs);

  double radius() const { return r_; }
  ChainKind kind() const { return kind_; }
  bool is_empty() const { return kind_ == ChainKind::empty; }
  bool is_full_circle() const;
  std::size_t size() const { return arcs_.size(); }
  const ArcSeq& seq() const { return arcs_; }
  const std::vector<CircleArc>& arcs() const;
  std::vector<Point> centers() const;

  /// Whether `p` lies in every generating disk (up to `slack`).
  bool contains(Point p, double slack) const;
  /// A point in the relative interior (the point itself for kind=point).
  Point interior_point() const;

 private:
  ArcChain(double r, ChainKind kind, ArcSeq arcs);

  double r_ = 0.0;
  ChainKind kind_ = ChainKind::empty;
  ArcSeq arcs_;
  // Flat copy of the arcs for scans; the treap is kept for splicing.
  std::shared_ptr<const std::vector<CircleArc>> flat_;
};

/// Line-oriented dump, one arc per line:
/// "center_x center_y start_x start_y end_x end_y".
void dump_chain(std::ostream& os, const ArcChain& chain);

enum class PartKind { none, full, span };

/// A connected piece of the boundary of one chain, from `s` to `e`
/// counterclockwise. `s_arc` / `e_arc` index the arcs of the owning chain
/// that carry the endpoints.
struct BoundaryPart {
  int owner = -1;
  PartKind kind = PartKind::none;
  Point s;
  Point e;
  std::size_t s_arc = 0;
  std::size_t e_arc = 0;

  bool full() const { return kind == PartKind::full; }
  static BoundaryPart whole(int owner) { return {owner, PartKind::full, {}, {}, 0, 0}; }
  static BoundaryPart nothing(int owner) { return {owner, PartKind::none, {}, {}, 0, 0}; }
};

/// Arcs of `chain` from `s` (on arc `s_arc`) to `e` (on arc `e_arc`),
/// counterclockwise. Shares structure with the source chain.
ArcSeq extract_span(const ArcChain& chain, const BoundaryPart& part, const Tolerance& tol);

}  // namespace twocenter
