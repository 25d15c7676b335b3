#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twocenter/geometry.hpp"
#include "twocenter/range_tree.hpp"

namespace twocenter {

enum class Axis { x, y };

/// Points split about o by one axis, in local coordinates (o at the origin,
/// the separating axis along x). `plus` holds y > 0 sorted counterclockwise;
/// `minus` holds y <= 0 sorted counterclockwise from angle pi to 2 pi.
struct SplitInstance {
  Point o;
  Axis axis = Axis::x;
  std::vector<Point> plus;
  std::vector<Point> minus;
  std::vector<std::size_t> plus_index;   // position in the input
  std::vector<std::size_t> minus_index;
  Tolerance tol;

  std::size_t n_plus() const { return plus.size(); }
  std::size_t n_minus() const { return minus.size(); }
  Point to_world(Point local) const;
};

SplitInstance make_split_instance(std::span<const Point> S, Point o, Axis axis);

/// Balanced tree of convex hulls over an ordered sequence, for fast smallest
/// enclosing disks of index ranges.
class HullTree {
 public:
  HullTree() = default;
  explicit HullTree(std::span<const Point> pts);
  std::size_t size() const { return n_; }
  /// Appends hull vertices covering points i..j (1-based, inclusive).
  void collect(std::size_t i, std::size_t j, std::vector<Point>& out) const;

 private:
  void collect(std::size_t k, std::size_t lo, std::size_t hi, std::size_t i, std::size_t j,
               std::vector<Point>& out) const;
  void build(std::size_t k, std::size_t lo, std::size_t hi, std::span<const Point> pts);

  std::size_t n_ = 0;
  std::vector<std::vector<Point>> hulls_;
};

/// A[i,j] = MED(S+[i+1..n+] u S-[1..j]) and B[i,j] = MED(S+[1..i] u S-[j+1..n-]),
/// evaluated on demand.
class RadiusMatrixView {
 public:
  explicit RadiusMatrixView(const SplitInstance& inst);
  double A(std::size_t i, std::size_t j) const;
  double B(std::size_t i, std::size_t j) const;
  double r(std::size_t i, std::size_t j) const;
  std::size_t n_plus() const { return plus_.size(); }
  std::size_t n_minus() const { return minus_.size(); }

 private:
  HullTree plus_;
  HullTree minus_;
};

/// Rows [row_lo, row_hi] whose best column lies in [col_lo, col_hi].
struct Group {
  std::size_t t = 0;
  std::size_t row_lo = 0;
  std::size_t row_hi = 0;
  std::size_t col_lo = 0;
  std::size_t col_hi = 0;
};

struct GroupTable {
  std::size_t g = 1;
  std::size_t m = 0;
  std::vector<std::size_t> J;  // column breakpoints, J.front() = 0, J.back() = n-
  std::vector<long> I;         // I[t] = largest i with A[i,J[t]] >= B[i,J[t]], or -1
  std::vector<Group> groups;
};

GroupTable build_group_table(const SplitInstance& inst, std::size_t g);
GroupTable build_group_table(const SplitInstance& inst, std::size_t g, const RadiusMatrixView& view);

/// Chains of the fixed prefix/suffix sets a decision run needs, at one radius.
class Anchors {
 public:
  Anchors(const SplitInstance& inst, const GroupTable& table, double r, const Tolerance& tol);
  const ArcChain& plus_prefix(std::size_t k) const;   // I(S+[1..k])
  const ArcChain& plus_suffix(std::size_t k) const;   // I(S+[k..n+])
  const ArcChain& minus_prefix(std::size_t k) const;  // I(S-[1..k])
  const ArcChain& minus_suffix(std::size_t k) const;  // I(S-[k..n-])

 private:
  struct Sweep {
    std::vector<std::size_t> keys;
    std::vector<ArcChain> chains;
    const ArcChain& at(std::size_t k) const;
  };
  static Sweep sweep(std::span<const Point> pts, std::vector<std::size_t> keys, bool forward,
                     double r, const Tolerance& tol);
  Sweep plus_prefix_, plus_suffix_, minus_prefix_, minus_suffix_;
};

/// Everything one group needs to answer emptiness queries for its rows.
/// The A-side sets are S1 = S+[i+1..row_hi], S2 = S+[row_hi+1..n+],
/// S3 = S-[1..col_lo], S4 = S-[col_lo+1..j]; the B side mirrors them with
/// S2' = S+[1..row_lo] and S3' = S-[col_hi+1..n-].
class GroupContext {
 public:
  GroupContext(const SplitInstance& inst, const Group& group, const Anchors& anchors, double r,
               const Tolerance& tol);

  const Group& group() const { return group_; }
  /// Whether I(S+[i+1..n+] u S-[1..j]) is empty, i.e. A[i,j] > r.
  bool a_empty(std::size_t i, std::size_t j) const;
  /// Whether I(S+[1..i] u S-[j+1..n-]) is empty, i.e. B[i,j] > r.
  bool b_empty(std::size_t i, std::size_t j) const;

  const CanonicalTree& local_plus() const { return local_plus_; }
  const CanonicalTree& local_minus() const { return local_minus_; }
  // Anchor order: 0 = S2, 1 = S3, 2 = S2', 3 = S3'.
  const ArcChain& anchor(int k) const { return *anchors_[static_cast<std::size_t>(k)]; }
  const DStructure& d_plus(int anchor) const { return d_plus_[static_cast<std::size_t>(anchor)]; }
  const DStructure& d_minus(int anchor) const { return d_minus_[static_cast<std::size_t>(anchor)]; }
  const SeparatedResult& a_anchor_pair() const { return a_pair_; }
  const SeparatedResult& b_anchor_pair() const { return b_pair_; }

 private:
  struct Member {
    const ArcChain* chain;
    int plus_node;   // node of local_plus, or -1
    int minus_node;  // node of local_minus, or -1
    int anchor;      // anchor slot, or -1
  };
  bool empty_of(const std::vector<Member>& members) const;

  Group group_;
  Tolerance tol_;
  CanonicalTree local_plus_;   // S+[row_lo+1..row_hi]
  CanonicalTree local_minus_;  // S-[col_lo+1..col_hi]
  const ArcChain* anchors_[4];
  DStructure d_plus_[4];
  DStructure d_minus_[4];
  SeparatedResult a_pair_;
  SeparatedResult b_pair_;
};

struct DecideOptions {
  std::size_t group_width = 16;
  std::size_t threads = 1;
};

struct Decision {
  bool yes = false;
  std::size_t i = 0;  // witness: S+[i+1..] u S-[1..j] on one side
  std::size_t j = 0;
};

/// Is there a split along this instance's axis with both sides coverable by
/// a radius-r disk?
Decision decide(const SplitInstance& inst, double r, const DecideOptions& opts = {});

/// Per row i in 0..n+, whether min_j max(A[i,j], B[i,j]) <= r, together with
/// the column used. Every row is evaluated.
std::vector<Decision> decide_rows(const SplitInstance& inst, double r, const DecideOptions& opts = {});

/// Both axis instances about o, OR-ed.
Decision decide_point_set(std::span<const Point> S, Point o, double r, const DecideOptions& opts = {},
                          Axis* winning_axis = nullptr);

}  // namespace twocenter
