#include "twocenter/range_tree.hpp"

#include <cmath>
#include <limits>

namespace twocenter {

CanonicalTree::CanonicalTree(std::vector<Point> order, double r, const Tolerance& tol)
    : pts_(std::move(order)), r_(r) {
  if (!(r > 0.0)) throw ContractError("CanonicalTree needs r > 0");
  if (pts_.empty()) return;
  nodes_.reserve(2 * pts_.size());
  build(1, pts_.size(), 1, tol);
}

int CanonicalTree::build(std::size_t lo, std::size_t hi, std::size_t level, const Tolerance& tol) {
  const int k = static_cast<int>(nodes_.size());
  nodes_.push_back({lo, hi, -1, -1, {}});
  depth_ = std::max(depth_, level);
  if (lo == hi) {
    nodes_[k].chain = ArcChain::circle(r_, pts_[lo - 1]);
    return k;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const int l = build(lo, mid, level + 1, tol);
  const int rr = build(mid + 1, hi, level + 1, tol);
  nodes_[k].left = l;
  nodes_[k].right = rr;
  nodes_[k].chain = intersect_separated(nodes_[l].chain, nodes_[rr].chain, tol);
  return k;
}

void CanonicalTree::collect(int k, std::size_t i, std::size_t j, std::vector<int>& out) const {
  const TreeNode& n = node(k);
  if (j < n.lo || n.hi < i) return;
  if (i <= n.lo && n.hi <= j) {
    out.push_back(k);
    return;
  }
  collect(n.left, i, j, out);
  collect(n.right, i, j, out);
}

std::vector<int> CanonicalTree::canonical_nodes(std::size_t i, std::size_t j) const {
  std::vector<int> out;
  if (i > j || nodes_.empty()) return out;
  if (i < 1 || j > size()) throw ContractError("canonical_nodes: range out of bounds");
  collect(0, i, j, out);
  return out;
}

namespace {

struct Clipped {
  enum class Kind { empty, plane, point, member, pieces };
  Kind kind = Kind::empty;
  Point point;
  Point generator;
  std::size_t member = 0;
  std::vector<std::pair<std::size_t, BoundaryPart>> pieces;
};

Clipped point_or_empty(std::span<const ArcChain* const> members, Point p, Point gen, double band) {
  Clipped out;
  for (const ArcChain* m : members) {
    if (!m->contains(p, band)) return out;
  }
  out.kind = Clipped::Kind::point;
  out.point = p;
  out.generator = gen;
  return out;
}

Clipped clip_family(std::span<const ArcChain* const> members, const PairLookup& pair,
                    const Tolerance& tol, bool stop_early) {
  Clipped out;
  const double band = tol.band();
  std::vector<std::size_t> live;
  for (std::size_t p = 0; p < members.size(); ++p) {
    const ArcChain& m = *members[p];
    if (m.is_empty()) return out;
    if (m.kind() == ChainKind::plane) continue;
    if (m.kind() == ChainKind::point) {
      return point_or_empty(members, m.arcs()[0].start, m.arcs()[0].center, band);
    }
    live.push_back(p);
  }
  if (live.empty()) {
    out.kind = Clipped::Kind::plane;
    return out;
  }
  if (live.size() == 1) {
    out.kind = Clipped::Kind::member;
    out.member = live[0];
    return out;
  }

  // Parts from members earlier in the order, and from later ones.
  std::vector<std::vector<BoundaryPart>> before(members.size()), after(members.size());
  for (std::size_t x = 0; x < live.size(); ++x) {
    for (std::size_t y = x + 1; y < live.size(); ++y) {
      const std::size_t p = live[x], q = live[y];
      const SeparatedResult res = pair(p, q);
      if (res.relation == Relation::disjoint) return out;
      if (res.touching && res.relation == Relation::crossing) {
        const ArcChain& m = *members[p];
        return point_or_empty(members, res.a_part.s, m.arcs()[res.a_part.s_arc].center, band);
      }
      after[p].push_back(res.a_part);
      before[q].push_back(res.b_part);
    }
  }

  out.kind = Clipped::Kind::pieces;
  for (std::size_t p : live) {
    const ArcChain& m = *members[p];
    const auto comps =
        clip_boundary_canonical(m, before[p], after[p], m.interior_point(), tol, static_cast<int>(p));
    for (const BoundaryPart& c : comps) {
      if (c.full()) {
        out.kind = Clipped::Kind::member;
        out.member = p;
        out.pieces.clear();
        return out;
      }
      out.pieces.emplace_back(p, c);
      if (stop_early) return out;
    }
  }
  if (out.pieces.empty()) out.kind = Clipped::Kind::empty;
  return out;
}

ArcChain assemble(std::span<const ArcChain* const> members, const Clipped& c, double r,
                  const Tolerance& tol) {
  switch (c.kind) {
    case Clipped::Kind::empty: return ArcChain::empty(r);
    case Clipped::Kind::plane: return ArcChain::plane(r);
    case Clipped::Kind::point: return ArcChain::point(r, c.point, c.generator);
    case Clipped::Kind::member: return *members[c.member];
    case Clipped::Kind::pieces: break;
  }
  const std::size_t k = c.pieces.size();
  std::vector<char> used(k, 0);
  std::size_t cur = 0;
  used[0] = 1;
  ArcSeq joined = extract_span(*members[c.pieces[0].first], c.pieces[0].second, tol);
  double spread = 0.0;
  for (std::size_t step = 1; step < k; ++step) {
    const Point end = c.pieces[cur].second.e;
    std::size_t best = k;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < k; ++q) {
      if (used[q]) continue;
      const double d = dist(end, c.pieces[q].second.s);
      if (d < best_d) {
        best_d = d;
        best = q;
      }
    }
    used[best] = 1;
    cur = best;
    joined = ArcSeq::concat(joined, extract_span(*members[c.pieces[best].first], c.pieces[best].second, tol));
  }
  for (const auto& [owner, part] : c.pieces) {
    spread = std::max(spread, dist(part.s, c.pieces[0].second.s));
    spread = std::max(spread, dist(part.e, c.pieces[0].second.s));
  }
  const auto& first = c.pieces[0];
  const Point gen = members[first.first]->arcs()[first.second.s_arc].center;
  if (spread <= 2.0 * tol.band()) return ArcChain::point(r, first.second.s, gen);

  const auto arcs = joined.to_vector();
  std::vector<CircleArc> kept;
  for (const CircleArc& a : arcs) {
    if (dist(a.start, a.end) > tol.eps_abs) kept.push_back(a);
  }
  if (kept.empty()) return ArcChain::point(r, first.second.s, gen);
  if (kept.size() == arcs.size()) return ArcChain::region(r, std::move(joined));
  return ArcChain::region(r, kept);
}

double family_radius(std::span<const ArcChain* const> members) {
  for (const ArcChain* m : members) {
    if (m->radius() > 0.0) return m->radius();
  }
  return 0.0;
}

}  // namespace

ArcChain intersect_family(std::span<const ArcChain* const> members, const PairLookup& pair,
                          const Tolerance& tol) {
  const double r = family_radius(members);
  if (members.empty()) return ArcChain::plane(r);
  return assemble(members, clip_family(members, pair, tol, false), r, tol);
}

bool family_empty(std::span<const ArcChain* const> members, const PairLookup& pair,
                  const Tolerance& tol) {
  return clip_family(members, pair, tol, true).kind == Clipped::Kind::empty;
}

ArcChain range_intersection(const CanonicalTree& t, std::size_t i, std::size_t j,
                            const Tolerance& tol) {
  const auto ids = t.canonical_nodes(i, j);
  if (ids.empty()) return ArcChain::plane(t.radius());
  std::vector<const ArcChain*> members;
  for (int id : ids) members.push_back(&t.node(id).chain);
  const PairLookup pair = [&](std::size_t p, std::size_t q) {
    return separated_intersect(*members[p], *members[q], tol, static_cast<int>(p), static_cast<int>(q));
  };
  return intersect_family(members, pair, tol);
}

DStructure build_d_structure(const CanonicalTree& base, const ArcChain& other, const Tolerance& tol) {
  DStructure d;
  d.parts.reserve(base.nodes().size());
  for (std::size_t k = 0; k < base.nodes().size(); ++k) {
    d.parts.push_back(separated_intersect(base.nodes()[k].chain, other, tol, static_cast<int>(k), -1));
  }
  return d;
}

}  // namespace twocenter
