#include "twocenter/arc_chain.hpp"

#include <cstdio>
#include <cstring>
#include <ostream>
#include <unordered_set>

namespace twocenter {

struct ArcSeq::Node {
  CircleArc arc;
  std::uint64_t prio = 0;
  NodePtr left;
  NodePtr right;
  std::size_t size = 1;
  std::size_t lexmin_pos = 0;  // within this subtree
  Point lexmin_center;
};

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t bits(double v) {
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return b;
}

std::uint64_t arc_priority(const CircleArc& a) {
  std::uint64_t h = mix(bits(a.center.x));
  h = mix(h ^ bits(a.center.y));
  h = mix(h ^ bits(a.start.x));
  h = mix(h ^ bits(a.start.y));
  h = mix(h ^ bits(a.end.x));
  return mix(h ^ bits(a.end.y));
}

// Counterclockwise position of `p` on the circle about `c`, measured from
// the direction of `from`; in [0,4).
double angle_from(Point c, Point from, Point p) {
  const Point a = from - c, b = p - c;
  return pseudo_angle({dot(a, b), cross(a, b)});
}

}  // namespace

ArcSeq::NodePtr ArcSeq::make(const CircleArc& arc, std::uint64_t prio, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Node>();
  n->arc = arc;
  n->prio = prio;
  n->size = 1 + (l ? l->size : 0) + (r ? r->size : 0);
  const std::size_t ls = l ? l->size : 0;
  n->lexmin_pos = ls;
  n->lexmin_center = arc.center;
  if (l && !lex_less(n->lexmin_center, l->lexmin_center)) {
    n->lexmin_pos = l->lexmin_pos;
    n->lexmin_center = l->lexmin_center;
  }
  if (r && lex_less(r->lexmin_center, n->lexmin_center)) {
    n->lexmin_pos = ls + 1 + r->lexmin_pos;
    n->lexmin_center = r->lexmin_center;
  }
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ArcSeq::ArcSeq(std::span<const CircleArc> arcs) {
  // Cartesian tree on (position, priority).
  std::vector<std::uint64_t> prio(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) prio[i] = arc_priority(arcs[i]) ^ mix(i);
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> NodePtr {
    if (lo >= hi) return nullptr;
    std::size_t best = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      if (prio[i] > prio[best]) best = i;
    }
    return make(arcs[best], prio[best], self(self, lo, best), self(self, best + 1, hi));
  };
  root_ = build(build, 0, arcs.size());
}

std::size_t ArcSeq::size() const { return root_ ? root_->size : 0; }

const CircleArc& ArcSeq::at(std::size_t i) const {
  const Node* n = root_.get();
  while (n) {
    const std::size_t ls = n->left ? n->left->size : 0;
    if (i < ls) {
      n = n->left.get();
    } else if (i == ls) {
      return n->arc;
    } else {
      i -= ls + 1;
      n = n->right.get();
    }
  }
  throw ContractError("ArcSeq::at out of range");
}

ArcSeq::NodePtr ArcSeq::merge(const NodePtr& a, const NodePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->prio > b->prio) return make(a->arc, a->prio, a->left, merge(a->right, b));
  return make(b->arc, b->prio, merge(a, b->left), b->right);
}

std::pair<ArcSeq::NodePtr, ArcSeq::NodePtr> ArcSeq::split(const NodePtr& t, std::size_t k) {
  if (!t) return {nullptr, nullptr};
  const std::size_t ls = t->left ? t->left->size : 0;
  if (k <= ls) {
    auto [l, r] = split(t->left, k);
    return {l, make(t->arc, t->prio, r, t->right)};
  }
  auto [l, r] = split(t->right, k - ls - 1);
  return {make(t->arc, t->prio, t->left, l), r};
}

std::pair<ArcSeq, ArcSeq> ArcSeq::split(std::size_t k) const {
  if (k == 0) return {ArcSeq(), *this};
  if (k >= size()) return {*this, ArcSeq()};
  auto [l, r] = split(root_, k);
  return {ArcSeq(l), ArcSeq(r)};
}

ArcSeq ArcSeq::concat(const ArcSeq& a, const ArcSeq& b) { return ArcSeq(merge(a.root_, b.root_)); }

ArcSeq ArcSeq::rotate(std::size_t k) const {
  if (empty() || k % size() == 0) return *this;
  auto [a, b] = split(k % size());
  return concat(b, a);
}

std::size_t ArcSeq::lexmin_position() const { return root_ ? root_->lexmin_pos : 0; }

std::vector<CircleArc> ArcSeq::to_vector() const {
  std::vector<CircleArc> out;
  out.reserve(size());
  auto walk = [&](auto&& self, const Node* n) -> void {
    if (!n) return;
    self(self, n->left.get());
    out.push_back(n->arc);
    self(self, n->right.get());
  };
  walk(walk, root_.get());
  return out;
}

std::size_t ArcSeq::shared_nodes(const ArcSeq& a, const ArcSeq& b) {
  std::unordered_set<const Node*> seen;
  auto collect = [&](auto&& self, const Node* n) -> void {
    if (!n) return;
    seen.insert(n);
    self(self, n->left.get());
    self(self, n->right.get());
  };
  collect(collect, a.root_.get());
  std::size_t count = 0;
  auto probe = [&](auto&& self, const Node* n) -> void {
    if (!n) return;
    if (seen.count(n)) {
      ++count;
    }
    self(self, n->left.get());
    self(self, n->right.get());
  };
  probe(probe, b.root_.get());
  return count;
}

ArcChain::ArcChain(double r, ChainKind kind, ArcSeq arcs)
    : r_(r),
      kind_(kind),
      arcs_(std::move(arcs)),
      flat_(std::make_shared<const std::vector<CircleArc>>(arcs_.to_vector())) {}

const std::vector<CircleArc>& ArcChain::arcs() const {
  static const std::vector<CircleArc> none;
  return flat_ ? *flat_ : none;
}

ArcChain ArcChain::point(double r, Point p, Point generator) {
  const CircleArc arc{generator, p, p, true};
  return ArcChain(r, ChainKind::point, ArcSeq(std::span<const CircleArc>(&arc, 1)));
}

ArcChain ArcChain::circle(double r, Point center) {
  const Point s{center.x + r, center.y};
  const CircleArc arc{center, s, s, true};
  return ArcChain(r, ChainKind::region, ArcSeq(std::span<const CircleArc>(&arc, 1)));
}

ArcChain ArcChain::region(double r, std::span<const CircleArc> arcs) { return region(r, ArcSeq(arcs)); }

ArcChain ArcChain::region(double r, ArcSeq arcs) {
  if (arcs.empty()) return empty(r);
  return ArcChain(r, ChainKind::region, arcs.rotate(arcs.lexmin_position()));
}

bool ArcChain::is_full_circle() const { return kind_ == ChainKind::region && arcs_.size() == 1; }

std::vector<Point> ArcChain::centers() const {
  std::vector<Point> out;
  for (const CircleArc& a : arcs()) out.push_back(a.center);
  return out;
}

bool ArcChain::contains(Point p, double slack) const {
  switch (kind_) {
    case ChainKind::plane: return true;
    case ChainKind::empty: return false;
    case ChainKind::point: return dist(p, arcs_.at(0).start) <= slack;
    case ChainKind::region: break;
  }
  const double lim = (r_ + slack) * (r_ + slack);
  for (const CircleArc& a : arcs()) {
    if (dist2(a.center, p) > lim) return false;
  }
  return true;
}

Point ArcChain::interior_point() const {
  if (kind_ == ChainKind::plane) return {};
  if (kind_ == ChainKind::empty) throw ContractError("interior_point of an empty chain");
  const auto& arcs = this->arcs();
  if (kind_ == ChainKind::point) return arcs[0].start;
  if (arcs.size() == 1) return arcs[0].center;
  Point sum{};
  for (const CircleArc& a : arcs) {
    Point bis = (a.start - a.center) + (a.end - a.center);
    const double len = norm(bis);
    const Point mid = len > 0.0 ? a.center + (r_ / len) * bis : a.start;
    sum = sum + a.start + mid;
  }
  return (0.5 / static_cast<double>(arcs.size())) * sum;
}

void dump_chain(std::ostream& os, const ArcChain& chain) {
  char buf[256];
  for (const CircleArc& a : chain.arcs()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %.17g %.17g\n", a.center.x, a.center.y,
                  a.start.x, a.start.y, a.end.x, a.end.y);
    os << buf;
  }
}

ArcSeq extract_span(const ArcChain& chain, const BoundaryPart& part, const Tolerance& tol) {
  (void)tol;
  const ArcSeq& seq = chain.seq();
  if (part.kind == PartKind::full) return seq;
  if (part.kind == PartKind::none) return {};
  const std::size_t n = seq.size();
  const std::size_t ks = part.s_arc % n, ke = part.e_arc % n;
  const CircleArc& first = seq.at(ks);
  if (ks == ke) {
    // Positions along the arc; a point just before its start (by rounding)
    // reads as nearly a full turn, so fold the gap behind the arc back to
    // negative values.
    const double len = angle_from(first.center, first.start, first.end);
    auto pos = [&](Point p) {
      const double x = angle_from(first.center, first.start, p);
      return x > 0.5 * (len + 4.0) ? x - 4.0 : x;
    };
    const double ps = pos(part.s), pe = pos(part.e);
    if (n == 1 || pe >= ps - 1e-12) {
      const CircleArc single{first.center, part.s, part.e, true};
      return ArcSeq(std::span<const CircleArc>(&single, 1));
    }
  }
  std::size_t count = (ke + n - ks) % n + 1;
  if (ks == ke) count = n + 1;
  ArcSeq rotated = seq.rotate(ks);
  ArcSeq body;
  if (count > n) {
    body = ArcSeq::concat(rotated, ArcSeq(std::span<const CircleArc>(&first, 1)));
  } else {
    body = rotated.split(count).first;
  }
  auto [head, rest] = body.split(1);
  auto [middle, tail] = rest.split(rest.size() - 1);
  CircleArc h = head.at(0);
  CircleArc t = tail.at(0);
  h.start = part.s;
  t.end = part.e;
  ArcSeq out = ArcSeq::concat(ArcSeq(std::span<const CircleArc>(&h, 1)), middle);
  return ArcSeq::concat(out, ArcSeq(std::span<const CircleArc>(&t, 1)));
}

}  // namespace twocenter
