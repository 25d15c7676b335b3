#include "twocenter/hull.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace twocenter {

namespace {

// v inside the counterclockwise arc lo -> hi (vectors from the arc centre),
// for arcs shorter than a half turn.
bool within(Point v, Point lo, Point hi, double slack) {
  return dot(v, lo + hi) > 0.0 && cross(lo, v) >= -slack && cross(v, hi) >= -slack;
}

struct Interval {
  Point lo;
  Point hi;
  int lo_bound = -1;
  int hi_bound = -1;
};

// Part of `arc` inside every disk centred at an arc centre of `others`.
std::optional<Interval> arc_inside(const CircleArc& arc, bool full,
                                   const std::vector<CircleArc>& others, double r,
                                   const Tolerance& tol) {
  const Point c = arc.center;
  const double slack = r * tol.band();
  bool cur_full = full;
  Point lo = arc.start - c, hi = arc.end - c;
  int lo_b = -1, hi_b = -1;
  for (std::size_t k = 0; k < others.size(); ++k) {
    const Point q = others[k].center;
    const double d = dist(c, q);
    if (d <= tol.eps_abs) continue;
    if (d > 2.0 * r + tol.band()) return std::nullopt;
    const auto pts = circle_circle_points({c, r}, {q, r}, tol);
    if (pts.empty()) return std::nullopt;
    const Point left = pts[0] - c;
    const Point right = (pts.size() == 2 ? pts[1] : pts[0]) - c;
    const int idx = static_cast<int>(k);
    if (cur_full) {
      lo = right;
      hi = left;
      lo_b = hi_b = idx;
      cur_full = false;
      continue;
    }
    if (within(right, lo, hi, slack)) {
      lo = right;
      lo_b = idx;
    } else if (!within(lo, right, left, slack)) {
      return std::nullopt;
    }
    if (within(left, lo, hi, slack)) {
      hi = left;
      hi_b = idx;
    } else if (!within(hi, right, left, slack)) {
      return std::nullopt;
    }
  }
  if (cur_full) return Interval{arc.start, arc.end, -1, -1};
  return Interval{c + lo, c + hi, lo_b, hi_b};
}

// Arc of `arcs` carrying boundary point p.
std::size_t locate(const std::vector<CircleArc>& arcs, Point p, double r, const Tolerance& tol) {
  std::size_t best = 0;
  double best_err = 1e300;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    double err = std::abs(dist(arcs[k].center, p) - r);
    if (!on_arc(arcs[k], p, r, tol)) err += r;
    if (err < best_err) {
      best_err = err;
      best = k;
    }
  }
  return best;
}

struct SideCrossing {
  Point s, e;
  std::size_t s_p, e_p, s_q, e_q;
  bool touching = false;
};

// P has some but not all vertices inside I(Q): the entry and exit points of
// the boundary of P into I(Q).
SideCrossing crossing_from(const std::vector<CircleArc>& P, const std::vector<char>& in,
                           const std::vector<CircleArc>& Q, double r, const Tolerance& tol) {
  const std::size_t n = P.size();
  std::size_t u = 0;
  while (!(in[u] && !in[(u + n - 1) % n])) ++u;
  std::size_t v = u;
  while (in[(v + 1) % n]) v = (v + 1) % n;
  const std::size_t entry = (u + n - 1) % n, exit = v;

  SideCrossing out;
  out.s_p = entry;
  out.e_p = exit;
  if (auto iv = arc_inside(P[entry], false, Q, r, tol)) {
    out.s = iv->lo;
    out.e_q = iv->lo_bound >= 0 ? static_cast<std::size_t>(iv->lo_bound) : locate(Q, out.s, r, tol);
  } else {
    out.s = P[u].start;
    out.e_q = locate(Q, out.s, r, tol);
  }
  if (auto iv = arc_inside(P[exit], false, Q, r, tol)) {
    out.e = iv->hi;
    out.s_q = iv->hi_bound >= 0 ? static_cast<std::size_t>(iv->hi_bound) : locate(Q, out.e, r, tol);
  } else {
    out.e = P[v].start;
    out.s_q = locate(Q, out.e, r, tol);
  }
  if (u == v && dist(out.s, out.e) <= 2.0 * tol.band()) {
    out.s = out.e = P[u].start;
    out.touching = true;
  }
  return out;
}

SeparatedResult make_crossing(int oa, int ob, Point s, Point e, std::size_t s_a, std::size_t e_a,
                              std::size_t e_b, std::size_t s_b, bool touching) {
  SeparatedResult res;
  res.relation = Relation::crossing;
  res.a_part = {oa, PartKind::span, s, e, s_a, e_a};
  res.b_part = {ob, PartKind::span, e, s, e_b, s_b};
  res.touching = touching;
  return res;
}

}  // namespace

bool on_arc(const CircleArc& arc, Point p, double r, const Tolerance& tol) {
  if (arc.start == arc.end) return true;
  const Point c = arc.center;
  return within(p - c, arc.start - c, arc.end - c, r * tol.band());
}

SeparatedResult separated_intersect(const ArcChain& a, const ArcChain& b, const Tolerance& tol,
                                    int oa, int ob) {
  SeparatedResult res;
  res.a_part = BoundaryPart::nothing(oa);
  res.b_part = BoundaryPart::nothing(ob);
  auto contained = [&](Relation rel) {
    res.relation = rel;
    if (rel == Relation::a_in_b) res.a_part = BoundaryPart::whole(oa);
    if (rel == Relation::b_in_a) res.b_part = BoundaryPart::whole(ob);
    return res;
  };
  if (a.is_empty() || b.is_empty()) return res;
  if (b.kind() == ChainKind::plane) return contained(Relation::a_in_b);
  if (a.kind() == ChainKind::plane) return contained(Relation::b_in_a);
  const double band = tol.band();
  if (a.kind() == ChainKind::point) {
    res.touching = true;
    return b.contains(a.seq().at(0).start, band) ? contained(Relation::a_in_b) : res;
  }
  if (b.kind() == ChainKind::point) {
    res.touching = true;
    return a.contains(b.seq().at(0).start, band) ? contained(Relation::b_in_a) : res;
  }

  const double r = a.radius();
  const auto& A = a.arcs();
  const auto& B = b.arcs();
  const bool full_a = A.size() == 1, full_b = B.size() == 1;
  std::vector<char> in_a(full_a ? 0 : A.size()), in_b(full_b ? 0 : B.size());
  std::size_t count_a = 0, count_b = 0;
  for (std::size_t k = 0; k < in_a.size(); ++k) count_a += in_a[k] = b.contains(A[k].start, band);
  for (std::size_t k = 0; k < in_b.size(); ++k) count_b += in_b[k] = a.contains(B[k].start, band);

  if (!full_a && count_a > 0 && count_a < A.size()) {
    const SideCrossing c = crossing_from(A, in_a, B, r, tol);
    return make_crossing(oa, ob, c.s, c.e, c.s_p, c.e_p, c.s_q, c.e_q, c.touching);
  }
  if (!full_b && count_b > 0 && count_b < B.size()) {
    const SideCrossing c = crossing_from(B, in_b, A, r, tol);
    // f(B,A) = B[c.s, c.e], hence f(A,B) = A[c.e, c.s].
    return make_crossing(oa, ob, c.e, c.s, c.s_q, c.e_q, c.s_p, c.e_p, c.touching);
  }
  if (!full_a && count_a == A.size()) return contained(Relation::a_in_b);
  if (!full_b && count_b == B.size()) return contained(Relation::b_in_a);
  if (full_a && full_b && dist(A[0].center, B[0].center) <= tol.eps_abs) {
    return contained(Relation::a_in_b);
  }

  // No vertex of either chain lies in the other: disjoint, or a lens cut out
  // by one arc of each.
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      const double d = dist(A[i].center, B[j].center);
      if (d <= tol.eps_abs || d > 2.0 * r + band) continue;
      const auto pts = circle_circle_points({A[i].center, r}, {B[j].center, r}, tol);
      if (pts.empty()) continue;
      const Point left = pts[0];
      const Point right = pts.size() == 2 ? pts[1] : pts[0];
      if (!on_arc(A[i], left, r, tol) || !on_arc(A[i], right, r, tol)) continue;
      if (!on_arc(B[j], left, r, tol) || !on_arc(B[j], right, r, tol)) continue;
      return make_crossing(oa, ob, right, left, i, i, j, j, pts.size() == 1);
    }
  }
  return res;
}

ArcChain intersect_separated(const ArcChain& a, const ArcChain& b, const Tolerance& tol) {
  const double r = a.kind() == ChainKind::plane ? b.radius() : a.radius();
  if (a.is_empty() || b.is_empty()) return ArcChain::empty(r);
  const SeparatedResult res = separated_intersect(a, b, tol);
  switch (res.relation) {
    case Relation::disjoint: return ArcChain::empty(r);
    case Relation::a_in_b: return a;
    case Relation::b_in_a: return b;
    case Relation::crossing: break;
  }
  const Point s = res.a_part.s, e = res.a_part.e;
  if (res.touching) {
    return ArcChain::point(r, midpoint(s, e), a.seq().at(res.a_part.s_arc).center);
  }
  ArcSeq joined = ArcSeq::concat(extract_span(a, res.a_part, tol), extract_span(b, res.b_part, tol));
  auto arcs = joined.to_vector();
  std::vector<CircleArc> kept;
  for (const CircleArc& arc : arcs) {
    if (dist(arc.start, arc.end) > tol.eps_abs) kept.push_back(arc);
  }
  if (kept.empty()) return ArcChain::point(r, midpoint(s, e), a.seq().at(res.a_part.s_arc).center);
  if (kept.size() == arcs.size()) return ArcChain::region(r, std::move(joined));
  return ArcChain::region(r, kept);
}

ArcChain intersection_hull(std::span<const Point> X, double r, const Tolerance& tol) {
  if (!(r > 0.0)) throw ContractError("intersection_hull needs r > 0");
  require_finite(X);
  if (X.empty()) return ArcChain::plane(r);
  const EnclosingDisk med = smallest_enclosing_disk(X);
  if (med.disk.radius > r + tol.band()) return ArcChain::empty(r);
  if (med.disk.radius >= r - tol.band()) return ArcChain::point(r, med.disk.center, med.support.front());

  std::vector<Point> pts(X.begin(), X.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> ArcChain {
    if (hi - lo == 1) return ArcChain::circle(r, pts[lo]);
    const std::size_t mid = lo + (hi - lo) / 2;
    return intersect_separated(self(self, lo, mid), self(self, mid, hi), tol);
  };
  return build(build, 0, pts.size());
}

ArcChain circular_hull(std::span<const Point> X, double r, const Tolerance& tol) {
  const ArcChain inner = intersection_hull(X, r, tol);
  if (inner.is_empty() || inner.kind() == ChainKind::plane) return ArcChain::empty(r);
  if (inner.kind() == ChainKind::point) {
    const Point p = inner.seq().at(0).start;
    std::vector<Point> on;
    for (const Point& x : X) {
      if (std::abs(dist(x, p) - r) <= tol.band() + tol.eps_rel * r) on.push_back(x);
    }
    std::sort(on.begin(), on.end(), lex_less);
    on.erase(std::unique(on.begin(), on.end()), on.end());
    const auto order = angular_order(p, on);
    std::vector<CircleArc> arcs;
    for (std::size_t k = 0; k < order.size(); ++k) {
      arcs.push_back({p, on[order[k]], on[order[(k + 1) % order.size()]], true});
    }
    return ArcChain::region(r, arcs);
  }
  const auto& arcs = inner.arcs();
  if (arcs.size() == 1) return ArcChain::point(r, arcs[0].center, arcs[0].center);
  std::vector<CircleArc> dual;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const CircleArc& next = arcs[(k + 1) % arcs.size()];
    dual.push_back({arcs[k].end, arcs[k].center, next.center, true});
  }
  return ArcChain::region(r, dual);
}

std::vector<BoundaryPart> clip_boundary(const ArcChain& chain, std::span<const BoundaryPart> parts,
                                        Point witness, const Tolerance& tol, int owner) {
  const double band = tol.band();
  if (chain.is_empty()) return {};
  if (chain.kind() != ChainKind::plane && !chain.contains(witness, band)) {
    throw ContractError("clip_boundary: witness outside the region");
  }
  std::vector<const BoundaryPart*> spans;
  for (const BoundaryPart& p : parts) {
    if (p.kind == PartKind::none) return {};
    if (p.kind == PartKind::span) spans.push_back(&p);
  }
  if (chain.kind() == ChainKind::point) {
    const Point p = chain.seq().at(0).start;
    return {{owner, PartKind::span, p, p, 0, 0}};
  }
  if (spans.empty()) return {BoundaryPart::whole(owner)};

  double dmin = 1e300;
  for (const BoundaryPart* p : spans) dmin = std::min({dmin, dist(p->s, witness), dist(p->e, witness)});
  const double eps = 4.0 * band / std::max(dmin, 1e-300) + 1e-12;

  auto key = [&](Point p) { return pseudo_angle(p - witness); };
  auto rel = [&](double x, double base) {
    double d = std::fmod(x - base, 4.0);
    if (d < 0.0) d += 4.0;
    return d >= 4.0 - eps ? 0.0 : d;
  };
  std::vector<double> ks(spans.size()), len(spans.size());
  for (std::size_t m = 0; m < spans.size(); ++m) {
    ks[m] = key(spans[m]->s);
    const bool degenerate = spans[m]->s == spans[m]->e;
    len[m] = degenerate ? 0.0 : key(spans[m]->e) - ks[m];
    if (len[m] < 0.0) len[m] += 4.0;
  }

  std::vector<BoundaryPart> out;
  std::vector<double> starts;
  for (std::size_t k = 0; k < spans.size(); ++k) {
    bool inside_all = true;
    for (std::size_t m = 0; m < spans.size() && inside_all; ++m) {
      if (m != k) inside_all = rel(ks[k], ks[m]) <= len[m] + eps;
    }
    if (!inside_all) continue;
    bool seen = false;
    for (double s0 : starts) seen = seen || std::abs(rel(ks[k], s0)) <= eps;
    if (seen) continue;
    starts.push_back(ks[k]);
    // The component ends at the first part end met going counterclockwise.
    std::size_t best = k;
    double best_d = 1e300;
    for (std::size_t m = 0; m < spans.size(); ++m) {
      const double d = rel(ks[m] + len[m], ks[k]);
      if (d < best_d) {
        best_d = d;
        best = m;
      }
    }
    const BoundaryPart& first = *spans[k];
    const BoundaryPart& last = *spans[best];
    if (best_d <= eps) {
      // A single point; keep the endpoints identical so later clips see it.
      out.push_back({owner, PartKind::span, first.s, first.s, first.s_arc, first.s_arc});
    } else {
      out.push_back({owner, PartKind::span, first.s, last.e, first.s_arc, last.e_arc});
    }
  }
  return out;
}

std::vector<BoundaryPart> clip_boundary_canonical(const ArcChain& chain,
                                                  std::span<const BoundaryPart> left,
                                                  std::span<const BoundaryPart> right,
                                                  Point witness, const Tolerance& tol, int owner) {
  const auto lhs = clip_boundary(chain, left, witness, tol, owner);
  const auto rhs = clip_boundary(chain, right, witness, tol, owner);
  // Each side is a union of components; intersect them pairwise.
  std::vector<BoundaryPart> out;
  for (const BoundaryPart& a : lhs) {
    for (const BoundaryPart& b : rhs) {
      const BoundaryPart both[2] = {a, b};
      for (const BoundaryPart& c : clip_boundary(chain, both, witness, tol, owner)) out.push_back(c);
    }
  }
  return out;
}

bool check_boundary_order(const ArcChain& chain, std::span<const Point> ordered) {
  std::vector<long> ranks;
  for (const Point& c : chain.centers()) {
    auto it = std::find(ordered.begin(), ordered.end(), c);
    if (it == ordered.end()) return false;
    ranks.push_back(static_cast<long>(it - ordered.begin()));
  }
  const std::size_t n = ranks.size();
  if (n <= 2) return true;
  std::vector<int> signs;
  for (std::size_t k = 0; k < n; ++k) {
    const long d = ranks[(k + 1) % n] - ranks[k];
    if (d != 0) signs.push_back(d > 0 ? 1 : -1);
  }
  std::size_t changes = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != signs[(k + 1) % signs.size()]) ++changes;
  }
  return changes <= 2;
}

}  // namespace twocenter
