#include "twocenter/decision.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace twocenter {

Point SplitInstance::to_world(Point local) const {
  return (axis == Axis::y ? rotate_quarter(local, 1) : local) + o;
}

SplitInstance make_split_instance(std::span<const Point> S, Point o, Axis axis) {
  require_finite(o);
  require_finite(S);
  SplitInstance inst;
  inst.o = o;
  inst.axis = axis;
  std::vector<Point> all(S.begin(), S.end());
  all.push_back(o);
  inst.tol = Tolerance::for_points(all);

  std::vector<Point> up, down;
  std::vector<std::size_t> up_idx, down_idx;
  for (std::size_t k = 0; k < S.size(); ++k) {
    Point p = S[k] - o;
    if (axis == Axis::y) p = rotate_quarter(p, -1);
    if (p.x == 0.0 && p.y == 0.0) {
      std::ostringstream os;
      os << "point " << k << " coincides with o";
      throw InputError(os.str());
    }
    if (p.y > 0.0) {
      up.push_back(p);
      up_idx.push_back(k);
    } else {
      down.push_back(p);
      down_idx.push_back(k);
    }
  }
  for (std::size_t k : angular_order({0, 0}, up)) {
    inst.plus.push_back(up[k]);
    inst.plus_index.push_back(up_idx[k]);
  }
  // Sorting the reflected lower points puts angle pi first and 2 pi last.
  std::vector<Point> flipped;
  for (const Point& p : down) flipped.push_back({-p.x, -p.y});
  for (std::size_t k : angular_order({0, 0}, flipped)) {
    inst.minus.push_back(down[k]);
    inst.minus_index.push_back(down_idx[k]);
  }
  return inst;
}

HullTree::HullTree(std::span<const Point> pts) : n_(pts.size()) {
  if (n_ == 0) return;
  hulls_.resize(4 * n_);
  build(1, 1, n_, pts);
}

void HullTree::build(std::size_t k, std::size_t lo, std::size_t hi, std::span<const Point> pts) {
  if (lo == hi) {
    hulls_[k] = {pts[lo - 1]};
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  build(2 * k, lo, mid, pts);
  build(2 * k + 1, mid + 1, hi, pts);
  std::vector<Point> both = hulls_[2 * k];
  both.insert(both.end(), hulls_[2 * k + 1].begin(), hulls_[2 * k + 1].end());
  hulls_[k] = convex_hull(std::move(both));
}

void HullTree::collect(std::size_t i, std::size_t j, std::vector<Point>& out) const {
  if (i > j || n_ == 0) return;
  collect(1, 1, n_, i, j, out);
}

void HullTree::collect(std::size_t k, std::size_t lo, std::size_t hi, std::size_t i, std::size_t j,
                       std::vector<Point>& out) const {
  if (j < lo || hi < i) return;
  if (i <= lo && hi <= j) {
    out.insert(out.end(), hulls_[k].begin(), hulls_[k].end());
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  collect(2 * k, lo, mid, i, j, out);
  collect(2 * k + 1, mid + 1, hi, i, j, out);
}

RadiusMatrixView::RadiusMatrixView(const SplitInstance& inst) : plus_(inst.plus), minus_(inst.minus) {}

double RadiusMatrixView::A(std::size_t i, std::size_t j) const {
  std::vector<Point> pts;
  plus_.collect(i + 1, n_plus(), pts);
  minus_.collect(1, j, pts);
  return smallest_enclosing_disk(pts).disk.radius;
}

double RadiusMatrixView::B(std::size_t i, std::size_t j) const {
  std::vector<Point> pts;
  plus_.collect(1, i, pts);
  minus_.collect(j + 1, n_minus(), pts);
  return smallest_enclosing_disk(pts).disk.radius;
}

double RadiusMatrixView::r(std::size_t i, std::size_t j) const { return std::max(A(i, j), B(i, j)); }

GroupTable build_group_table(const SplitInstance& inst, std::size_t g) {
  return build_group_table(inst, g, RadiusMatrixView(inst));
}

GroupTable build_group_table(const SplitInstance& inst, std::size_t g, const RadiusMatrixView& view) {
  if (g == 0) throw ContractError("group width must be at least 1");
  GroupTable table;
  table.g = g;
  const std::size_t n = inst.n_plus(), N = inst.n_minus();
  table.m = N / g;
  if (table.m == 0) {
    table.J = {0, N};
  } else {
    const std::size_t step = N / table.m;
    for (std::size_t t = 0; t <= table.m; ++t) table.J.push_back(t * step);
    if (table.J.back() != N) table.J.push_back(N);
  }

  // A - B is nonincreasing in i, so "A >= B" holds on a prefix of rows, and
  // that prefix only grows with the column.
  long prev = -1;
  for (std::size_t col : table.J) {
    auto holds = [&](std::size_t i) { return view.A(i, col) >= view.B(i, col); };
    const std::size_t lo = prev < 0 ? 0 : static_cast<std::size_t>(prev);
    long found = prev;
    if (holds(lo)) {
      std::size_t good = lo, step = 1;
      std::size_t bad = n + 1;
      while (good + step <= n) {
        if (!holds(good + step)) {
          bad = good + step;
          break;
        }
        good += step;
        step *= 2;
      }
      while (bad - good > 1) {
        const std::size_t mid = good + (bad - good) / 2;
        if (mid <= n && holds(mid)) {
          good = mid;
        } else {
          bad = mid;
        }
      }
      found = std::max(prev, static_cast<long>(good));
    }
    table.I.push_back(found);
    prev = found;
  }

  const std::size_t T = table.J.size() - 1;
  for (std::size_t t = 0; t < T; ++t) {
    const long lo = t == 0 ? 0 : std::max(table.I[t] + 1, 0L);
    const long hi = t + 1 == T ? static_cast<long>(n) : table.I[t + 1];
    for (long a = lo; a <= hi; a += static_cast<long>(g)) {
      const long b = std::min(hi, a + static_cast<long>(g) - 1);
      table.groups.push_back({t, static_cast<std::size_t>(a), static_cast<std::size_t>(b), table.J[t],
                              table.J[t + 1]});
    }
  }
  return table;
}

Anchors::Sweep Anchors::sweep(std::span<const Point> pts, std::vector<std::size_t> keys, bool forward,
                              double r, const Tolerance& tol) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  Sweep s;
  s.keys = keys;
  s.chains.resize(keys.size());
  const std::size_t n = pts.size();
  ArcChain chain = ArcChain::plane(r);
  if (forward) {
    // key k: I(pts[1..k])
    std::size_t next = 0;
    for (std::size_t k = 0; k <= n && next < keys.size(); ++k) {
      if (k > 0 && !chain.is_empty()) chain = intersect_separated(chain, ArcChain::circle(r, pts[k - 1]), tol);
      if (keys[next] == k) s.chains[next++] = chain;
    }
  } else {
    // key k: I(pts[k..n])
    std::size_t next = keys.size();
    for (std::size_t k = n + 1; k >= 1 && next > 0; --k) {
      if (k <= n && !chain.is_empty()) chain = intersect_separated(chain, ArcChain::circle(r, pts[k - 1]), tol);
      if (keys[next - 1] == k) s.chains[--next] = chain;
    }
  }
  return s;
}

const ArcChain& Anchors::Sweep::at(std::size_t k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k) throw ContractError("anchor chain was not prepared");
  return chains[static_cast<std::size_t>(it - keys.begin())];
}

Anchors::Anchors(const SplitInstance& inst, const GroupTable& table, double r, const Tolerance& tol) {
  std::vector<std::size_t> pp, ps, mp, ms;
  for (const Group& g : table.groups) {
    pp.push_back(g.row_lo);
    ps.push_back(g.row_hi + 1);
    mp.push_back(g.col_lo);
    ms.push_back(g.col_hi + 1);
  }
  plus_prefix_ = sweep(inst.plus, pp, true, r, tol);
  plus_suffix_ = sweep(inst.plus, ps, false, r, tol);
  minus_prefix_ = sweep(inst.minus, mp, true, r, tol);
  minus_suffix_ = sweep(inst.minus, ms, false, r, tol);
}

const ArcChain& Anchors::plus_prefix(std::size_t k) const { return plus_prefix_.at(k); }
const ArcChain& Anchors::plus_suffix(std::size_t k) const { return plus_suffix_.at(k); }
const ArcChain& Anchors::minus_prefix(std::size_t k) const { return minus_prefix_.at(k); }
const ArcChain& Anchors::minus_suffix(std::size_t k) const { return minus_suffix_.at(k); }

namespace {

std::vector<Point> slice(const std::vector<Point>& pts, std::size_t from, std::size_t to) {
  // points from..to, 1-based inclusive
  if (from > to) return {};
  return {pts.begin() + static_cast<long>(from) - 1, pts.begin() + static_cast<long>(to)};
}

SeparatedResult swapped(const SeparatedResult& r) {
  SeparatedResult out = r;
  std::swap(out.a_part, out.b_part);
  if (r.relation == Relation::a_in_b) out.relation = Relation::b_in_a;
  if (r.relation == Relation::b_in_a) out.relation = Relation::a_in_b;
  return out;
}

}  // namespace

GroupContext::GroupContext(const SplitInstance& inst, const Group& group, const Anchors& anchors, double r,
                           const Tolerance& tol)
    : group_(group),
      tol_(tol),
      local_plus_(slice(inst.plus, group.row_lo + 1, group.row_hi), r, tol),
      local_minus_(slice(inst.minus, group.col_lo + 1, group.col_hi), r, tol) {
  anchors_[0] = &anchors.plus_suffix(group.row_hi + 1);
  anchors_[1] = &anchors.minus_prefix(group.col_lo);
  anchors_[2] = &anchors.plus_prefix(group.row_lo);
  anchors_[3] = &anchors.minus_suffix(group.col_hi + 1);
  for (int k = 0; k < 4; ++k) {
    d_plus_[k] = build_d_structure(local_plus_, *anchors_[k], tol);
    d_minus_[k] = build_d_structure(local_minus_, *anchors_[k], tol);
  }
  a_pair_ = separated_intersect(*anchors_[0], *anchors_[1], tol);
  b_pair_ = separated_intersect(*anchors_[2], *anchors_[3], tol);
}

bool GroupContext::empty_of(const std::vector<Member>& members) const {
  std::vector<const ArcChain*> chains;
  chains.reserve(members.size());
  for (const Member& m : members) chains.push_back(m.chain);
  const PairLookup pair = [&](std::size_t p, std::size_t q) -> SeparatedResult {
    const Member& x = members[p];
    const Member& y = members[q];
    if (x.anchor >= 0 && y.anchor >= 0) return x.anchor == 0 ? a_pair_ : b_pair_;
    if (y.anchor >= 0) {
      const auto a = static_cast<std::size_t>(y.anchor);
      return x.plus_node >= 0 ? d_plus_[a].at(x.plus_node) : d_minus_[a].at(x.minus_node);
    }
    if (x.anchor >= 0) {
      const auto a = static_cast<std::size_t>(x.anchor);
      return swapped(y.plus_node >= 0 ? d_plus_[a].at(y.plus_node) : d_minus_[a].at(y.minus_node));
    }
    return separated_intersect(*x.chain, *y.chain, tol_);
  };
  return family_empty(chains, pair, tol_);
}

bool GroupContext::a_empty(std::size_t i, std::size_t j) const {
  const Group& g = group_;
  if (i < g.row_lo || i > g.row_hi || j < g.col_lo || j > g.col_hi) {
    throw ContractError("emptiness query outside the group");
  }
  std::vector<Member> members;
  for (int id : local_plus_.canonical_nodes(i + 1 - g.row_lo, g.row_hi - g.row_lo)) {
    members.push_back({&local_plus_.node(id).chain, id, -1, -1});
  }
  members.push_back({anchors_[0], -1, -1, 0});
  members.push_back({anchors_[1], -1, -1, 1});
  for (int id : local_minus_.canonical_nodes(1, j - g.col_lo)) {
    members.push_back({&local_minus_.node(id).chain, -1, id, -1});
  }
  return empty_of(members);
}

bool GroupContext::b_empty(std::size_t i, std::size_t j) const {
  const Group& g = group_;
  if (i < g.row_lo || i > g.row_hi || j < g.col_lo || j > g.col_hi) {
    throw ContractError("emptiness query outside the group");
  }
  std::vector<Member> members;
  members.push_back({anchors_[2], -1, -1, 2});
  for (int id : local_plus_.canonical_nodes(1, i - g.row_lo)) {
    members.push_back({&local_plus_.node(id).chain, id, -1, -1});
  }
  for (int id : local_minus_.canonical_nodes(j + 1 - g.col_lo, g.col_hi - g.col_lo)) {
    members.push_back({&local_minus_.node(id).chain, -1, id, -1});
  }
  members.push_back({anchors_[3], -1, -1, 3});
  return empty_of(members);
}

namespace {

// Scans the rows of one group. With `first_only`, stops at the first yes.
std::vector<Decision> scan_group(const SplitInstance& inst, const Group& g, const Anchors& anchors, double r,
                                 bool first_only) {
  const GroupContext ctx(inst, g, anchors, r, inst.tol);
  std::vector<Decision> rows;
  // The largest column with A[i,j] <= r never decreases as i grows.
  std::size_t j = g.col_lo;
  for (std::size_t i = g.row_lo; i <= g.row_hi; ++i) {
    Decision d{false, i, g.col_lo};
    if (!ctx.a_empty(i, g.col_lo)) {
      while (j < g.col_hi && !ctx.a_empty(i, j + 1)) ++j;
      d.j = j;
      d.yes = !ctx.b_empty(i, j);
    }
    rows.push_back(d);
    if (first_only && d.yes) break;
  }
  return rows;
}

struct Prepared {
  GroupTable table;
  Anchors anchors;
};

Prepared prepare(const SplitInstance& inst, double r, const DecideOptions& opts) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ContractError("decision radius must be positive");
  GroupTable table = build_group_table(inst, std::max<std::size_t>(opts.group_width, 1));
  Anchors anchors(inst, table, r, inst.tol);
  return {std::move(table), std::move(anchors)};
}

// Runs `work(k)` for every group index, spread over `threads` workers.
template <class F>
void for_groups(std::size_t count, std::size_t threads, F&& work) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) work(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < count;) work(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

Decision decide(const SplitInstance& inst, double r, const DecideOptions& opts) {
  const Prepared prep = prepare(inst, r, opts);
  const auto& groups = prep.table.groups;
  std::vector<Decision> found(groups.size());
  std::atomic<std::size_t> best{groups.size()};
  for_groups(groups.size(), opts.threads, [&](std::size_t k) {
    if (k > best.load()) return;
    const auto rows = scan_group(inst, groups[k], prep.anchors, r, true);
    if (!rows.empty() && rows.back().yes) {
      found[k] = rows.back();
      std::size_t cur = best.load();
      while (k < cur && !best.compare_exchange_weak(cur, k)) {
      }
    }
  });
  if (best.load() < groups.size()) return found[best.load()];
  return {};
}

std::vector<Decision> decide_rows(const SplitInstance& inst, double r, const DecideOptions& opts) {
  const Prepared prep = prepare(inst, r, opts);
  const auto& groups = prep.table.groups;
  std::vector<Decision> rows(inst.n_plus() + 1);
  for_groups(groups.size(), opts.threads, [&](std::size_t k) {
    for (const Decision& d : scan_group(inst, groups[k], prep.anchors, r, false)) rows[d.i] = d;
  });
  return rows;
}

Decision decide_point_set(std::span<const Point> S, Point o, double r, const DecideOptions& opts,
                          Axis* winning_axis) {
  for (Axis axis : {Axis::x, Axis::y}) {
    const Decision d = decide(make_split_instance(S, o, axis), r, opts);
    if (d.yes) {
      if (winning_axis) *winning_axis = axis;
      return d;
    }
  }
  return {};
}

}  // namespace twocenter
