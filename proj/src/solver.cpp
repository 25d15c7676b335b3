#include "twocenter/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace twocenter {

std::vector<double> critical_radii(std::span<const Point> S, const Tolerance& tol) {
  require_finite(S);
  std::vector<double> out;
  const std::size_t n = S.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (S[a] == S[b]) continue;
      out.push_back(0.5 * dist(S[a], S[b]));
      for (std::size_t c = b + 1; c < n; ++c) {
        if (S[c] == S[a] || S[c] == S[b]) continue;
        if (auto cc = circumcircle(S[a], S[b], S[c])) out.push_back(cc->radius);
      }
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<double> merged;
  for (double r : out) {
    if (merged.empty() || r > merged.back() * (1.0 + tol.eps_rel)) merged.push_back(r);
  }
  return merged;
}

namespace {

struct Witness {
  double radius = 0.0;
  SplitInstance inst;
  std::size_t i = 0;
  std::size_t j = 0;
};

using Decider = std::function<std::optional<Witness>(double)>;

// Smallest radius at which `decider` says yes: binary search over the
// candidate radii, or floating bisection.
Witness search(std::span<const Point> S, const Decider& decider, const SolveOptions& opts, double upper) {
  const bool bisect = opts.bisect || S.size() > opts.candidate_cap;
  if (!bisect) {
    const auto cand = critical_radii(S);
    std::size_t lo = 0, hi = cand.size();
    std::optional<Witness> best;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (auto w = decider(cand[mid])) {
        best = std::move(w);
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    if (best) return *best;
  }
  double lo = 0.0, hi = upper;
  std::optional<Witness> best = decider(hi);
  if (!best) throw ContractError("decision failed at the single-disk radius");
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (auto w = decider(mid)) {
      best = std::move(w);
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return *best;
}

// The decision reports the last feasible column inside its group, which
// depends on the group width. Move to the last column of the row whose A side
// still fits; B only shrinks as j grows, so the split stays feasible.
void canonical_column(Witness& w) {
  const RadiusMatrixView view(w.inst);
  const double limit = w.radius * (1.0 + w.inst.tol.eps_rel) + w.inst.tol.band();
  std::size_t lo = w.j, hi = w.inst.n_minus();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (view.A(w.i, mid) <= limit) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  w.j = lo;
}

EnclosingDisk med_of(const std::vector<Point>& pts) { return smallest_enclosing_disk(pts); }

// Sides of the split (i, j): S+[i+1..] u S-[1..j] is side 0.
std::vector<int> sides_of(const SplitInstance& in, std::size_t i, std::size_t j, std::size_t n) {
  std::vector<int> side(n, 1);
  for (std::size_t k = i; k < in.n_plus(); ++k) side[in.plus_index[k]] = 0;
  for (std::size_t k = 0; k < j; ++k) side[in.minus_index[k]] = 0;
  return side;
}

TwoCenterSolution finish(std::span<const Point> S, std::vector<int> side, const std::optional<Point>& o,
                         const Tolerance& tol) {
  TwoCenterSolution sol;
  std::vector<Point> part[2];
  for (std::size_t k = 0; k < S.size(); ++k) part[side[k]].push_back(S[k]);
  Disk d[2];
  for (int s = 0; s < 2; ++s) {
    const EnclosingDisk e = med_of(part[s]);
    d[s] = e.degenerate ? Disk{o.value_or(part[1 - s].empty() ? Point{} : part[1 - s][0]), 0.0} : e.disk;
  }
  double radius = std::max(d[0].radius, d[1].radius);
  if (o) {
    for (int s = 0; s < 2; ++s) {
      if (dist(d[s].center, *o) > radius + tol.band()) {
        part[s].push_back(*o);
        d[s] = med_of(part[s]).disk;
        sol.o_adjusted = true;
      }
    }
    radius = std::max({radius, d[0].radius, d[1].radius});
  }
  sol.radius = radius;
  sol.d1 = {d[0].center, radius};
  sol.d2 = {d[1].center, radius};
  sol.side = std::move(side);
  return sol;
}

// Every split of a tiny instance, evaluated directly.
std::optional<Witness> exhaustive(std::span<const Point> S, Point o) {
  std::optional<Witness> best;
  for (Axis axis : {Axis::x, Axis::y}) {
    SplitInstance in = make_split_instance(S, o, axis);
    RadiusMatrixView v(in);
    for (std::size_t i = 0; i <= in.n_plus(); ++i) {
      for (std::size_t j = 0; j <= in.n_minus(); ++j) {
        const double r = v.r(i, j);
        if (!best || r < best->radius) best = Witness{r, in, i, j};
      }
    }
  }
  return best;
}

}  // namespace

TwoCenterSolution solve_restricted(std::span<const Point> S, Point o, const SolveOptions& opts) {
  require_finite(S);
  require_finite(o);
  for (std::size_t k = 0; k < S.size(); ++k) {
    if (S[k] == o) throw InputError("point " + std::to_string(k) + " coincides with o");
  }
  std::vector<Point> all(S.begin(), S.end());
  all.push_back(o);
  const Tolerance tol = Tolerance::for_points(all);
  if (S.empty()) {
    TwoCenterSolution sol;
    sol.d1 = sol.d2 = {o, 0.0};
    return sol;
  }

  // Copies of a point share a ray from o, so they always land on the same
  // side; solve on the distinct points.
  std::vector<Point> uniq(S.begin(), S.end());
  std::sort(uniq.begin(), uniq.end(), lex_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  Witness w;
  if (uniq.size() <= 3) {
    w = *exhaustive(uniq, o);
  } else {
    const SplitInstance inst[2] = {make_split_instance(uniq, o, Axis::x), make_split_instance(uniq, o, Axis::y)};
    const DecideOptions dopts{opts.group_width, opts.threads};
    const Decider decider = [&](double r) -> std::optional<Witness> {
      for (const SplitInstance& in : inst) {
        const Decision d = decide(in, r, dopts);
        if (d.yes) return Witness{r, in, d.i, d.j};
      }
      return std::nullopt;
    };
    w = search(uniq, decider, opts, smallest_enclosing_disk(uniq).disk.radius);
    canonical_column(w);
  }

  const auto uside = sides_of(w.inst, w.i, w.j, uniq.size());
  std::map<std::pair<double, double>, int> by_point;
  for (std::size_t k = 0; k < uniq.size(); ++k) by_point[{uniq[k].x, uniq[k].y}] = uside[k];
  std::vector<int> side(S.size());
  for (std::size_t k = 0; k < S.size(); ++k) side[k] = by_point[{S[k].x, S[k].y}];

  TwoCenterSolution sol = finish(S, std::move(side), o, tol);
  sol.mode = SolveMode::restricted;
  sol.axis = w.inst.axis;
  sol.i = w.i;
  sol.j = w.j;
  return sol;
}

bool in_convex_position(std::span<const Point> S) {
  if (S.size() < 3) {
    return S.size() < 2 || !(S[0] == S[1]);
  }
  return convex_hull(std::vector<Point>(S.begin(), S.end())).size() == S.size();
}

TwoCenterSolution solve_convex(std::span<const Point> S, const SolveOptions& opts) {
  require_finite(S);
  const std::size_t n = S.size();
  if (!in_convex_position(S)) throw InputError("points are not in convex position");
  const Tolerance tol = Tolerance::for_points(S);
  if (n < 3) {
    std::vector<int> side(n, 0);
    if (n == 2) side[1] = 1;
    TwoCenterSolution sol = finish(S, side, std::nullopt, tol);
    sol.mode = SolveMode::convex;
    return sol;
  }

  // Boundary order p_1..p_n and the input index of each.
  const auto hull = convex_hull(std::vector<Point>(S.begin(), S.end()));
  std::map<std::pair<double, double>, std::size_t> index_of;
  for (std::size_t k = 0; k < n; ++k) index_of[{S[k].x, S[k].y}] = k;
  std::vector<std::size_t> idx;
  for (const Point& p : hull) idx.push_back(index_of[{p.x, p.y}]);

  auto run = [&](std::size_t from, std::size_t to) {  // 1-based inclusive, from <= to
    std::vector<Point> pts(hull.begin() + static_cast<long>(from) - 1, hull.begin() + static_cast<long>(to));
    return smallest_enclosing_disk(pts).disk.radius;
  };
  // Splits anchored at p_1: {p_1..p_k} and {p_{k+1}..p_n}. The first radius
  // grows with k and the second shrinks; k* is the last k where the first is
  // still no larger.
  std::size_t lo = 1, hi = n - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (run(1, mid) <= run(mid + 1, n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::size_t kstar = lo;
  std::size_t best_k = kstar;
  double best = std::max(run(1, kstar), run(kstar + 1, n));
  if (kstar + 1 <= n - 1) {
    const double alt = std::max(run(1, kstar + 1), run(kstar + 2, n));
    if (alt < best) {
      best = alt;
      best_k = kstar + 1;
    }
  }
  std::vector<int> side(n, 1);
  for (std::size_t k = 0; k < best_k; ++k) side[idx[k]] = 0;
  TwoCenterSolution sol = finish(S, side, std::nullopt, tol);
  sol.radius = std::max(sol.radius, best);

  // Splits with one cut on each side of the line through the midpoints of
  // edges (p_n, p_1) and (p_k*, p_k*+1). Splits with both cuts on one side
  // are never better than the anchored ones above.
  {
    const Point m0 = midpoint(hull[n - 1], hull[0]);
    const Point m1 = midpoint(hull[kstar - 1], hull[kstar]);
    const Point o = midpoint(m0, m1);
    const Point dir = m0 - o;
    const double len = norm(dir);
    const Point ux{dir.x / len, dir.y / len}, uy = perp(ux);
    SplitInstance inst;
    inst.o = o;
    inst.tol = tol;
    for (std::size_t k = 0; k < n; ++k) {
      const Point v = hull[k] - o;
      const Point local{dot(v, ux), dot(v, uy)};
      if (k < kstar) {
        inst.plus.push_back(local);
        inst.plus_index.push_back(k);
      } else {
        inst.minus.push_back(local);
        inst.minus_index.push_back(k);
      }
    }
    const DecideOptions dopts{opts.group_width, opts.threads};
    const Decider decider = [&](double r) -> std::optional<Witness> {
      const Decision d = decide(inst, r, dopts);
      if (d.yes) return Witness{r, inst, d.i, d.j};
      return std::nullopt;
    };
    Witness w = search(hull, decider, opts, smallest_enclosing_disk(hull).disk.radius);
    canonical_column(w);
    const auto hull_side = sides_of(w.inst, w.i, w.j, n);
    std::vector<int> cross_side(n);
    for (std::size_t k = 0; k < n; ++k) cross_side[idx[k]] = hull_side[k];
    TwoCenterSolution alt = finish(S, cross_side, std::nullopt, tol);
    if (alt.radius < sol.radius) {
      sol = alt;
      sol.i = w.i;
      sol.j = w.j;
    }
  }
  sol.mode = SolveMode::convex;
  return sol;
}

}  // namespace twocenter
