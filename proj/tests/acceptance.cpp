// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
//
//   acceptance                  run every criterion
//   acceptance --records PATH   only write the determinism records to PATH

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "twocenter/decision.hpp"
#include "twocenter/generate.hpp"
#include "twocenter/hull.hpp"
#include "twocenter/io.hpp"
#include "twocenter/oracle.hpp"
#include "twocenter/range_tree.hpp"
#include "twocenter/solver.hpp"

using namespace twocenter;
using testsupport::overlap_instance;

namespace {

// Pinned tolerances and sizes.
constexpr double kRadiusRel = 1e-9;       // solver vs oracle
constexpr double kDecideBand = 1e-7;      // radii this close to r* are not judged
constexpr double kEmptyBand = 1e-7;       // same, for emptiness against MED
constexpr double kHexagonAbs = 1e-9;
constexpr int kRestrictedInstances = 500;
constexpr int kConvexInstances = 200;
constexpr int kDecideInstances = 300;
constexpr int kRadiiPerInstance = 20;
constexpr int kEmptinessTrials = 1000;
constexpr double kRestrictedBudgetSeconds = 120.0;
constexpr double kScalingLimitSeconds = 5.0;
constexpr double kRatioLo = 1.6, kRatioHi = 3.0;
const std::vector<std::size_t> kGroupWidths{1, 2, 5, 16, 64};
const std::vector<std::size_t> kScalingSizes{25000, 50000, 100000};
constexpr double kScalingRadius = 0.95;  // below the two-cluster optimum: every row is scanned
constexpr int kScalingReps = 3;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool rel_equal(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}); }

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s  (%s)\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// ---------------------------------------------------------------------------
// Shared instance sets, oracle values computed once.

struct OverlapCase {
  std::vector<Point> S;
  Point o;
  double oracle;  // brute_restricted
};

std::vector<OverlapCase> overlap_cases(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OverlapCase> out;
  while (static_cast<int>(out.size()) < count) {
    OverlapCase c;
    double rstar;
    if (!overlap_instance(3 + rng() % 38, rng, c.S, c.o, rstar)) continue;
    c.oracle = brute_restricted(c.S, c.o).radius;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

struct RestrictedOutcome {
  int mismatches = 0;
  std::vector<double> radii;
  double seconds = 0;
};

RestrictedOutcome run_restricted(const std::vector<OverlapCase>& cases, std::size_t g) {
  RestrictedOutcome out;
  SolveOptions opts;
  opts.group_width = g;
  const auto t0 = Clock::now();
  for (const auto& c : cases) {
    const double r = solve_restricted(c.S, c.o, opts).radius;
    out.radii.push_back(r);
    if (!rel_equal(r, c.oracle, kRadiusRel)) ++out.mismatches;
  }
  out.seconds = since(t0);
  return out;
}

struct DecideOutcome {
  int wrong = 0;
  int monotone_violations = 0;
  int judged = 0;
  std::vector<char> answers;
};

DecideOutcome run_decide(const std::vector<OverlapCase>& cases, std::size_t g) {
  DecideOutcome out;
  std::mt19937_64 rng(31);
  const DecideOptions opts{g, 1};
  for (const auto& c : cases) {
    std::vector<double> grid;
    std::uniform_real_distribution<double> f(0.5, 1.5);
    while (static_cast<int>(grid.size()) < kRadiiPerInstance) {
      const double r = c.oracle * f(rng);
      if (std::abs(r - c.oracle) > kDecideBand * c.oracle) grid.push_back(r);
    }
    std::sort(grid.begin(), grid.end());
    bool seen_yes = false;
    for (double r : grid) {
      const bool yes = decide_point_set(c.S, c.o, r, opts).yes;
      out.answers.push_back(yes);
      ++out.judged;
      if (yes != (r >= c.oracle)) ++out.wrong;
      if (seen_yes && !yes) ++out.monotone_violations;
      seen_yes = seen_yes || yes;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion_1(const std::vector<OverlapCase>& cases) {
  const auto res = run_restricted(cases, 16);
  report(1, "restricted solver equals brute force",
         res.mismatches == 0 && res.seconds < kRestrictedBudgetSeconds,
         fmt("%.0f instances, %.0f mismatches, %.1f s", static_cast<double>(cases.size()), res.mismatches,
             res.seconds));
}

std::vector<Point> convex_case(std::mt19937_64& rng) {
  return generate(GenKind::convex, 3 + rng() % 38, rng()).points;
}

void criterion_2() {
  std::mt19937_64 rng(2);
  int mismatches = 0;
  for (int t = 0; t < kConvexInstances; ++t) {
    const auto S = convex_case(rng);
    if (!rel_equal(solve_convex(S).radius, brute_convex_contiguous(S).radius, kRadiusRel)) ++mismatches;
  }
  std::vector<Point> hex;
  for (int k = 0; k < 6; ++k) hex.push_back({std::cos(k * M_PI / 3), std::sin(k * M_PI / 3)});
  const double h = solve_convex(hex).radius;
  const bool hex_ok = std::abs(h - std::sqrt(3.0) / 2) <= kHexagonAbs;
  report(2, "convex solver equals contiguous brute force", mismatches == 0 && hex_ok,
         fmt("%.0f instances, %.0f mismatches, hexagon %.17g", kConvexInstances, mismatches, h));
}

void criterion_3(const std::vector<OverlapCase>& cases) {
  const auto res = run_decide(cases, 16);
  report(3, "decision matches the oracle radius", res.wrong == 0 && res.monotone_violations == 0,
         fmt("%.0f decisions, %.0f wrong, %.0f monotonicity violations", res.judged, res.wrong,
             res.monotone_violations));
}

void criterion_4() {
  std::mt19937_64 rng(4);
  int violations = 0, judged = 0;
  for (int t = 0; t < kEmptinessTrials; ++t) {
    const auto X = testsupport::uniform_points(1 + rng() % 30, rng);
    const double med = smallest_enclosing_disk(X).disk.radius;
    const double r = std::max(med, 0.05) * std::uniform_real_distribution<double>(0.5, 1.5)(rng);
    if (std::abs(med - r) <= kEmptyBand * r) continue;
    ++judged;
    if (intersection_hull(X, r).is_empty() != (med > r)) ++violations;
  }
  report(4, "emptiness agrees with the enclosing radius", violations == 0,
         fmt("%.0f trials, %.0f violations", judged, violations));
}

void criterion_5() {
  std::mt19937_64 rng(5);
  int order_bad = 0, count_bad = 0, range_bad = 0, mono_bad = 0;
  int order_checks = 0, range_checks = 0, ranges_seen = 0;
  // Ranges of angularly ordered upper-half points.
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 8 + rng() % 120;
    const auto pts = testsupport::upper_ordered(n, rng);
    const double r = t % 3 == 0 ? 1.0 : 1.6;
    const CanonicalTree tree(pts, r);
    const std::size_t limit = 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    for (int q = 0; q < 6; ++q) {
      std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
      if (i > j) std::swap(i, j);
      ++ranges_seen;
      if (tree.canonical_nodes(i, j).size() > limit) ++count_bad;
      const ArcChain got = range_intersection(tree, i, j);
      const std::vector<Point> sub(pts.begin() + static_cast<long>(i) - 1, pts.begin() + static_cast<long>(j));
      const ArcChain want = intersection_hull(sub, r);
      ++range_checks;
      if (!testsupport::same_chain(got, want, 1e-7)) ++range_bad;
      if (order_checks < 200 && got.kind() == ChainKind::region) {
        ++order_checks;
        if (!check_boundary_order(got, sub)) ++order_bad;
      }
    }
  }
  // Column of the row minimum never has to move left.
  for (int t = 0; t < 100; ++t) {
    const auto S = testsupport::uniform_points(4 + rng() % 27, rng);
    const auto in = make_split_instance(S, {0.01, -0.02}, Axis::x);
    std::size_t prev = 0;
    for (std::size_t i = 0; i <= in.n_plus(); ++i) {
      std::vector<double> row;
      for (std::size_t j = 0; j <= in.n_minus(); ++j) {
        row.push_back(std::max(testsupport::direct_A(in, i, j), testsupport::direct_B(in, i, j)));
      }
      const double best = *std::min_element(row.begin(), row.end());
      std::size_t pick = prev;
      while (pick < row.size() && row[pick] > best + 1e-12) ++pick;
      if (pick == row.size()) {
        ++mono_bad;
        pick = prev;
      }
      prev = pick;
    }
  }
  const bool pass = order_checks >= 200 && range_checks >= 300 && order_bad + count_bad + range_bad + mono_bad == 0;
  std::ostringstream d;
  d << "order " << order_bad << "/" << order_checks << ", node count " << count_bad << "/" << ranges_seen
    << ", range queries " << range_bad << "/" << range_checks << ", row minima " << mono_bad << "/100";
  report(5, "structural checks", pass, d.str());
}

void criterion_6(const std::vector<OverlapCase>& restricted, const std::vector<OverlapCase>& decide_cases) {
  bool pass = true;
  std::ostringstream d;
  RestrictedOutcome base_r;
  DecideOutcome base_d;
  for (std::size_t g : kGroupWidths) {
    const auto r = run_restricted(restricted, g);
    const auto q = run_decide(decide_cases, g);
    const bool ok = r.mismatches == 0 && q.wrong == 0 && q.monotone_violations == 0;
    const bool same = g == kGroupWidths.front() || (r.radii == base_r.radii && q.answers == base_d.answers);
    if (g == kGroupWidths.front()) {
      base_r = r;
      base_d = q;
    }
    pass = pass && ok && same;
    d << (g == kGroupWidths.front() ? "" : "; ") << "g=" << g << (ok ? " ok" : " bad") << (same ? "" : " differs");
  }
  report(6, "group width does not change results", pass, d.str());
}

void criterion_7() {
  std::vector<double> medians;
  for (std::size_t n : kScalingSizes) {
    std::vector<double> t;
    for (int rep = 0; rep < kScalingReps; ++rep) {
      const Instance inst = generate(GenKind::two_cluster, n, 700 + rep);
      const auto t0 = Clock::now();
      decide_point_set(inst.points, *inst.o, kScalingRadius);
      t.push_back(since(t0));
    }
    std::sort(t.begin(), t.end());
    medians.push_back(t[t.size() / 2]);
  }
  bool pass = medians.back() < kScalingLimitSeconds;
  std::ostringstream d;
  d.setf(std::ios::fixed);
  d.precision(3);
  for (std::size_t k = 0; k < medians.size(); ++k) {
    d << (k ? "; " : "") << "n=" << kScalingSizes[k] << " " << medians[k] << "s";
    if (k > 0) {
      const double ratio = medians[k] / medians[k - 1];
      pass = pass && ratio >= kRatioLo && ratio <= kRatioHi;
      d << " (x" << ratio << ")";
    }
  }
  report(7, "decision scaling", pass, d.str());
}

// Solution records for seeded instances, restricted and convex.
std::string records(std::size_t threads) {
  std::string out;
  SolveOptions opts;
  opts.threads = threads;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance tc = generate(GenKind::two_cluster, 10 + seed * 7, seed);
    out += solution_record(solve_restricted(tc.points, *tc.o, opts), tc.points.size()) + "\n";
    const Instance cv = generate(GenKind::convex, 5 + seed * 3, seed);
    out += solution_record(solve_convex(cv.points, opts), cv.points.size()) + "\n";
  }
  const Instance big = generate(GenKind::two_cluster, 3000, 99);
  opts.bisect = true;
  out += solution_record(solve_restricted(big.points, *big.o, opts), big.points.size()) + "\n";
  return out;
}

void criterion_8() {
  const std::string a = records(1), b = records(1), c = records(3);
  std::ostringstream d;
  d << a.size() << " bytes; repeat " << (a == b ? "identical" : "differs") << "; 3 threads "
    << (a == c ? "identical" : "differs");
  report(8, "repeat runs give identical solution records", a == b && a == c, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--records") {
    std::ofstream f(argv[2]);
    f << records(1);
    return f ? 0 : 1;
  }
  const auto restricted = overlap_cases(kRestrictedInstances, 1);
  const auto decide_cases = overlap_cases(kDecideInstances, 3);
  criterion_1(restricted);
  criterion_2();
  criterion_3(decide_cases);
  criterion_4();
  criterion_5();
  criterion_6(restricted, decide_cases);
  criterion_7();
  criterion_8();
  std::printf("%d of 8 criteria failed\n", failures);
  return failures;
}
