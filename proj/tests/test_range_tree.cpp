#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "test_support.hpp"
#include "twocenter/range_tree.hpp"

using namespace twocenter;
using testsupport::same_chain;

TEST_CASE("tree shape") {
  CanonicalTree one(std::vector<Point>{{0, 1}}, 1.0);
  REQUIRE(one.nodes().size() == 1);
  CHECK(one.node(0).chain.is_full_circle());

  // four points fanned out above o
  std::vector<Point> four{{1, 0.2}, {0.5, 0.8}, {-0.5, 0.8}, {-1, 0.2}};
  CanonicalTree t(four, 2.0);
  CHECK(t.nodes().size() == 7);
  CHECK(t.node(0).chain.kind() == ChainKind::region);
  auto ids = t.canonical_nodes(1, 3);
  REQUIRE(ids.size() == 2);
  CHECK(t.node(ids[0]).lo == 1);
  CHECK(t.node(ids[0]).hi == 2);
  CHECK(t.node(ids[1]).lo == 3);
  CHECK(t.node(ids[1]).hi == 3);
  CHECK(t.canonical_nodes(1, 4) == std::vector<int>{0});
  CHECK(t.canonical_nodes(3, 2).empty());
}

TEST_CASE("stored node chains match direct hulls") {
  std::mt19937_64 rng(21);
  auto pts = testsupport::upper_ordered(64, rng);
  const double r = smallest_enclosing_disk(pts).disk.radius * 1.05;
  CanonicalTree t(pts, r);
  std::uniform_int_distribution<std::size_t> pick(0, t.nodes().size() - 1);
  for (int k = 0; k < 50; ++k) {
    const TreeNode& n = t.node(static_cast<int>(pick(rng)));
    std::vector<Point> sub(pts.begin() + n.lo - 1, pts.begin() + n.hi);
    CHECK(same_chain(n.chain, intersection_hull(sub, r), 1e-9));
  }
  // parents are contained in their children
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const TreeNode& n : t.nodes()) {
    if (n.left < 0) continue;
    for (int s = 0; s < 100; ++s) {
      const Point p{u(rng), u(rng)};
      if (n.chain.contains(p, 0.0)) {
        CHECK(t.node(n.left).chain.contains(p, 1e-9));
        CHECK(t.node(n.right).chain.contains(p, 1e-9));
      }
    }
  }
}

TEST_CASE("canonical node decomposition") {
  std::mt19937_64 rng(2);
  for (std::size_t n : {16u, 64u, 256u}) {
    auto pts = testsupport::upper_ordered(n, rng);
    CanonicalTree t(pts, 10.0);
    const auto bound = 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        const auto ids = t.canonical_nodes(i, j);
        CHECK(ids.size() <= bound);
        std::size_t next = i;
        for (int id : ids) {
          CHECK(t.node(id).lo == next);
          next = t.node(id).hi + 1;
        }
        CHECK(next == j + 1);
      }
    }
  }
}

TEST_CASE("range intersection equals the direct hull") {
  std::mt19937_64 rng(99);
  int regions = 0;
  for (int q = 0; q < 300; ++q) {
    const std::size_t n = 2 + rng() % 63;
    auto pts = testsupport::upper_ordered(n, rng);
    const std::size_t i = 1 + rng() % n, j = i + rng() % (n - i + 1);
    std::vector<Point> sub(pts.begin() + i - 1, pts.begin() + j);
    const double med = smallest_enclosing_disk(sub).disk.radius;
    const double r = std::max(med, 0.05) * std::uniform_real_distribution<double>(0.9, 1.6)(rng);
    CanonicalTree t(pts, r);
    const auto got = range_intersection(t, i, j);
    const auto want = intersection_hull(sub, r);
    CHECK(same_chain(got, want, 1e-9));
    CHECK(got.is_empty() == (med > r));
    if (got.kind() == ChainKind::region) {
      ++regions;
      CHECK(check_boundary_order(got, pts));
    }
  }
  CHECK(regions > 150);
}

TEST_CASE("boundary order on random ranges") {
  std::mt19937_64 rng(4);
  for (int q = 0; q < 200; ++q) {
    const std::size_t n = 1 + rng() % 15;
    auto pts = testsupport::upper_ordered(n, rng);
    const std::size_t i = 1 + rng() % n, j = i + rng() % (n - i + 1);
    std::vector<Point> sub(pts.begin() + i - 1, pts.begin() + j);
    const double r = smallest_enclosing_disk(sub).disk.radius * 1.3 + 1e-3;
    auto c = intersection_hull(sub, r);
    // exhaustive walk of the ranks around the chain
    std::vector<long> ranks;
    for (const auto& a : c.arcs()) {
      ranks.push_back(std::find(pts.begin(), pts.end(), a.center) - pts.begin());
    }
    int changes = 0;
    for (std::size_t k = 0; k < ranks.size() && ranks.size() > 2; ++k) {
      const long d0 = ranks[(k + 1) % ranks.size()] - ranks[k];
      const long d1 = ranks[(k + 2) % ranks.size()] - ranks[(k + 1) % ranks.size()];
      changes += (d0 > 0) != (d1 > 0);
    }
    CHECK(changes <= 2);
    CHECK(check_boundary_order(c, pts));
  }
}

TEST_CASE("combinatorics are stable between critical radii") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = testsupport::upper_ordered(10, rng);
    std::vector<double> crit;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        crit.push_back(dist(pts[a], pts[b]) / 2);
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          if (auto cc = circumcircle(pts[a], pts[b], pts[c])) crit.push_back(cc->radius);
        }
      }
    }
    std::sort(crit.begin(), crit.end());
    const double med = smallest_enclosing_disk(pts).disk.radius;
    auto it = std::upper_bound(crit.begin(), crit.end(), med * 1.0001);
    if (it == crit.end() || std::next(it) == crit.end()) continue;
    const double lo = *it, hi = *std::next(it);
    if (hi - lo < 1e-6) continue;
    CanonicalTree t1(pts, lo + (hi - lo) * 0.25), t2(pts, lo + (hi - lo) * 0.75);
    for (std::size_t k = 0; k < t1.nodes().size(); ++k) {
      CHECK(t1.node(static_cast<int>(k)).chain.centers() == t2.node(static_cast<int>(k)).chain.centers());
    }
  }
}

TEST_CASE("D-structures") {
  CanonicalTree far(std::vector<Point>{{10, 10}}, 1.0);
  auto d = build_d_structure(far, ArcChain::circle(1.0, {0, -1}));
  CHECK(d.at(0).relation == Relation::disjoint);

  CanonicalTree near(std::vector<Point>{{0, 0.5}}, 2.0);
  d = build_d_structure(near, ArcChain::circle(2.0, {0.3, -0.5}));
  REQUIRE(d.at(0).relation == Relation::crossing);
  auto pts = circle_circle_points({{0, 0.5}, 2.0}, {{0.3, -0.5}, 2.0});
  REQUIRE(pts.size() == 2);
  CHECK(dist(d.at(0).a_part.s, pts[1]) < 1e-12);
  CHECK(dist(d.at(0).a_part.e, pts[0]) < 1e-12);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto L = testsupport::upper_ordered(8, rng);
    auto R = testsupport::uniform_points(8, rng);
    for (auto& p : R) p.y = -std::abs(p.y);
    const double r = std::uniform_real_distribution<double>(0.9, 2.0)(rng);
    CanonicalTree t(L, r);
    const auto rc = intersection_hull(R, r);
    if (rc.is_empty()) continue;
    const auto ds = build_d_structure(t, rc);
    for (std::size_t k = 0; k < t.nodes().size(); ++k) {
      const TreeNode& n = t.nodes()[k];
      std::vector<Point> sub(L.begin() + n.lo - 1, L.begin() + n.hi);
      const auto direct = separated_intersect(intersection_hull(sub, r), rc);
      const auto& got = ds.parts[k];
      CHECK(got.relation == direct.relation);
      if (got.relation == Relation::crossing) {
        CHECK(dist(got.a_part.s, direct.a_part.s) < 1e-9);
        CHECK(dist(got.a_part.e, direct.a_part.e) < 1e-9);
        // endpoints on both boundaries
        std::vector<Point> both = sub;
        both.insert(both.end(), R.begin(), R.end());
        CHECK(testsupport::in_all_disks(both, got.a_part.s, r, 1e-9));
        CHECK(testsupport::in_all_disks(both, got.a_part.e, r, 1e-9));
      }
    }
  }
}
