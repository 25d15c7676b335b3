#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "twocenter/oracle.hpp"

using namespace twocenter;

namespace {

std::vector<Point> hexagon() {
  std::vector<Point> h;
  for (int k = 0; k < 6; ++k) h.push_back({std::cos(k * M_PI / 3), std::sin(k * M_PI / 3)});
  return h;
}

const std::vector<Point> corners{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

}  // namespace

TEST_CASE("two-center brute force") {
  CHECK(brute_two_center(std::vector<Point>{{3, 4}}).radius == 0.0);
  CHECK(brute_two_center(corners).radius == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(brute_two_center(hexagon()).radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

  // one disk is never better than two
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto S = testsupport::uniform_points(2 + rng() % 10, rng);
    const auto r = brute_two_center(S);
    CHECK(r.radius <= smallest_enclosing_disk(S).disk.radius + 1e-15);
    CHECK(r.enumeration_count > 0);
    // the reported partition realises the radius
    std::vector<Point> a, b;
    for (std::size_t k = 0; k < S.size(); ++k) (r.side[k] ? b : a).push_back(S[k]);
    CHECK(std::max(smallest_enclosing_disk(a).disk.radius, smallest_enclosing_disk(b).disk.radius) ==
          doctest::Approx(r.radius).epsilon(1e-12));
  }
}

TEST_CASE("restricted brute force") {
  CHECK(brute_restricted(corners, {0, 0}).radius == doctest::Approx(1.0).epsilon(1e-12));
  // one point: a disk must hold both it and o
  CHECK(brute_restricted(std::vector<Point>{{2, 0}}, {0, 0}).radius == doctest::Approx(1.0));
  CHECK_THROWS_AS(brute_restricted(corners, {1, 1}), InputError);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto S = testsupport::uniform_points(3 + rng() % 10, rng);
    const Point o{0.1, -0.05};
    const double r = brute_restricted(S, o).radius;
    auto shuffled = S;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(brute_restricted(shuffled, o).radius == doctest::Approx(r).epsilon(1e-12));
    CHECK(r >= brute_two_center(S).radius - 1e-12);
  }
}

TEST_CASE("restricted and unrestricted agree when o is in the optimal overlap") {
  std::mt19937_64 rng(3);
  int used = 0;
  for (int t = 0; t < 40; ++t) {
    std::vector<Point> S;
    Point o;
    double rstar;
    if (!testsupport::overlap_instance(3 + rng() % 12, rng, S, o, rstar)) continue;
    ++used;
    CHECK(brute_restricted(S, o).radius == doctest::Approx(rstar).epsilon(1e-9));
  }
  CHECK(used > 30);
}

TEST_CASE("emptiness brute force") {
  std::vector<Point> one{{0, 0}};
  CHECK_FALSE(brute_emptiness(one, 1.0));
  std::vector<Point> far{{0, 0}, {3, 0}};
  CHECK(brute_emptiness(far, 1.0));
  std::vector<Point> tri{{0, 0}, {2, 0}, {1, 1}};
  CHECK_FALSE(brute_emptiness(tri, 1.2));
}

TEST_CASE("contiguous splits of convex sets") {
  CHECK(brute_convex_contiguous(hexagon()).radius == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Point> S;
    for (int k = 0; k < 8; ++k) {
      const double a = std::uniform_real_distribution<double>(0, 2 * M_PI)(rng);
      S.push_back({std::cos(a), 0.5 * std::sin(a)});
    }
    // For convex position the best split is contiguous.
    CHECK(brute_convex_contiguous(S).radius == doctest::Approx(brute_two_center(S).radius).epsilon(1e-12));
  }
}
