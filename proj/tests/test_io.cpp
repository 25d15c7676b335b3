#include <doctest.h>

#include <sstream>

#include "twocenter/generate.hpp"
#include "twocenter/io.hpp"

using namespace twocenter;

namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto inst = parse("# comment\nplanar2center v1\n1 2\n\n-3.5e-1 4\no: 0.25 -1\n");
  REQUIRE(inst.points.size() == 2);
  CHECK(inst.points[1].x == -0.35);
  REQUIRE(inst.o);
  CHECK(inst.o->y == -1.0);
  CHECK_FALSE(parse("planar2center v1\n1 1\n").o);

  CHECK(error_of("planar2center v1\n1 2\n3\n").find("line 3") != std::string::npos);
  CHECK(error_of("planar2center v1\n1 2 3\n").find("line 2") != std::string::npos);
  CHECK(error_of("planar2center v1\nnan 2\n").find("line 2") != std::string::npos);
  CHECK(error_of("planar2center v2\n").find("line 1") != std::string::npos);
  CHECK(error_of("planar2center v1\no: 0 0\no: 1 1\n").find("line 3") != std::string::npos);
  CHECK_FALSE(error_of("").empty());
}

TEST_CASE("instance round trip is exact") {
  Instance inst = generate(GenKind::uniform, 50, 7);
  inst.o = Point{0.1, 1.0 / 3.0};
  std::ostringstream out;
  write_instance(out, inst);
  const auto back = parse(out.str());
  REQUIRE(back.points.size() == inst.points.size());
  for (std::size_t k = 0; k < inst.points.size(); ++k) CHECK(back.points[k] == inst.points[k]);
  CHECK(*back.o == *inst.o);
}

TEST_CASE("solution record round trip") {
  TwoCenterSolution s;
  s.radius = 1.0 / 3.0;
  s.d1 = {{0.1, -0.2}, s.radius};
  s.d2 = {{1e-300, 7.0}, s.radius};
  s.side = {0, 1, 1};
  s.mode = SolveMode::convex;
  s.axis = Axis::y;
  s.i = 2;
  s.j = 5;
  s.o_adjusted = true;
  const std::string rec = solution_record(s, 3, 0.5);
  CHECK(rec.find("\"seconds\":0.5") != std::string::npos);
  const auto back = parse_solution_record(rec);
  CHECK(back.radius == s.radius);
  CHECK(back.d2.center == s.d2.center);
  CHECK(back.side == s.side);
  CHECK(back.mode == SolveMode::convex);
  CHECK(back.axis == Axis::y);
  CHECK(back.i == 2);
  CHECK(back.j == 5);
  CHECK(back.o_adjusted);
  CHECK(solution_record(back, 3) == solution_record(s, 3));
  CHECK_THROWS_AS(parse_solution_record("{\"radius\":1}"), InputError);
}

TEST_CASE("generators") {
  auto text = [](const Instance& inst) {
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
  };
  CHECK(text(generate(GenKind::uniform, 4, 1)) == text(generate(GenKind::uniform, 4, 1)));
  CHECK(text(generate(GenKind::uniform, 4, 1)) != text(generate(GenKind::uniform, 4, 2)));
  CHECK(in_convex_position(generate(GenKind::convex, 6, 0).points));
  CHECK(in_convex_position(generate(GenKind::convex, 2000, 3).points));

  const auto tc = generate(GenKind::two_cluster, 100, 2);
  REQUIRE(tc.o);
  int left = 0, right = 0;
  for (const Point& p : tc.points) (p.x < 0 ? left : right)++;
  CHECK(left > 0);
  CHECK(right > 0);
  CHECK(parse_gen_kind("two-cluster") == GenKind::two_cluster);
  CHECK_THROWS_AS(parse_gen_kind("gauss"), InputError);
  CHECK_THROWS_AS(generate(GenKind::uniform, 0, 1), InputError);
}
