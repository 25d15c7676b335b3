#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twocenter/geometry.hpp"
#include "twocenter/solver.hpp"

namespace twocenter {

/// Instance file:
///
///   planar2center v1
///   x y
///   ...
///   o: x y          (optional, at most once)
///
/// Blank lines and lines starting with '#' are ignored.
struct Instance {
  std::vector<Point> points;
  std::optional<Point> o;
};

/// Throws InputError naming the offending line.
Instance parse_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);

/// 17 significant digits, so the value reads back exactly.
std::string format_double(double v);

/// One-line JSON solution record. Keys, in order: mode, n, radius, d1, d2
/// (each {"x","y","r"}), side (0/1 per input point), axis, i, j,
/// o_adjusted, and seconds when timing is given.
std::string solution_record(const TwoCenterSolution& s, std::size_t n, std::optional<double> seconds = {});

/// Parses a record back. Throws InputError on malformed text.
TwoCenterSolution parse_solution_record(const std::string& text);

}  // namespace twocenter
