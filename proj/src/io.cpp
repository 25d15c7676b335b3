#include "twocenter/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace twocenter {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

// Exactly two finite decimals separated by whitespace.
Point parse_xy(const std::string& text, std::size_t line) {
  const char* p = text.c_str();
  double v[2];
  for (double& x : v) {
    char* end = nullptr;
    errno = 0;
    x = std::strtod(p, &end);
    if (end == p || errno == ERANGE || !std::isfinite(x)) fail(line, "expected two numbers, got '" + text + "'");
    p = end;
  }
  while (*p == ' ' || *p == '\t') ++p;
  if (*p != '\0') fail(line, "trailing text in '" + text + "'");
  return {v[0], v[1]};
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string t = trim(raw);
    if (t.empty() || t[0] == '#') continue;
    if (!header) {
      if (t != "planar2center v1") fail(line, "expected header 'planar2center v1'");
      header = true;
      continue;
    }
    if (t.rfind("o:", 0) == 0) {
      if (inst.o) fail(line, "second 'o:' directive");
      inst.o = parse_xy(trim(t.substr(2)), line);
      continue;
    }
    inst.points.push_back(parse_xy(t, line));
  }
  if (!header) throw InputError("missing header 'planar2center v1'");
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_instance(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "planar2center v1\n";
  if (inst.o) out << "o: " << format_double(inst.o->x) << ' ' << format_double(inst.o->y) << '\n';
  for (const Point& p : inst.points) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

std::string solution_record(const TwoCenterSolution& s, std::size_t n, std::optional<double> seconds) {
  auto disk = [](const Disk& d) {
    return "{\"x\":" + format_double(d.center.x) + ",\"y\":" + format_double(d.center.y) +
           ",\"r\":" + format_double(d.radius) + "}";
  };
  std::string side;
  for (std::size_t k = 0; k < s.side.size(); ++k) side += (k ? "," : "") + std::to_string(s.side[k]);
  std::string out = "{\"mode\":\"";
  out += s.mode == SolveMode::convex ? "convex" : "restricted";
  out += "\",\"n\":" + std::to_string(n);
  out += ",\"radius\":" + format_double(s.radius);
  out += ",\"d1\":" + disk(s.d1) + ",\"d2\":" + disk(s.d2);
  out += ",\"side\":[" + side + "]";
  out += ",\"axis\":\"";
  out += s.axis == Axis::x ? "x" : "y";
  out += "\",\"i\":" + std::to_string(s.i) + ",\"j\":" + std::to_string(s.j);
  out += ",\"o_adjusted\":";
  out += s.o_adjusted ? "true" : "false";
  if (seconds) out += ",\"seconds\":" + format_double(*seconds);
  out += "}";
  return out;
}

TwoCenterSolution parse_solution_record(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    TwoCenterSolution s;
    s.mode = j.at("mode").get<std::string>() == "convex" ? SolveMode::convex : SolveMode::restricted;
    s.radius = j.at("radius").get<double>();
    auto disk = [](const nlohmann::json& d) {
      return Disk{{d.at("x").get<double>(), d.at("y").get<double>()}, d.at("r").get<double>()};
    };
    s.d1 = disk(j.at("d1"));
    s.d2 = disk(j.at("d2"));
    s.side = j.at("side").get<std::vector<int>>();
    s.axis = j.at("axis").get<std::string>() == "y" ? Axis::y : Axis::x;
    s.i = j.at("i").get<std::size_t>();
    s.j = j.at("j").get<std::size_t>();
    s.o_adjusted = j.at("o_adjusted").get<bool>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad solution record: ") + e.what());
  }
}

}  // namespace twocenter
