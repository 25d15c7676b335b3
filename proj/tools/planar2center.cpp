// planar2center: solve, decide, generate and benchmark two-center instances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocenter/decision.hpp"
#include "twocenter/generate.hpp"
#include "twocenter/io.hpp"
#include "twocenter/oracle.hpp"
#include "twocenter/solver.hpp"

using namespace twocenter;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Point parse_point_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--o expects X,Y");
  try {
    std::size_t a = 0, b = 0;
    const double x = std::stod(text.substr(0, comma), &a);
    const double y = std::stod(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw InputError("--o expects X,Y");
    return {x, y};
  } catch (const std::logic_error&) {
    throw InputError("--o expects X,Y");
  }
}

Instance load(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return read_instance_file(path);
}

// The flag wins over the file directive.
std::optional<Point> centre_of(const Instance& inst, const std::string& flag) {
  if (!flag.empty()) return parse_point_flag(flag);
  return inst.o;
}

struct Common {
  std::string file = "-";
  std::string o;
  std::size_t group_width = 16;
  std::size_t threads = 1;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.file, "instance file, '-' for stdin");
  cmd->add_option("--o", c.o, "centre point X,Y (overrides the file's o: line)");
  cmd->add_option("--group-width", c.group_width, "rows per group in the decision procedure")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
}

// Containment of every point and of o, then the oracle for small n.
void verify(const Instance& inst, const std::optional<Point>& o, const TwoCenterSolution& s,
            const std::string& record, std::size_t cap) {
  const TwoCenterSolution back = parse_solution_record(record);
  const Tolerance tol = Tolerance::for_points(inst.points);
  const double slack = tol.band() + tol.eps_rel * back.radius;
  for (std::size_t k = 0; k < inst.points.size(); ++k) {
    const Disk& d = back.side.at(k) ? back.d2 : back.d1;
    if (dist(d.center, inst.points[k]) > d.radius + slack) {
      throw ContractError("verify: point " + std::to_string(k) + " is not covered");
    }
  }
  if (o && s.mode == SolveMode::restricted) {
    for (const Disk& d : {back.d1, back.d2}) {
      if (dist(d.center, *o) > d.radius + slack) throw ContractError("verify: o is outside a disk");
    }
  }
  if (inst.points.size() > cap) return;
  const double want = s.mode == SolveMode::convex ? brute_convex_contiguous(inst.points).radius
                                                  : brute_restricted(inst.points, *o).radius;
  if (std::abs(want - s.radius) > 1e-9 * std::max(want, 1e-300) && !s.o_adjusted) {
    throw ContractError("verify: radius " + format_double(s.radius) + " differs from the oracle's " +
                        format_double(want));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Restricted and convex-position planar two-center solver"};
  app.require_subcommand(1);

  Common common;
  std::string mode = "auto";
  bool bisect = false, do_verify = false, timing = false;
  std::size_t verify_cap = 25;
  auto* solve = app.add_subcommand("solve", "solve an instance and print a JSON record");
  add_common(solve, common);
  solve->add_option("--mode", mode, "restricted, convex or auto")
      ->check(CLI::IsMember({"restricted", "convex", "auto"}));
  solve->add_flag("--bisect", bisect, "floating bisection instead of candidate radii");
  solve->add_flag("--verify", do_verify, "re-check the answer (and the oracle for small n)");
  solve->add_option("--verify-cap", verify_cap, "largest n compared with the oracle");
  solve->add_flag("--timing", timing, "add wall time to the record");

  double r = 0.0;
  auto* decide_cmd = app.add_subcommand("decide", "is there a split with both radii at most r");
  add_common(decide_cmd, common);
  decide_cmd->add_option("--r", r, "radius")->required();

  std::string kind = "uniform";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double overlap = 0.3;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("kind", kind, "uniform, convex or two-cluster")->required();
  gen->add_option("n", n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--overlap", overlap, "two-cluster overlap fraction")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::size_t> sizes{10000, 20000};
  std::size_t reps = 3, solve_max = 2000;
  double bench_r = 1.0;
  auto* bench = app.add_subcommand("bench", "median wall times of decide and solve");
  bench->add_option("--kind", kind, "generator kind")->check(CLI::IsMember({"uniform", "convex", "two-cluster"}));
  bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
  bench->add_option("--reps", reps, "repetitions per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "generator seed");
  bench->add_option("--r", bench_r, "decision radius");
  bench->add_option("--solve-max", solve_max, "skip solve above this size");
  bench->add_option("--group-width", common.group_width, "rows per group")->check(CLI::PositiveNumber);
  bench->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answer");
  oracle->add_option("file", common.file, "instance file, '-' for stdin");
  oracle->add_option("--o", common.o, "centre point X,Y");
  oracle->add_option("--mode", mode, "restricted, convex, free or auto")
      ->check(CLI::IsMember({"restricted", "convex", "free", "auto"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  SolveOptions sopts;
  sopts.group_width = common.group_width;
  sopts.threads = common.threads;
  sopts.bisect = bisect;

  if (*solve) {
    const Instance inst = load(common.file);
    const auto o = centre_of(inst, common.o);
    std::string m = mode;
    if (m == "auto") m = o ? "restricted" : "convex";
    if (m == "restricted" && !o) throw InputError("restricted mode needs an o: line or --o");
    const auto t0 = Clock::now();
    const TwoCenterSolution s =
        m == "restricted" ? solve_restricted(inst.points, *o, sopts) : solve_convex(inst.points, sopts);
    const double secs = seconds_since(t0);
    const std::string record =
        solution_record(s, inst.points.size(), timing ? std::optional<double>(secs) : std::nullopt);
    if (do_verify) verify(inst, o, s, record, verify_cap);
    std::cout << record << '\n';
    return 0;
  }

  if (*decide_cmd) {
    if (!(r > 0.0)) throw InputError("--r must be positive");
    const Instance inst = load(common.file);
    const auto o = centre_of(inst, common.o);
    if (!o) throw InputError("decide needs an o: line or --o");
    const DecideOptions dopts{common.group_width, common.threads};
    Axis axis = Axis::x;
    const Decision d = decide_point_set(inst.points, *o, r, dopts, &axis);
    std::cout << "{\"r\":" << format_double(r) << ",\"decision\":\"" << (d.yes ? "yes" : "no") << '"';
    if (d.yes) std::cout << ",\"axis\":\"" << (axis == Axis::x ? "x" : "y") << "\",\"i\":" << d.i << ",\"j\":" << d.j;
    std::cout << "}\n";
    return 0;
  }

  if (*gen) {
    const Instance inst = generate(parse_gen_kind(kind), n, seed, overlap);
    if (out_path.empty()) {
      write_instance(std::cout, inst);
    } else {
      std::ofstream f(out_path);
      if (!f) throw InputError("cannot write " + out_path);
      write_instance(f, inst);
    }
    return 0;
  }

  if (*bench) {
    const GenKind gk = parse_gen_kind(kind);
    std::printf("%-8s %10s %14s\n", "op", "n", "median_s");
    for (std::size_t size : sizes) {
      std::vector<double> dec, sol;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const Instance inst = generate(gk, size, seed + rep);
        const Point o = inst.o.value_or(Point{1e-3, 2e-3});
        auto t0 = Clock::now();
        decide_point_set(inst.points, o, bench_r, DecideOptions{common.group_width, common.threads});
        dec.push_back(seconds_since(t0));
        if (size <= solve_max) {
          t0 = Clock::now();
          if (gk == GenKind::convex) {
            solve_convex(inst.points, sopts);
          } else {
            solve_restricted(inst.points, o, sopts);
          }
          sol.push_back(seconds_since(t0));
        }
      }
      auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
      };
      std::printf("%-8s %10zu %14.6f\n", "decide", size, median(dec));
      if (!sol.empty()) std::printf("%-8s %10zu %14.6f\n", "solve", size, median(sol));
    }
    return 0;
  }

  if (*oracle) {
    const Instance inst = load(common.file);
    const auto o = centre_of(inst, common.o);
    std::string m = mode;
    if (m == "auto") m = o ? "restricted" : "free";
    OracleResult res;
    if (m == "restricted") {
      if (!o) throw InputError("restricted mode needs an o: line or --o");
      res = brute_restricted(inst.points, *o);
    } else if (m == "convex") {
      res = brute_convex_contiguous(inst.points);
    } else {
      res = brute_two_center(inst.points);
    }
    std::cout << "{\"mode\":\"" << m << "\",\"radius\":" << format_double(res.radius) << ",\"side\":[";
    for (std::size_t k = 0; k < res.side.size(); ++k) std::cout << (k ? "," : "") << res.side[k];
    std::cout << "],\"enumeration_count\":" << res.enumeration_count << "}\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
