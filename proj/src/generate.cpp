#include "twocenter/generate.hpp"

#include <cmath>
#include <random>

namespace twocenter {

GenKind parse_gen_kind(const std::string& name) {
  if (name == "uniform") return GenKind::uniform;
  if (name == "convex") return GenKind::convex;
  if (name == "two-cluster") return GenKind::two_cluster;
  throw InputError("unknown generator '" + name + "' (uniform, convex, two-cluster)");
}

Instance generate(GenKind kind, std::size_t n, std::uint64_t seed, double overlap) {
  if (n < 1) throw InputError("n must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0), turn(0.0, 2 * M_PI);
  Instance out;
  switch (kind) {
    case GenKind::uniform:
      for (std::size_t k = 0; k < n; ++k) out.points.push_back({unit(rng), unit(rng)});
      break;
    case GenKind::convex: {
      // Points of a strictly convex curve are in convex position; rounding
      // can still flatten very close neighbours, so redraw until the check
      // passes.
      for (int attempt = 0;; ++attempt) {
        if (attempt == 100) throw ContractError("convex generator cannot place points");
        const double tilt = turn(rng);
        const double ratio = std::uniform_real_distribution<double>(0.6, 1.0)(rng);
        const double c = std::cos(tilt), s = std::sin(tilt);
        out.points.clear();
        for (std::size_t k = 0; k < n; ++k) {
          const double a = turn(rng);
          const Point p{std::cos(a), ratio * std::sin(a)};
          out.points.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
        }
        if (n < 3 || in_convex_position(out.points)) break;
      }
      break;
    }
    case GenKind::two_cluster: {
      const double half = 1.0 - overlap;
      const Point centre[2] = {{-half, 0.0}, {half, 0.0}};
      for (std::size_t k = 0; k < n; ++k) {
        Point p;
        do p = {unit(rng), unit(rng)};
        while (p.x * p.x + p.y * p.y > 1.0);
        out.points.push_back(centre[k % 2] + p);
      }
      out.o = Point{0.0, 0.0};
      break;
    }
  }
  return out;
}

}  // namespace twocenter
