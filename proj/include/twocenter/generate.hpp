#pragma once

#include <cstdint>
#include <string>

#include "twocenter/io.hpp"

namespace twocenter {

/// Seeded instance generators. All randomness comes from one
/// std::mt19937_64 seeded with `seed`, so output is reproducible.
enum class GenKind { uniform, convex, two_cluster };

GenKind parse_gen_kind(const std::string& name);  // throws InputError

/// uniform: n points in [-1,1]^2.
/// convex: n points on a random ellipse (axis ratio in [0.6,1], random tilt),
///   all in convex position.
/// two_cluster: n points split between two unit disks whose centres are
///   2(1 - overlap) apart; `o` is the midpoint of the centres, which lies in
///   both disks when overlap > 0.
Instance generate(GenKind kind, std::size_t n, std::uint64_t seed, double overlap = 0.3);

}  // namespace twocenter
