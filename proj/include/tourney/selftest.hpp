#pragma once

#include <cstdint>
#include <ostream>

#include "tourney/solvers.hpp"

namespace tourney {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// Seeded randomized property suite. Prints one PASS/FAIL count line per
/// property and returns the number of failed checks. Exhaustive searches
/// honour `options.guard` and propagate GuardExceeded.
std::size_t run_selftest(std::uint64_t seed, const SolveOptions& options, std::ostream& out);

}  // namespace tourney
