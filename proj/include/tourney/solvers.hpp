#pragma once

#include <cstddef>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

struct SolveOptions {
  /// Return every optimal partition (up to `witness_cap`) instead of the
  /// canonically least one.
  bool all_ties = false;
  /// Only partitions with exactly k nonempty blocks; otherwise at most k.
  bool exact_k = false;
  /// Cap on enumerated level labelings (k^m) for the exhaustive solver.
  unsigned long long guard = 100'000'000ULL;
  std::size_t witness_cap = 10'000;
  /// Worker threads for the exhaustive solver; 0 picks the hardware count.
  unsigned threads = 0;
};

struct SolveResult {
  Rational optimum;
  /// Canonically ordered (lexicographic level vectors), deduplicated.
  std::vector<OrderedPartition> witnesses;
  /// True when more optimal partitions exist than `witness_cap`.
  bool truncated = false;
};

/// Exhaustive max-kOP over ordered partitions into at most (or exactly) k
/// nonempty blocks. Throws GuardExceeded when k^m > options.guard.
SolveResult solve_bruteforce(const WeightedTournament& t, std::size_t k,
                             const SolveOptions& options = {});

/// Divider DP over the scaled-Borda order. Requires a purely acyclic
/// tournament (PreconditionError otherwise). Runs in O(k m^2) rational
/// operations plus witness expansion.
SolveResult solve_acyclic_dp(const WeightedTournament& t, std::size_t k,
                             const SolveOptions& options = {});

/// Max-2OP through the cocycle component. Requires m >= 2.
SolveResult solve_2op(const WeightedTournament& t, const SolveOptions& options = {});

/// Best partition of the form {x} > V \ {x}. Requires m >= 2.
SolveResult solve_univalent(const WeightedTournament& t,
                            const SolveOptions& options = {});

enum class SolveMethod { automatic, bruteforce, acyclic_dp, two_op };

/// Dispatch: 2OP when k == 2, the DP when purely acyclic, else brute force.
SolveResult solve(const WeightedTournament& t, std::size_t k,
                  const SolveOptions& options = {},
                  SolveMethod method = SolveMethod::automatic);

/// True iff some admissible partition scores at least `threshold`.
bool decide(const WeightedTournament& t, std::size_t k, const Rational& threshold,
            const SolveOptions& options = {});

/// Number of level labelings k^m, saturated at ULLONG_MAX.
unsigned long long labeling_count(std::size_t k, std::size_t m);

}  // namespace tourney
