#include "tourney/selftest.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tourney/decomposition.hpp"
#include "tourney/profiles.hpp"
#include "tourney/reductions.hpp"
#include "tourney/solvers.hpp"

namespace tourney {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> letters(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

WeightedTournament random_tournament(Rng& rng, std::size_t m, int bound) {
  WeightedTournament t(letters(m));
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) t.set_weight(i, j, Rational(uniform(rng, -bound, bound)));
  }
  return t;
}

WeightedTournament difference_generated(Rng& rng, std::size_t m) {
  WeightedTournament t(letters(m));
  std::vector<int> gamma(m);
  for (auto& g : gamma) g = uniform(rng, -6, 6);
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) t.set_weight(i, j, Rational(gamma[i] - gamma[j]));
  }
  return t;
}

CutInstance random_graph(Rng& rng, std::size_t n, int max_weight) {
  CutInstance g(letters(n));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.set_weight(a, b, uniform(rng, 0, max_weight));
  }
  return g;
}

// Every ordered partition with exactly two nonempty blocks, as level masks.
std::vector<OrderedPartition> two_block_partitions(std::size_t m) {
  std::vector<OrderedPartition> out;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> level(m);
    for (std::size_t v = 0; v < m; ++v) level[v] = (mask >> v) & 1u;
    out.push_back(OrderedPartition::from_levels(level));
  }
  return out;
}

struct Property {
  std::string name;
  std::size_t cases;
  std::function<bool(Rng&)> check;
};

}  // namespace

std::size_t run_selftest(std::uint64_t seed, const SolveOptions& options, std::ostream& out) {
  SolveOptions one = options;
  one.all_ties = false;

  const std::vector<Property> properties{
      {"decomposition_reconstructs", 100,
       [](Rng& rng) {
         const auto t = random_tournament(rng, static_cast<std::size_t>(uniform(rng, 2, 7)), 9);
         const auto d = decompose(t);
         for (VertexId i = 0; i < t.size(); ++i) {
           for (VertexId j = i + 1; j < t.size(); ++j) {
             if (d.cycle.stored(i, j) + d.cocycle.stored(i, j) != t.stored(i, j)) return false;
           }
         }
         return inner_product(d.cycle, d.cocycle) == 0 &&
                is_quantitatively_transitive(d.cocycle);
       }},
      {"two_block_score_is_cocyclic", 60,
       [](Rng& rng) {
         const auto t = random_tournament(rng, static_cast<std::size_t>(uniform(rng, 2, 6)), 9);
         const auto c = cocycle_component(t);
         for (const auto& p : two_block_partitions(t.size())) {
           if (partition_score(t, p) != partition_score(c, p)) return false;
         }
         return true;
       }},
      {"acyclic_dp_matches_bruteforce", 60,
       [&](Rng& rng) {
         const auto t = difference_generated(rng, static_cast<std::size_t>(uniform(rng, 2, 6)));
         const auto k = static_cast<std::size_t>(uniform(rng, 2, 4));
         return solve_acyclic_dp(t, k, one).optimum == solve_bruteforce(t, k, one).optimum;
       }},
      {"two_op_matches_bruteforce", 60,
       [&](Rng& rng) {
         const auto t = random_tournament(rng, static_cast<std::size_t>(uniform(rng, 2, 6)), 9);
         return solve_2op(t, one).optimum == solve_bruteforce(t, 2, one).optimum;
       }},
      {"hg_identity", 20,
       [&](Rng& rng) {
         return verify_theorem1(random_graph(rng, static_cast<std::size_t>(uniform(rng, 2, 3)), 3),
                                one)
             .pass;
       }},
      {"club_identity", 30,
       [&](Rng& rng) {
         return verify_club(random_graph(rng, static_cast<std::size_t>(uniform(rng, 1, 4)), 3), one)
             .pass;
       }},
      {"fg_single_edge_identity", 3,
       [&](Rng& rng) { return verify_theorem6(random_graph(rng, 2, 4), one).pass; }},
      {"realize_round_trip", 50,
       [](Rng& rng) {
         const auto t = random_tournament(rng, static_cast<std::size_t>(uniform(rng, 3, 6)), 5);
         const auto induced = induce_tournament(realize_weights(t));
         for (VertexId i = 0; i < t.size(); ++i) {
           for (VertexId j = i + 1; j < t.size(); ++j) {
             if (induced.stored(i, j) != 2 * t.stored(i, j)) return false;
           }
         }
         return true;
       }},
  };

  out << "selftest seed " << seed << "\n";
  std::size_t failures = 0;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    // Each property draws from its own stream so adding one does not shift
    // the instances of the others.
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * (p + 1));
    std::size_t passed = 0;
    for (std::size_t c = 0; c < properties[p].cases; ++c) {
      if (properties[p].check(rng)) ++passed;
    }
    const std::size_t failed = properties[p].cases - passed;
    failures += failed;
    out << (failed == 0 ? "PASS " : "FAIL ") << properties[p].name << " " << passed << "/"
        << properties[p].cases << "\n";
  }
  out << (failures == 0 ? "selftest PASS" : "selftest FAIL") << "\n";
  return failures;
}

}  // namespace tourney
