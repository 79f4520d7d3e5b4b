#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tourney/decomposition.hpp"
#include "tourney/errors.hpp"
#include "tourney/solvers.hpp"

using namespace tourney;

namespace {

WeightedTournament three_cycle() {
  WeightedTournament t({"a", "b", "c"});
  t.set_weight("a", "b", 1);
  t.set_weight("b", "c", 1);
  t.set_weight("c", "a", 1);
  return t;
}

SolveOptions ties() {
  SolveOptions o;
  o.all_ties = true;
  return o;
}

void expect_matches_oracle(const SolveResult& r, const oracle::Best& best, std::size_t m) {
  EXPECT_EQ(r.optimum, best.optimum);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(oracle::as_levels(r.witnesses, m), best.argmax);
}

}  // namespace

TEST(BruteForce, ThreeCycle) {
  const auto r = solve_bruteforce(three_cycle(), 3);
  EXPECT_EQ(r.optimum, 1);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], OrderedPartition({{0}, {1}, {2}}));
}

TEST(BruteForce, ZeroWeightsAllTie) {
  const WeightedTournament t(oracle::names(3));
  const auto r = solve_bruteforce(t, 2, ties());
  EXPECT_EQ(r.optimum, 0);
  EXPECT_EQ(r.witnesses.size(), oracle::ordered_partitions(3, 1, 2).size());
}

TEST(BruteForce, SingleArc) {
  WeightedTournament t({"a", "b"});
  t.set_weight("a", "b", 4);
  const auto r = solve_bruteforce(t, 2, ties());
  EXPECT_EQ(r.optimum, 4);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0], OrderedPartition({{0}, {1}}));
}

TEST(BruteForce, WitnessSetsMatchOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const std::size_t k = 1 + trial % 4;
    // Small weights make ties common.
    const auto t = oracle::random_tournament(rng, m, trial % 3 == 0 ? 1 : 6);
    expect_matches_oracle(solve_bruteforce(t, k, ties()), oracle::max_kop(t, k), m);
  }
}

TEST(BruteForce, ExactKMatchesOracle) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const std::size_t k = 1 + trial % m;
    const auto t = oracle::random_tournament(rng, m, 4);
    SolveOptions o = ties();
    o.exact_k = true;
    expect_matches_oracle(solve_bruteforce(t, k, o), oracle::max_kop(t, k, true), m);
  }
  SolveOptions o;
  o.exact_k = true;
  EXPECT_THROW(solve_bruteforce(three_cycle(), 4, o), ValidationError);
}

TEST(BruteForce, SingleWitnessIsCanonicallyLeast) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tournament(rng, 5, 1);
    const auto best = oracle::max_kop(t, 3);
    const auto r = solve_bruteforce(t, 3);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].levels(5), best.argmax.front());
  }
}

TEST(BruteForce, FractionalAndHugeWeights) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedTournament t(oracle::names(5));
    const Rational huge = Rational(Integer(1) << 70);
    for (VertexId i = 0; i < 5; ++i) {
      for (VertexId j = i + 1; j < 5; ++j) {
        Rational w = Rational(d(rng), 1 + (i + j) % 4);
        if (trial % 2) w *= huge;
        t.set_weight(i, j, w);
      }
    }
    expect_matches_oracle(solve_bruteforce(t, 3, ties()), oracle::max_kop(t, 3), 5);
  }
}

TEST(BruteForce, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = oracle::random_tournament(rng, 9, 1);
    SolveOptions one = ties();
    one.threads = 1;
    SolveOptions many = ties();
    many.threads = 4;
    const auto a = solve_bruteforce(t, 3, one);
    const auto b = solve_bruteforce(t, 3, many);
    EXPECT_EQ(a.optimum, b.optimum);
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
}

TEST(BruteForce, GuardAndTruncation) {
  const WeightedTournament zero(oracle::names(6));
  SolveOptions tight;
  tight.guard = 3 * 3 * 3 * 3 * 3 * 3 - 1;
  EXPECT_THROW(solve_bruteforce(zero, 3, tight), GuardExceeded);
  try {
    solve_bruteforce(zero, 3, tight);
  } catch (const GuardExceeded& e) {
    EXPECT_EQ(e.bound(), tight.guard);
  }
  SolveOptions capped = ties();
  capped.witness_cap = 5;
  const auto r = solve_bruteforce(zero, 3, capped);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.witnesses.size(), 5u);
  // The kept witnesses are the canonically least ones.
  const auto all = oracle::ordered_partitions(6, 1, 3);
  EXPECT_EQ(oracle::as_levels(r.witnesses, 6), std::vector<oracle::Levels>(all.begin(), all.begin() + 5));
}

TEST(AcyclicDp, ExamplesMatchBruteForce) {
  const auto t = oracle::from_gamma({3, 1, 0});
  expect_matches_oracle(solve_acyclic_dp(t, 2, ties()), oracle::max_kop(t, 2), 3);
  EXPECT_EQ(solve_acyclic_dp(WeightedTournament(oracle::names(4)), 3).optimum, 0);
  const auto u = oracle::from_gamma({2, 1, 0, -3});
  expect_matches_oracle(solve_acyclic_dp(u, 3, ties()), oracle::max_kop(u, 3), 4);
}

TEST(AcyclicDp, RejectsCyclicInput) {
  EXPECT_THROW(solve_acyclic_dp(three_cycle(), 2), PreconditionError);
}

TEST(AcyclicDp, CompleteWitnessSetsMatchOracle) {
  std::mt19937_64 rng(36);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 7;
    std::vector<int> gamma(m);
    for (auto& g : gamma) g = d(rng);  // narrow range: many equal scores
    const auto t = oracle::from_gamma(gamma);
    const std::size_t k = 1 + trial % 4;
    expect_matches_oracle(solve_acyclic_dp(t, k, ties()), oracle::max_kop(t, k), m);
    if (k <= m) {
      SolveOptions exact = ties();
      exact.exact_k = true;
      expect_matches_oracle(solve_acyclic_dp(t, k, exact), oracle::max_kop(t, k, true), m);
    }
  }
}

TEST(AcyclicDp, RationalGammaOnCocycleParts) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const auto t = cocycle_component(oracle::random_tournament(rng, m, 7));
    expect_matches_oracle(solve_acyclic_dp(t, 3, ties()), oracle::max_kop(t, 3), m);
  }
}

TEST(TwoOp, Examples) {
  EXPECT_EQ(solve_2op(three_cycle()).optimum, 0);
  WeightedTournament t({"a", "b"});
  t.set_weight("a", "b", 4);
  EXPECT_EQ(solve_2op(t).optimum, 4);
  EXPECT_THROW(solve_2op(WeightedTournament({"a"})), ValidationError);
}

TEST(TwoOp, WitnessSetsMatchBruteForceOracle) {
  std::mt19937_64 rng(38);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const auto t = oracle::random_tournament(rng, m, trial % 2 ? 2 : 9);
    expect_matches_oracle(solve_2op(t, ties()), oracle::max_kop(t, 2), m);
  }
}

TEST(Univalent, ScoresEverySingletonTop) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const auto t = oracle::random_tournament(rng, m, 2);
    Rational best = 0;
    std::vector<oracle::Levels> argmax;
    for (VertexId x = 0; x < m; ++x) {
      oracle::Levels level(m, 1);
      level[x] = 0;
      const Rational s = oracle::score(t, level);
      if (argmax.empty() || s > best) {
        best = s;
        argmax.clear();
      }
      if (s == best) argmax.push_back(level);
    }
    std::sort(argmax.begin(), argmax.end());
    const auto r = solve_univalent(t, ties());
    EXPECT_EQ(r.optimum, best);
    EXPECT_EQ(oracle::as_levels(r.witnesses, m), argmax);
  }
}

TEST(Decide, Examples) {
  EXPECT_TRUE(decide(three_cycle(), 3, 1));
  EXPECT_FALSE(decide(three_cycle(), 2, 1));
  EXPECT_TRUE(decide(three_cycle(), 2, Rational(-1000000)));
}

TEST(Dispatch, AgreesWithBruteForce) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const std::size_t k = 1 + trial % 4;
    const auto t = trial % 2 ? oracle::random_tournament(rng, m, 5)
                             : cocycle_component(oracle::random_tournament(rng, m, 5));
    EXPECT_EQ(solve(t, k, ties()).optimum, solve_bruteforce(t, k).optimum);
  }
  EXPECT_THROW(solve(three_cycle(), 3, {}, SolveMethod::two_op), ValidationError);
}

TEST(Properties, MonotoneSwapNeverLowersScore) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 3 + trial % 3;
    std::vector<int> gamma(m);
    for (auto& g : gamma) g = d(rng);
    const auto t = oracle::from_gamma(gamma);
    for (const auto& level : oracle::ordered_partitions(m, 2, 3)) {
      const Rational base = oracle::score(t, level);
      for (VertexId i = 0; i < m; ++i) {
        for (VertexId j = 0; j < m; ++j) {
          // i has lower gamma but sits strictly higher than j: swap them.
          if (gamma[i] < gamma[j] && level[i] < level[j]) {
            auto swapped = level;
            std::swap(swapped[i], swapped[j]);
            ASSERT_GE(oracle::score(t, swapped), base);
          }
        }
      }
    }
    // Some brute-force witness is monotone in gamma.
    const auto r = solve_bruteforce(t, 3, ties());
    bool monotone_found = false;
    for (const auto& w : r.witnesses) {
      const auto level = w.levels(m);
      bool monotone = true;
      for (VertexId i = 0; i < m; ++i) {
        for (VertexId j = 0; j < m; ++j) {
          if (gamma[i] > gamma[j] && level[i] > level[j]) monotone = false;
        }
      }
      monotone_found = monotone_found || monotone;
    }
    EXPECT_TRUE(monotone_found);
  }
}

TEST(Properties, CyclesAreInvisibleToTwoPartitions) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t m = 5;
  const WeightedTournament shape(oracle::names(m));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> sum(shape.arc_count(), 0);
    for (int c = 0; c < 4; ++c) {
      std::vector<VertexId> verts{0, 1, 2, 3, 4};
      std::shuffle(verts.begin(), verts.end(), rng);
      verts.resize(3 + static_cast<std::size_t>(c % 3));
      const auto cyc = basic_cycle(shape, verts);
      const int a = coef(rng);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += a * cyc.stored_weights()[i];
    }
    const auto sigma = with_weights(shape, sum);
    for (const auto& level : oracle::ordered_partitions(m, 2, 2)) {
      ASSERT_EQ(partition_score(sigma, OrderedPartition::from_levels(level)), 0);
    }
  }
}

TEST(Properties, OptimumNondecreasingInK) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_tournament(rng, 5, 9);
    Rational prev = solve_bruteforce(t, 1).optimum;
    EXPECT_EQ(prev, 0);
    for (std::size_t k = 2; k <= 6; ++k) {
      const Rational cur = solve_bruteforce(t, k).optimum;
      EXPECT_GE(cur, prev);
      prev = cur;
    }
  }
}

TEST(Properties, TwoBlockScoresIgnoreTheCyclicPart) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const auto t = oracle::random_tournament(rng, m, 9);
    const auto c = cocycle_component(t);
    for (const auto& level : oracle::ordered_partitions(m, 2, 2)) {
      ASSERT_EQ(oracle::score(t, level), oracle::score(c, level));
    }
  }
}
