#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tourney/decomposition.hpp"
#include "tourney/errors.hpp"
#include "tourney/profiles.hpp"

using namespace tourney;

namespace {

Profile make(std::size_t m, std::vector<Ballot> ballots) {
  return Profile(oracle::names(m), std::move(ballots));
}

Ballot ballot(std::vector<std::vector<VertexId>> classes, unsigned long long count = 1) {
  return Ballot{WeakOrder(std::move(classes)), count};
}

std::vector<std::vector<VertexId>> blocks_of(const AggregateResult& r) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& o : r.orders) out.push_back(o.blocks().front());
  return out;
}

}  // namespace

TEST(ProfileType, Validation) {
  EXPECT_THROW(make(3, {ballot({{0}, {1}})}), ValidationError);
  EXPECT_THROW(make(2, {}), ValidationError);
  EXPECT_THROW(Profile({"a", "a"}, {ballot({{0, 1}})}), ValidationError);
  EXPECT_THROW(make(2, {ballot({{0, 1}}, 0)}), ValidationError);
  EXPECT_EQ(make(2, {ballot({{0}, {1}}, 3), ballot({{1}, {0}})}).voter_count(), 4u);
}

TEST(Induce, Examples) {
  EXPECT_EQ(induce_tournament(make(2, {ballot({{0}, {1}})})).weight("a", "b"), 1);
  EXPECT_EQ(induce_tournament(make(2, {ballot({{0, 1}})})).weight("a", "b"), 0);
  const auto t = induce_tournament(make(5, {ballot({{0}, {1}, {2, 3, 4}}),
                                            ballot({{2, 3, 4}, {0}, {1}})}));
  for (VertexId i = 0; i < 5; ++i) {
    for (VertexId j = i + 1; j < 5; ++j) {
      EXPECT_EQ(t.stored(i, j), (i == 0 && j == 1) ? 2 : 0);
    }
  }
  EXPECT_THROW(induce_tournament(make(1, {ballot({{0}})})), ValidationError);
}

TEST(Induce, MatchesPairwiseCount) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 4;
    std::vector<Ballot> ballots;
    for (int b = 0; b < 1 + trial % 5; ++b) {
      ballots.push_back({oracle::random_weak_order(rng, m, 1 + (b + trial) % m),
                         static_cast<unsigned long long>(1 + b % 3)});
    }
    const auto p = make(m, ballots);
    const auto t = induce_tournament(p);
    for (VertexId x = 0; x < m; ++x) {
      for (VertexId y = 0; y < m; ++y) {
        if (x == y) continue;
        long long net = 0;
        for (const auto& b : p.ballots()) {
          const auto level = b.order.levels(m);
          const auto c = static_cast<long long>(b.count);
          if (level[x] <= level[y]) net += c;
          if (level[y] <= level[x]) net -= c;
        }
        ASSERT_EQ(t.weight(x, y), net);
      }
    }
  }
}

TEST(LevelSpecType, ParseAndConform) {
  EXPECT_EQ(LevelSpec::parse("3"), LevelSpec::fixed(3));
  EXPECT_EQ(LevelSpec::parse("|V|"), LevelSpec::linear());
  EXPECT_EQ(LevelSpec::parse("2*"), LevelSpec::univalent());
  EXPECT_EQ(LevelSpec::parse("2★"), LevelSpec::univalent());
  EXPECT_THROW(LevelSpec::parse("0"), ValidationError);
  EXPECT_THROW(LevelSpec::parse("two"), ValidationError);
  const WeakOrder top_one({{0}, {1, 2}});
  EXPECT_TRUE(LevelSpec::univalent().conforms(top_one, 3));
  EXPECT_TRUE(LevelSpec::fixed(2).conforms(top_one, 3));
  EXPECT_FALSE(LevelSpec::linear().conforms(top_one, 3));
  EXPECT_FALSE(LevelSpec::univalent().conforms(WeakOrder({{0, 1}, {2}}), 3));
}

TEST(JkKemeny, ApprovalWinner) {
  const auto p = make(3, {ballot({{0, 1}, {2}}, 2), ballot({{0}, {1, 2}})});
  const auto r = jk_kemeny(p, LevelSpec::fixed(2), LevelSpec::univalent());
  ASSERT_EQ(r.orders.size(), 1u);
  EXPECT_EQ(r.orders[0], WeakOrder({{0}, {1, 2}}));
}

TEST(JkKemeny, BordaWinnerOnLinearBallots) {
  const auto p = make(3, {ballot({{0}, {1}, {2}}, 2), ballot({{1}, {2}, {0}})});
  const auto r = jk_kemeny(p, LevelSpec::linear(), LevelSpec::univalent());
  EXPECT_EQ(oracle::winners(r.orders), oracle::argmax(oracle::borda_points(p)));
}

TEST(JkKemeny, TrichotomousThreeVoterProfile) {
  const auto p = make(4, {ballot({{0}, {1}, {2, 3}}), ballot({{2, 3}, {0}, {1}})});
  const auto r = jk_kemeny(p, LevelSpec::fixed(3), LevelSpec::fixed(3));
  const auto best = oracle::max_kop(induce_tournament(p), 3);
  EXPECT_EQ(r.optimum, best.optimum);
  EXPECT_EQ(oracle::as_levels(r.orders, 4), best.argmax);
  for (const auto& o : r.orders) {
    const auto level = o.levels(4);
    EXPECT_LT(level[0], level[1]);
  }
}

TEST(JkKemeny, RejectsNonConformingBallotUnlessCoerced) {
  const auto p = make(3, {ballot({{0}, {1}, {2}}), ballot({{0, 1}, {2}})});
  try {
    jk_kemeny(p, LevelSpec::linear(), LevelSpec::fixed(2));
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("ballot 2"), std::string::npos);
  }
  AggregateOptions coerce;
  coerce.coerce = true;
  EXPECT_NO_THROW(jk_kemeny(p, LevelSpec::linear(), LevelSpec::fixed(2), coerce));
}

TEST(JkKemeny, FixedKMatchesOracle) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 2 + trial % 4;
    const std::size_t k = 1 + trial % 4;
    std::vector<Ballot> ballots;
    for (int b = 0; b < 1 + trial % 6; ++b) ballots.push_back({oracle::random_weak_order(rng, m, 1 + b % m), 1});
    const auto p = make(m, ballots);
    AggregateOptions o;
    o.coerce = true;
    const auto r = jk_kemeny(p, LevelSpec::fixed(1), LevelSpec::fixed(k), o);
    const auto best = oracle::max_kop(induce_tournament(p), k);
    EXPECT_EQ(r.optimum, best.optimum);
    EXPECT_EQ(oracle::as_levels(r.orders, m), best.argmax);
  }
}

TEST(JkKemeny, ScaleInvariance) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 3 + trial % 3;
    std::vector<Ballot> ballots;
    for (int b = 0; b < 4; ++b) ballots.push_back({oracle::random_weak_order(rng, m, m), 1});
    const auto p = make(m, ballots);
    for (const auto& [j, k] : {std::pair{LevelSpec::linear(), LevelSpec::fixed(2)},
                               std::pair{LevelSpec::linear(), LevelSpec::linear()},
                               std::pair{LevelSpec::linear(), LevelSpec::univalent()}}) {
      const auto a = jk_kemeny(p, j, k);
      const auto b = jk_kemeny(p.scaled(3), j, k);
      EXPECT_EQ(a.orders, b.orders);
      EXPECT_EQ(3 * a.optimum, b.optimum);
    }
  }
}

TEST(MeanRule, Examples) {
  const auto above = mean_rule(make(3, {ballot({{0, 1}, {2}}, 2)}));
  ASSERT_EQ(above.orders.size(), 1u);
  EXPECT_EQ(above.orders[0], WeakOrder({{0, 1}, {2}}));

  const auto unanimous = mean_rule(make(2, {ballot({{0}, {1}}, 4)}));
  ASSERT_EQ(unanimous.orders.size(), 1u);
  EXPECT_EQ(unanimous.orders[0], WeakOrder({{0}, {1}}));

  const auto tied = mean_rule(make(2, {ballot({{0, 1}})}), AggregateOptions{true});
  EXPECT_EQ(tied.optimum, 0);
  EXPECT_NE(std::find(tied.orders.begin(), tied.orders.end(), WeakOrder({{0, 1}})),
            tied.orders.end());

  EXPECT_THROW(mean_rule(make(3, {ballot({{0}, {1}, {2}})})), ValidationError);
}

TEST(BordaMeanRule, Examples) {
  // Borda scores 2, 0, -2: b sits at the mean and may go either way.
  const auto r = borda_mean_rule(make(3, {ballot({{0}, {1}, {2}})}));
  EXPECT_EQ(oracle::as_levels(r.orders, 3),
            (std::vector<oracle::Levels>{{0, 0, 1}, {0, 1, 1}}));

  const auto cancel = borda_mean_rule(make(3, {ballot({{0}, {1}, {2}}), ballot({{2}, {1}, {0}})}));
  EXPECT_EQ(cancel.optimum, 0);
  EXPECT_EQ(cancel.orders.size(), oracle::ordered_partitions(3, 1, 2).size());

  const auto p = make(3, {ballot({{0}, {1}, {2}}, 2), ballot({{1}, {2}, {0}})});
  const auto mixed = borda_mean_rule(p);
  const auto best = oracle::max_kop(induce_tournament(p), 2);
  EXPECT_EQ(mixed.optimum, best.optimum);
  EXPECT_EQ(oracle::as_levels(mixed.orders, 3), best.argmax);

  EXPECT_THROW(borda_mean_rule(make(3, {ballot({{0, 1}, {2}})})), ValidationError);
}

TEST(NamedRules, Examples) {
  const auto approval = named_rule(make(3, {ballot({{0, 1}, {2}}), ballot({{0}, {1, 2}})}),
                                   NamedRule::approval_winner);
  EXPECT_EQ(blocks_of(approval), (std::vector<std::vector<VertexId>>{{0}}));

  const auto plurality = named_rule(make(3, {ballot({{0}, {1, 2}}, 2), ballot({{1}, {0, 2}})}),
                                    NamedRule::plurality_winner);
  EXPECT_EQ(blocks_of(plurality), (std::vector<std::vector<VertexId>>{{0}}));

  EXPECT_EQ(parse_named_rule("kemeny_ranking"), NamedRule::kemeny_ranking);
  EXPECT_EQ(rule_name(NamedRule::borda_winner), "borda_winner");
  EXPECT_THROW(parse_named_rule("copeland"), ValidationError);
}

TEST(NamedRules, KemenyEqualsBordaOnAcyclicProfiles) {
  // x > L and x > reverse(L) induce a basic cocycle scaled by 2.
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 3 + trial % 3;
    std::vector<Ballot> ballots;
    for (int pair = 0; pair < 1 + trial % 3; ++pair) {
      const auto l = oracle::random_weak_order(rng, m, m);
      std::vector<std::vector<VertexId>> forward = l.blocks();
      std::vector<std::vector<VertexId>> backward(forward.rbegin(), forward.rend());
      // Move the top of `forward` to the top of `backward` too.
      const VertexId x = forward.front().front();
      std::erase(backward, std::vector<VertexId>{x});
      backward.insert(backward.begin(), {x});
      ballots.push_back({WeakOrder(forward), 1});
      ballots.push_back({WeakOrder(backward), 1});
    }
    const auto p = make(m, ballots);
    ASSERT_TRUE(is_purely_acyclic(induce_tournament(p)));
    const auto kemeny = named_rule(p, NamedRule::kemeny_ranking);
    EXPECT_EQ(oracle::as_levels(kemeny.orders, m),
              oracle::score_consistent_linear_orders(oracle::borda_points(p)));
    const auto borda = named_rule(p, NamedRule::borda_ranking);
    EXPECT_EQ(borda.orders, kemeny.orders);
  }
}

TEST(NamedRules, RankingsUseLinearOutputs) {
  const auto p = make(3, {ballot({{0, 1}, {2}}), ballot({{1}, {0, 2}})});
  const auto r = named_rule(p, NamedRule::approval_ranking);
  for (const auto& o : r.orders) EXPECT_EQ(o.block_count(), 3u);
  // Approval scores a=1, b=2, c=0.
  ASSERT_EQ(r.orders.size(), 1u);
  EXPECT_EQ(r.orders[0], WeakOrder({{1}, {0}, {2}}));
}

TEST(Realize, KnownThreeVertexProfile) {
  WeightedTournament w(oracle::names(4));
  w.set_weight("a", "b", 1);
  const auto p = realize_weights(w);
  EXPECT_EQ(p.ballots(), (std::vector<Ballot>{ballot({{0}, {1}, {2, 3}}), ballot({{2, 3}, {0}, {1}})}));
  const auto t = induce_tournament(p);
  EXPECT_EQ(t.weight("a", "b"), 2);
  EXPECT_EQ(t.weight("c", "d"), 0);
}

TEST(Realize, ZeroWeightsStillHaveVoters) {
  const auto p = realize_weights(WeightedTournament(oracle::names(3)));
  EXPECT_GE(p.voter_count(), 1u);
  EXPECT_TRUE(induce_tournament(p).all_zero());
}

TEST(Realize, RoundTripDoublesWeights) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const auto w = oracle::random_tournament(rng, 3 + trial % 4, 6);
    const auto t = induce_tournament(realize_weights(w));
    for (std::size_t a = 0; a < w.arc_count(); ++a) {
      ASSERT_EQ(t.stored_weights()[a], 2 * w.stored_weights()[a]);
    }
  }
}

TEST(Realize, Errors) {
  WeightedTournament frac(oracle::names(3));
  frac.set_weight("a", "b", Rational(1, 2));
  EXPECT_THROW(realize_weights(frac), ValidationError);
  EXPECT_THROW(realize_weights(WeightedTournament(oracle::names(2))), ValidationError);
}
