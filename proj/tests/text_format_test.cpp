#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tourney/errors.hpp"
#include "tourney/text_format.hpp"

using namespace tourney;

TEST(TournamentFormat, ParsesEitherOrientationAndComments) {
  const auto t = parse_tournament(
      "# three-cycle\n"
      "tournament 3\n"
      "a\nb\nc\n"
      "\n"
      "a b 1\n"
      "b c 1/1\n"
      "c a 1\n");
  EXPECT_EQ(t.stored(0, 2), -1);
  EXPECT_EQ(t.weight("c", "a"), 1);
}

TEST(TournamentFormat, MissingArcsAreZero) {
  const auto t = parse_tournament("tournament 3\na\nb\nc\na b -3/6\n");
  EXPECT_EQ(t.weight("a", "b"), Rational(-1, 2));
  EXPECT_EQ(t.weight("a", "c"), 0);
}

TEST(TournamentFormat, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = oracle::random_tournament(rng, 1 + trial % 6, 9);
    if (trial % 2 && t.size() >= 2) t.set_weight(0, 1, Rational(trial, 7));
    EXPECT_EQ(parse_tournament(format_tournament(t)), t);
  }
}

TEST(TournamentFormat, Errors) {
  auto expect_error = [](const std::string& text, std::size_t line, const std::string& expected) {
    try {
      parse_tournament(text, "t.txt");
      ADD_FAILURE() << "no error for: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.file(), "t.txt");
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_NE(e.expected().find(expected), std::string::npos) << e.what();
    }
  };
  expect_error("graph 2\na\nb\n", 1, "tournament");
  expect_error("tournament x\n", 1, "vertex count");
  expect_error("tournament 2\na\n", 3, "vertex name");
  expect_error("tournament 2\na\na\n", 3, "new vertex");
  expect_error("tournament 2\na\nb\na z 1\n", 4, "declared vertex");
  expect_error("tournament 2\na\nb\na b 1/0\n", 4, "rational");
  expect_error("tournament 2\na\nb\na b 1\nb a 2\n", 5, "at most once");
  expect_error("tournament 2\na\nb\na a 1\n", 4, "distinct");
  expect_error("tournament 2\na\nb\na b\n", 4, "x y p/q");
}

TEST(PartitionFormat, RoundTripAndErrors) {
  const auto names = oracle::names(5);
  const auto p = parse_partition("a b > c > d e", names);
  EXPECT_EQ(p, OrderedPartition({{0, 1}, {2}, {3, 4}}));
  EXPECT_EQ(format_partition(p, names), "a b > c > d e");
  EXPECT_THROW(parse_partition("a > > b", names), ParseError);
  EXPECT_THROW(parse_partition("a > a", names), ParseError);
  EXPECT_THROW(parse_partition("a > q", names), ParseError);
  EXPECT_THROW(parse_partition("", names), ParseError);
}

TEST(ProfileFormat, ParsesMultiplicities) {
  const auto p = parse_profile("profile 4\na\nb\nc\nd\na b | c | d × 3\nd | c b a\nc | a | b | d * 2\n");
  ASSERT_EQ(p.ballots().size(), 3u);
  EXPECT_EQ(p.ballots()[0].count, 3u);
  EXPECT_EQ(p.ballots()[0].order, WeakOrder({{0, 1}, {2}, {3}}));
  EXPECT_EQ(p.ballots()[1].count, 1u);
  EXPECT_EQ(p.ballots()[2].count, 2u);
  EXPECT_EQ(p.voter_count(), 6u);
}

TEST(ProfileFormat, RoundTrip) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 2 + trial % 4;
    std::vector<Ballot> ballots;
    for (int b = 0; b < 1 + trial % 4; ++b) {
      ballots.push_back({oracle::random_weak_order(rng, m, 1 + b % m), static_cast<unsigned long long>(1 + b)});
    }
    const Profile p(oracle::names(m), ballots);
    EXPECT_EQ(parse_profile(format_profile(p)), p);
  }
}

TEST(ProfileFormat, Errors) {
  EXPECT_THROW(parse_profile("profile 2\na\nb\n"), ParseError);
  EXPECT_THROW(parse_profile("profile 2\na\nb\na\n"), ParseError);
  EXPECT_THROW(parse_profile("profile 2\na\nb\na | b × 0\n"), ParseError);
  EXPECT_THROW(parse_profile("profile 2\na\nb\na | | b\n"), ParseError);
  EXPECT_THROW(parse_profile("profile 2\na|x\nb\n"), ParseError);
}

TEST(GraphFormat, RoundTripAndErrors) {
  const auto g = parse_graph("graph 3\na\nb\nc\na b 2\nc b 5\n");
  EXPECT_EQ(g.weight(1, 2), 5);
  EXPECT_EQ(g.weight(0, 2), 0);
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_THROW(parse_graph("graph 2\na\nb\na b -1\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\na\nb\na b 1/2\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 2\na\nb\na b 1\nb a 1\n"), ParseError);
}

TEST(Sidecar, RoundTrip) {
  const auto g = parse_graph("graph 3\na\nb\nc\na b 1\nb c 2\n");
  for (const auto& s : {make_sidecar(build_hg(g)), make_sidecar(build_fg(g)),
                        make_club_sidecar(g, add_club_vertex(g))}) {
    EXPECT_EQ(parse_sidecar(format_sidecar(s)), s);
  }
  const auto fg = make_sidecar(build_fg(g));
  ASSERT_TRUE(fg.C.has_value());
  EXPECT_EQ(*fg.C, 4);
  EXPECT_EQ(*fg.epsilon, Rational(1, 72 * 81));
  EXPECT_THROW(parse_sidecar("gadget xx\n"), ParseError);
  EXPECT_THROW(parse_sidecar("gadget hg\nbogus 1\n"), ParseError);
}

TEST(Files, UnreadablePath) {
  EXPECT_THROW(read_text_file("/nonexistent/definitely/missing"), ValidationError);
}
