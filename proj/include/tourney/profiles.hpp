#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/solvers.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Classes of alternatives, best first. Same shape as an ordered partition.
using WeakOrder = OrderedPartition;

struct Ballot {
  WeakOrder order;
  unsigned long long count = 1;

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

/// Weak-order ballots with explicit multiplicities.
class Profile {
 public:
  Profile() = default;
  /// Validates every ballot against the alternative list and |N| >= 1.
  Profile(std::vector<std::string> alternatives, std::vector<Ballot> ballots);

  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<Ballot>& ballots() const noexcept { return ballots_; }
  std::size_t size() const noexcept { return alternatives_.size(); }
  unsigned long long voter_count() const noexcept;

  /// Every multiplicity multiplied by `factor` (> 0).
  Profile scaled(unsigned long long factor) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<Ballot> ballots_;
};

/// Ballot or output shape in a (j,k) pair: a fixed class count, linear
/// orders (|V|), or univalent dichotomous orders (2*).
struct LevelSpec {
  enum class Kind { fixed, linear, univalent };
  Kind kind = Kind::fixed;
  std::size_t classes = 2;

  static LevelSpec fixed(std::size_t n) { return {Kind::fixed, n}; }
  static LevelSpec linear() { return {Kind::linear, 0}; }
  static LevelSpec univalent() { return {Kind::univalent, 2}; }

  /// Accepts an integer, `|V|` (also `V`, `m`, `linear`), or `2*` (also `2★`, `2star`).
  static LevelSpec parse(std::string_view text);
  std::string str() const;

  bool conforms(const WeakOrder& w, std::size_t m) const;

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

struct AggregateOptions {
  /// Skip ballot conformance checks against j.
  bool coerce = false;
  /// Exactly k classes for a fixed k (|V| outputs are always linear).
  bool exact_k = false;
  unsigned long long guard = 100'000'000ULL;
  std::size_t witness_cap = 10'000;
};

struct AggregateResult {
  Rational optimum;
  std::vector<WeakOrder> orders;
  bool truncated = false;
};

/// Net-majority tournament: stored arc (v_i, v_j), i < j, weighs
/// #{v_i >= v_j} - #{v_j >= v_i}.
WeightedTournament induce_tournament(const Profile& p);

/// Throws ValidationError naming the first ballot that violates `j`.
void validate_ballots(const Profile& p, const LevelSpec& j);

AggregateResult jk_kemeny(const Profile& p, const LevelSpec& j, const LevelSpec& k,
                          const AggregateOptions& options = {});

AggregateResult mean_rule(const Profile& p, const AggregateOptions& options = {});
AggregateResult borda_mean_rule(const Profile& p, const AggregateOptions& options = {});

enum class NamedRule {
  approval_ranking,
  approval_winner,
  plurality_ranking,
  plurality_winner,
  borda_ranking,
  borda_winner,
  kemeny_ranking,
};

NamedRule parse_named_rule(std::string_view name);
std::string_view rule_name(NamedRule rule);

/// (j,k) pair behind each rule; borda_ranking has none and is computed as
/// the linear outcome on the cocyclic part of the induced tournament.
std::pair<LevelSpec, LevelSpec> rule_levels(NamedRule rule);

AggregateResult named_rule(const Profile& p, NamedRule rule,
                           const AggregateOptions& options = {});

/// Trichotomous profile whose induced tournament is exactly 2w. Needs
/// integer weights and m >= 3.
Profile realize_weights(const WeightedTournament& w);

}  // namespace tourney
