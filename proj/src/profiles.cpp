#include "tourney/profiles.hpp"

#include <algorithm>
#include <array>

#include "tourney/decomposition.hpp"
#include "tourney/errors.hpp"

namespace tourney {

Profile::Profile(std::vector<std::string> alternatives, std::vector<Ballot> ballots)
    : alternatives_(std::move(alternatives)), ballots_(std::move(ballots)) {
  std::vector<std::string> sorted = alternatives_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("profile repeats an alternative");
  }
  for (std::size_t b = 0; b < ballots_.size(); ++b) {
    if (!ballots_[b].order.covers(alternatives_.size())) {
      throw ValidationError("ballot " + std::to_string(b + 1) +
                            " does not rank exactly the profile's alternatives");
    }
  }
  if (voter_count() == 0) throw ValidationError("profile has no ballots");
}

unsigned long long Profile::voter_count() const noexcept {
  unsigned long long n = 0;
  for (const auto& b : ballots_) n += b.count;
  return n;
}

Profile Profile::scaled(unsigned long long factor) const {
  if (factor == 0) throw ValidationError("scale factor must be positive");
  auto ballots = ballots_;
  for (auto& b : ballots) b.count *= factor;
  return Profile(alternatives_, std::move(ballots));
}

// ---------------------------------------------------------------------------

LevelSpec LevelSpec::parse(std::string_view text) {
  if (text == "|V|" || text == "V" || text == "m" || text == "linear") return linear();
  if (text == "2*" || text == "2★" || text == "2star") return univalent();
  std::size_t n = 0;
  if (text.empty()) throw ValidationError("empty level spec");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ValidationError("level spec must be an integer, |V|, or 2*: '" +
                            std::string(text) + "'");
    }
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n == 0) throw ValidationError("level spec must be positive");
  return fixed(n);
}

std::string LevelSpec::str() const {
  switch (kind) {
    case Kind::linear:
      return "|V|";
    case Kind::univalent:
      return "2*";
    case Kind::fixed:
      break;
  }
  return std::to_string(classes);
}

bool LevelSpec::conforms(const WeakOrder& w, std::size_t m) const {
  switch (kind) {
    case Kind::linear:
      return w.block_count() == m;
    case Kind::univalent:
      return w.block_count() == 2 && w.blocks().front().size() == 1;
    case Kind::fixed:
      break;
  }
  return w.block_count() == classes;
}

// ---------------------------------------------------------------------------

WeightedTournament induce_tournament(const Profile& p) {
  const std::size_t m = p.size();
  if (m < 2) throw ValidationError("inducing a tournament needs at least 2 alternatives");
  std::vector<long long> net(m * m, 0);
  for (const auto& ballot : p.ballots()) {
    const auto level = ballot.order.levels(m);
    const auto c = static_cast<long long>(ballot.count);
    for (VertexId i = 0; i < m; ++i) {
      for (VertexId j = i + 1; j < m; ++j) {
        if (level[i] < level[j]) net[i * m + j] += c;
        else if (level[i] > level[j]) net[i * m + j] -= c;
      }
    }
  }
  WeightedTournament t(p.alternatives());
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) t.set_weight(i, j, Rational(net[i * m + j]));
  }
  return t;
}

void validate_ballots(const Profile& p, const LevelSpec& j) {
  for (std::size_t b = 0; b < p.ballots().size(); ++b) {
    if (!j.conforms(p.ballots()[b].order, p.size())) {
      throw ValidationError("ballot " + std::to_string(b + 1) + " has " +
                            std::to_string(p.ballots()[b].order.block_count()) +
                            " classes and does not conform to j = " + j.str());
    }
  }
}

namespace {

AggregateResult to_aggregate(SolveResult r) {
  return AggregateResult{std::move(r.optimum), std::move(r.witnesses), r.truncated};
}

SolveResult solve_linear(const WeightedTournament& t, SolveOptions so) {
  so.exact_k = true;
  if (is_purely_acyclic(t)) return solve_acyclic_dp(t, t.size(), so);
  return solve_bruteforce(t, t.size(), so);
}

}  // namespace

AggregateResult jk_kemeny(const Profile& p, const LevelSpec& j, const LevelSpec& k,
                          const AggregateOptions& options) {
  if (!options.coerce) validate_ballots(p, j);
  const auto t = induce_tournament(p);
  SolveOptions so;
  so.all_ties = true;
  so.exact_k = options.exact_k;
  so.guard = options.guard;
  so.witness_cap = options.witness_cap;

  switch (k.kind) {
    case LevelSpec::Kind::univalent:
      return to_aggregate(solve_univalent(t, so));
    case LevelSpec::Kind::linear:
      return to_aggregate(solve_linear(t, so));
    case LevelSpec::Kind::fixed:
      break;
  }
  if (k.classes == 2) return to_aggregate(solve_2op(t, so));
  if (is_purely_acyclic(t)) return to_aggregate(solve_acyclic_dp(t, k.classes, so));
  return to_aggregate(solve_bruteforce(t, k.classes, so));
}

AggregateResult mean_rule(const Profile& p, const AggregateOptions& options) {
  return jk_kemeny(p, LevelSpec::fixed(2), LevelSpec::fixed(2), options);
}

AggregateResult borda_mean_rule(const Profile& p, const AggregateOptions& options) {
  return jk_kemeny(p, LevelSpec::linear(), LevelSpec::fixed(2), options);
}

namespace {

constexpr std::array<std::pair<NamedRule, std::string_view>, 7> kRuleNames{{
    {NamedRule::approval_ranking, "approval_ranking"},
    {NamedRule::approval_winner, "approval_winner"},
    {NamedRule::plurality_ranking, "plurality_ranking"},
    {NamedRule::plurality_winner, "plurality_winner"},
    {NamedRule::borda_ranking, "borda_ranking"},
    {NamedRule::borda_winner, "borda_winner"},
    {NamedRule::kemeny_ranking, "kemeny_ranking"},
}};

}  // namespace

NamedRule parse_named_rule(std::string_view name) {
  for (const auto& [rule, text] : kRuleNames) {
    if (text == name) return rule;
  }
  throw ValidationError("unknown rule '" + std::string(name) + "'");
}

std::string_view rule_name(NamedRule rule) {
  for (const auto& [r, text] : kRuleNames) {
    if (r == rule) return text;
  }
  return "?";
}

std::pair<LevelSpec, LevelSpec> rule_levels(NamedRule rule) {
  switch (rule) {
    case NamedRule::approval_ranking:
      return {LevelSpec::fixed(2), LevelSpec::linear()};
    case NamedRule::approval_winner:
      return {LevelSpec::fixed(2), LevelSpec::univalent()};
    case NamedRule::plurality_ranking:
      return {LevelSpec::univalent(), LevelSpec::linear()};
    case NamedRule::plurality_winner:
      return {LevelSpec::univalent(), LevelSpec::univalent()};
    case NamedRule::borda_winner:
      return {LevelSpec::linear(), LevelSpec::univalent()};
    case NamedRule::borda_ranking:
    case NamedRule::kemeny_ranking:
      break;
  }
  return {LevelSpec::linear(), LevelSpec::linear()};
}

AggregateResult named_rule(const Profile& p, NamedRule rule,
                           const AggregateOptions& options) {
  const auto [j, k] = rule_levels(rule);
  if (rule != NamedRule::borda_ranking) return jk_kemeny(p, j, k, options);

  if (!options.coerce) validate_ballots(p, j);
  SolveOptions so;
  so.all_ties = true;
  so.guard = options.guard;
  so.witness_cap = options.witness_cap;
  return to_aggregate(solve_linear(cocycle_component(induce_tournament(p)), so));
}

// ---------------------------------------------------------------------------

Profile realize_weights(const WeightedTournament& w) {
  const std::size_t m = w.size();
  if (m < 3) throw ValidationError("weight realization needs at least 3 vertices");
  std::vector<Ballot> ballots;
  auto trichotomy = [&](VertexId top, VertexId mid, bool rest_first) {
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < m; ++v) {
      if (v != top && v != mid) rest.push_back(v);
    }
    if (rest_first) return WeakOrder({rest, {top}, {mid}});
    return WeakOrder({{top}, {mid}, rest});
  };
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      const Rational& c = w.stored(i, j);
      if (!is_integer(c)) {
        throw ValidationError("weight on (" + w.name(i) + ", " + w.name(j) +
                              ") is not an integer");
      }
      if (c == 0) continue;
      const auto copies = abs(numerator(c)).convert_to<unsigned long long>();
      const VertexId hi = c > 0 ? i : j;
      const VertexId lo = c > 0 ? j : i;
      ballots.push_back({trichotomy(hi, lo, false), copies});
      ballots.push_back({trichotomy(hi, lo, true), copies});
    }
  }
  if (ballots.empty()) {
    // A ballot and its reverse cancel on every arc.
    auto forward = trichotomy(0, 1, false);
    ballots.push_back({forward, 1});
    ballots.push_back({forward.reversed(), 1});
  }
  return Profile(w.vertices(), std::move(ballots));
}

}  // namespace tourney
