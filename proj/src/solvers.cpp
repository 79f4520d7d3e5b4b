#include "tourney/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <optional>
#include <thread>

#include "tourney/decomposition.hpp"
#include "tourney/errors.hpp"

namespace tourney {

unsigned long long labeling_count(std::size_t k, std::size_t m) {
  unsigned long long n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (k != 0 && n > ULLONG_MAX / k) return ULLONG_MAX;
    n *= k;
  }
  return n;
}

namespace {

void check_k(std::size_t k) {
  if (k == 0) throw ValidationError("k must be a positive integer");
}

void sort_canonical(std::vector<OrderedPartition>& witnesses, std::size_t m) {
  std::vector<std::pair<std::vector<int>, OrderedPartition>> keyed;
  keyed.reserve(witnesses.size());
  for (auto& w : witnesses) keyed.emplace_back(w.levels(m), std::move(w));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  witnesses.clear();
  for (auto& [key, w] : keyed) witnesses.push_back(std::move(w));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.
//
// Every vertex gets a level label in [0, k). A labeling is kept only when
// its used labels form a prefix {0..b-1}, so each ordered partition with at
// most k blocks is visited exactly once, in lexicographic label order. The
// score is accumulated incrementally: placing vertex i at level L adds
// sum_{j<i, level(j)<L} w(j,i) - sum_{j<i, level(j)>L} w(j,i).

template <class Value>
struct ChunkResult {
  bool found = false;
  Value best{};
  std::vector<std::vector<int>> witnesses;
  bool truncated = false;
};

template <class Value>
class LabelingSearch {
 public:
  LabelingSearch(std::size_t m, std::size_t k, const std::vector<Value>& dense,
                 const SolveOptions& options)
      : m_(m), k_(k), dense_(dense), options_(options),
        labels_(m, 0), counts_(k, 0), acc_(m * k) {}

  ChunkResult<Value> run(std::span<const int> prefix) {
    result_ = {};
    score_ = Value(0);
    std::fill(counts_.begin(), counts_.end(), 0);
    used_ = 0;
    max_label_ = -1;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int L = prefix[i];
      for (std::size_t j = 0; j < i; ++j) {
        const Value& w = dense_[j * m_ + i];
        if (labels_[j] < L) score_ += w;
        else if (labels_[j] > L) score_ -= w;
      }
      place(i, L);
    }
    if (gaps() > m_ - prefix.size()) return std::move(result_);
    descend(prefix.size());
    return std::move(result_);
  }

 private:
  std::size_t gaps() const {
    return static_cast<std::size_t>(max_label_ + 1) - used_;
  }

  void place(std::size_t i, int L) {
    labels_[i] = L;
    if (counts_[L]++ == 0) ++used_;
    max_label_ = std::max(max_label_, L);
  }

  void descend(std::size_t i) {
    if (i == m_) {
      leaf();
      return;
    }
    Value* acc = &acc_[i * k_];
    for (std::size_t l = 0; l < k_; ++l) acc[l] = Value(0);
    Value total(0);
    for (std::size_t j = 0; j < i; ++j) {
      acc[labels_[j]] += dense_[j * m_ + i];
    }
    for (std::size_t l = 0; l < k_; ++l) total += acc[l];

    const int saved_max = max_label_;
    const std::size_t remaining = m_ - i - 1;
    Value below(0);
    for (std::size_t l = 0; l < k_; ++l) {
      const int L = static_cast<int>(l);
      const Value above = total - below - acc[l];
      const Value delta = below - above;
      place(i, L);
      if (gaps() <= remaining) {
        score_ += delta;
        descend(i + 1);
        score_ -= delta;
      }
      if (--counts_[L] == 0) --used_;
      max_label_ = saved_max;
      below += acc[l];
    }
  }

  void leaf() {
    if (gaps() != 0) return;
    if (options_.exact_k && used_ != k_) return;
    if (!result_.found || score_ > result_.best) {
      result_.found = true;
      result_.best = score_;
      result_.witnesses.clear();
      result_.witnesses.push_back(labels_);
      result_.truncated = false;
      return;
    }
    if (score_ == result_.best && options_.all_ties) {
      if (result_.witnesses.size() < options_.witness_cap) {
        result_.witnesses.push_back(labels_);
      } else {
        result_.truncated = true;
      }
    }
  }

  std::size_t m_;
  std::size_t k_;
  const std::vector<Value>& dense_;
  const SolveOptions& options_;
  std::vector<int> labels_;
  std::vector<int> counts_;
  std::vector<Value> acc_;
  std::size_t used_ = 0;
  int max_label_ = -1;
  Value score_{};
  ChunkResult<Value> result_;
};

template <class Value>
ChunkResult<Value> enumerate_all(std::size_t m, std::size_t k,
                                 const std::vector<Value>& dense,
                                 const SolveOptions& options) {
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  // Split on the labels of the first `depth` vertices; chunks are merged in
  // lexicographic prefix order so the outcome is schedule independent.
  std::size_t depth = 0;
  if (threads > 1) {
    while (depth < m && depth < 4 && labeling_count(k, depth) < 8ULL * threads) ++depth;
  }
  const std::size_t chunks = static_cast<std::size_t>(labeling_count(k, depth));
  std::vector<std::vector<int>> prefixes(chunks, std::vector<int>(depth));
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t code = c;
    for (std::size_t d = depth; d-- > 0;) {
      prefixes[c][d] = static_cast<int>(code % k);
      code /= k;
    }
  }

  std::vector<ChunkResult<Value>> results(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    LabelingSearch<Value> search(m, k, dense, options);
    for (std::size_t c = next++; c < chunks; c = next++) {
      results[c] = search.run(prefixes[c]);
    }
  };
  if (threads <= 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < std::min<std::size_t>(threads, chunks); ++i) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) th.join();
  }

  ChunkResult<Value> merged;
  for (const auto& r : results) {
    if (r.found && (!merged.found || r.best > merged.best)) {
      merged.found = true;
      merged.best = r.best;
    }
  }
  if (!merged.found) return merged;
  for (auto& r : results) {
    if (!r.found || r.best != merged.best) continue;
    for (auto& w : r.witnesses) {
      if (!options.all_ties && !merged.witnesses.empty()) break;
      if (merged.witnesses.size() < options.witness_cap) {
        merged.witnesses.push_back(std::move(w));
      } else {
        merged.truncated = true;
      }
    }
    if (r.truncated) merged.truncated = true;
  }
  return merged;
}

template <class Value>
SolveResult finish(const ChunkResult<Value>& r, const Rational& scale, std::size_t m) {
  SolveResult out;
  if constexpr (std::is_same_v<Value, Rational>) {
    out.optimum = r.best / scale;
  } else {
    out.optimum = Rational(r.best) / scale;
  }
  for (const auto& labels : r.witnesses) {
    out.witnesses.push_back(OrderedPartition::from_levels(labels));
  }
  out.truncated = r.truncated;
  sort_canonical(out.witnesses, m);
  return out;
}

// ---------------------------------------------------------------------------
// Divider DP.

class DividerDp {
 public:
  DividerDp(std::vector<Rational> gamma, std::size_t k, bool exact_k)
      : gamma_(std::move(gamma)), n_(gamma_.size()), exact_(exact_k) {
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return gamma_[a] > gamma_[b];
    });
    prefix_.assign(n_ + 1, Rational(0));
    for (std::size_t p = 0; p < n_; ++p) prefix_[p + 1] = prefix_[p] + gamma_[order_[p]];
    max_blocks_ = std::min(k, n_);
    k_ = k;
  }

  /// Contribution of the block holding sorted positions [l, r): every member
  /// gains its gamma once per vertex below and loses it once per vertex above.
  Rational segment(std::size_t l, std::size_t r) const {
    return (prefix_[r] - prefix_[l]) * static_cast<long>(n_ - r - l);
  }

  std::optional<Rational> solve() {
    table_.assign((max_blocks_ + 1) * (n_ + 1), std::nullopt);
    at(0, 0) = Rational(0);
    for (std::size_t j = 1; j <= max_blocks_; ++j) {
      for (std::size_t r = j; r <= n_; ++r) {
        std::optional<Rational> best;
        for (std::size_t l = j - 1; l < r; ++l) {
          if (!at(j - 1, l)) continue;
          Rational v = *at(j - 1, l) + segment(l, r);
          if (!best || v > *best) best = std::move(v);
        }
        at(j, r) = std::move(best);
      }
    }
    std::optional<Rational> best;
    for (std::size_t j = 1; j <= max_blocks_; ++j) {
      if (exact_ && j != k_) continue;
      if (at(j, n_) && (!best || *at(j, n_) > *best)) best = *at(j, n_);
    }
    optimum_ = best;
    return best;
  }

  /// All optimal partitions, capped. Members with equal gamma may trade
  /// places across blocks without changing the score, so each optimal
  /// segmentation expands into every such redistribution.
  bool witnesses(std::size_t cap, std::vector<OrderedPartition>& out) {
    bool truncated = false;
    for (std::size_t j = 1; j <= max_blocks_ && !truncated; ++j) {
      if (exact_ && j != k_) continue;
      if (!at(j, n_) || *at(j, n_) != *optimum_) continue;
      std::vector<std::size_t> cuts{n_};
      truncated = backtrack(j, n_, cuts, cap, out);
    }
    return truncated;
  }

 private:
  std::optional<Rational>& at(std::size_t j, std::size_t r) {
    return table_[j * (n_ + 1) + r];
  }

  bool backtrack(std::size_t j, std::size_t r, std::vector<std::size_t>& cuts,
                 std::size_t cap, std::vector<OrderedPartition>& out) {
    if (j == 0) {
      if (r != 0) return false;
      std::vector<std::size_t> forward(cuts.rbegin(), cuts.rend());
      return expand(forward, cap, out);
    }
    for (std::size_t l = j - 1; l < r; ++l) {
      if (!at(j - 1, l)) continue;
      if (*at(j - 1, l) + segment(l, r) != *at(j, r)) continue;
      cuts.push_back(l);
      bool stop = backtrack(j - 1, l, cuts, cap, out);
      cuts.pop_back();
      if (stop) return true;
    }
    return false;
  }

  bool expand(const std::vector<std::size_t>& cuts, std::size_t cap,
              std::vector<OrderedPartition>& out) {
    // cuts = {0, c1, ..., n}; block b covers sorted positions [cuts[b], cuts[b+1]).
    std::vector<int> block_of_pos(n_);
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
      for (std::size_t p = cuts[b]; p < cuts[b + 1]; ++p) block_of_pos[p] = static_cast<int>(b);
    }
    struct Group {
      std::vector<std::size_t> members;  // vertex ids, ascending
      std::vector<int> slots;            // block labels, ascending
    };
    std::vector<Group> groups;
    for (std::size_t p = 0; p < n_;) {
      std::size_t q = p;
      Group g;
      while (q < n_ && gamma_[order_[q]] == gamma_[order_[p]]) {
        g.members.push_back(order_[q]);
        g.slots.push_back(block_of_pos[q]);
        ++q;
      }
      std::sort(g.members.begin(), g.members.end());
      groups.push_back(std::move(g));
      p = q;
    }
    std::vector<int> levels(n_, 0);
    return assign_groups(groups, 0, levels, cap, out);
  }

  template <class Groups>
  bool assign_groups(Groups& groups, std::size_t g, std::vector<int>& levels,
                     std::size_t cap, std::vector<OrderedPartition>& out) {
    if (g == groups.size()) {
      if (out.size() >= cap) return true;
      out.push_back(OrderedPartition::from_levels(levels));
      return false;
    }
    auto slots = groups[g].slots;
    do {
      for (std::size_t i = 0; i < slots.size(); ++i) levels[groups[g].members[i]] = slots[i];
      if (assign_groups(groups, g + 1, levels, cap, out)) return true;
    } while (std::next_permutation(slots.begin(), slots.end()));
    return false;
  }

  std::vector<Rational> gamma_;
  std::size_t n_;
  bool exact_;
  std::size_t k_ = 0;
  std::size_t max_blocks_ = 0;
  std::vector<std::size_t> order_;
  std::vector<Rational> prefix_;
  std::vector<std::optional<Rational>> table_;
  std::optional<Rational> optimum_;
};

}  // namespace

SolveResult solve_bruteforce(const WeightedTournament& t, std::size_t k,
                             const SolveOptions& options) {
  check_k(k);
  const std::size_t m = t.size();
  if (m == 0) throw ValidationError("tournament has no vertices");
  if (options.exact_k && k > m) {
    throw ValidationError("no ordered partition of " + std::to_string(m) +
                          " vertices into exactly " + std::to_string(k) + " blocks");
  }
  const std::size_t levels = std::min(k, m);
  const unsigned long long count = labeling_count(levels, m);
  if (count > options.guard) {
    throw GuardExceeded("exhaustive search needs " + std::to_string(levels) + "^" +
                            std::to_string(m) + " labelings, above the guard of " +
                            std::to_string(options.guard),
                        options.guard);
  }
  SolveOptions effective = options;
  if (effective.exact_k) effective.exact_k = (levels == k);

  // Scale to a common denominator so the hot loop runs on machine integers
  // whenever every partial sum fits.
  Integer lcm = 1;
  for (const auto& w : t.stored_weights()) {
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(w)));
  }
  const Rational scale(lcm);
  Integer magnitude = 0;
  std::vector<Integer> scaled(t.arc_count());
  for (std::size_t a = 0; a < scaled.size(); ++a) {
    Rational s = t.stored_weights()[a] * scale;
    scaled[a] = numerator(s);
    magnitude += abs(scaled[a]);
  }

  if (magnitude < (Integer(1) << 61)) {
    std::vector<std::int64_t> dense(m * m, 0);
    for (VertexId i = 0; i < m; ++i) {
      for (VertexId j = i + 1; j < m; ++j) {
        dense[i * m + j] = scaled[t.arc_index(i, j)].convert_to<std::int64_t>();
      }
    }
    return finish(enumerate_all<std::int64_t>(m, levels, dense, effective), scale, m);
  }
  std::vector<Rational> dense(m * m, Rational(0));
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) dense[i * m + j] = t.stored(i, j);
  }
  return finish(enumerate_all<Rational>(m, levels, dense, effective), Rational(1), m);
}

SolveResult solve_acyclic_dp(const WeightedTournament& t, std::size_t k,
                             const SolveOptions& options) {
  check_k(k);
  const std::size_t m = t.size();
  if (m == 0) throw ValidationError("tournament has no vertices");
  auto gamma = difference_generator(t);
  if (!gamma) {
    throw PreconditionError(
        "acyclic DP needs a purely acyclic tournament; decompose first");
  }
  if (options.exact_k && k > m) {
    throw ValidationError("no ordered partition of " + std::to_string(m) +
                          " vertices into exactly " + std::to_string(k) + " blocks");
  }
  DividerDp dp(std::move(*gamma), k, options.exact_k);
  auto best = dp.solve();
  SolveResult out;
  out.optimum = *best;
  out.truncated = dp.witnesses(options.all_ties ? options.witness_cap
                                                : std::max<std::size_t>(options.witness_cap, 1),
                               out.witnesses);
  sort_canonical(out.witnesses, m);
  if (!options.all_ties) {
    out.witnesses.resize(1);
    out.truncated = false;
  }
  return out;
}

SolveResult solve_2op(const WeightedTournament& t, const SolveOptions& options) {
  if (t.size() < 2) {
    throw ValidationError("max-2OP needs at least 2 vertices");
  }
  return solve_acyclic_dp(cocycle_component(t), 2, options);
}

SolveResult solve_univalent(const WeightedTournament& t, const SolveOptions& options) {
  const std::size_t m = t.size();
  if (m < 2) throw ValidationError("univalent partitions need at least 2 vertices");
  SolveResult out;
  bool found = false;
  for (VertexId x = 0; x < m; ++x) {
    std::vector<VertexId> rest;
    for (VertexId y = 0; y < m; ++y) {
      if (y != x) rest.push_back(y);
    }
    OrderedPartition p({{x}, rest});
    Rational s = partition_score(t, p);
    if (!found || s > out.optimum) {
      found = true;
      out.optimum = s;
      out.witnesses.clear();
      out.witnesses.push_back(std::move(p));
    } else if (s == out.optimum) {
      out.witnesses.push_back(std::move(p));
    }
  }
  sort_canonical(out.witnesses, m);
  if (!options.all_ties) out.witnesses.resize(1);
  return out;
}

SolveResult solve(const WeightedTournament& t, std::size_t k,
                  const SolveOptions& options, SolveMethod method) {
  switch (method) {
    case SolveMethod::bruteforce:
      return solve_bruteforce(t, k, options);
    case SolveMethod::acyclic_dp:
      return solve_acyclic_dp(t, k, options);
    case SolveMethod::two_op:
      if (k != 2) throw ValidationError("the max-2OP method needs k = 2");
      return solve_2op(t, options);
    case SolveMethod::automatic:
      break;
  }
  check_k(k);
  if (k == 2 && t.size() >= 2) return solve_2op(t, options);
  if (is_purely_acyclic(t)) return solve_acyclic_dp(t, k, options);
  return solve_bruteforce(t, k, options);
}

bool decide(const WeightedTournament& t, std::size_t k, const Rational& threshold,
            const SolveOptions& options) {
  SolveOptions one = options;
  one.all_ties = false;
  return solve(t, k, one).optimum >= threshold;
}

}  // namespace tourney
