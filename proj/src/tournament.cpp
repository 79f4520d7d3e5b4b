#include "tourney/tournament.hpp"

#include <algorithm>

#include "tourney/errors.hpp"

namespace tourney {

WeightedTournament::WeightedTournament(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)) {
  for (VertexId i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      throw ValidationError("duplicate vertex '" + vertices_[i] + "'");
    }
  }
  const std::size_t m = vertices_.size();
  weights_.assign(m * (m - (m > 0 ? 1 : 0)) / 2, Rational(0));
}

bool WeightedTournament::contains(const std::string& name) const {
  return index_.count(name) != 0;
}

VertexId WeightedTournament::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw ValidationError("unknown vertex '" + name + "'");
  }
  return it->second;
}

void WeightedTournament::check_pair(VertexId x, VertexId y) const {
  if (x >= size() || y >= size()) {
    throw ValidationError("vertex index out of range");
  }
  if (x == y) {
    throw ValidationError("no arc from vertex '" + vertices_[x] +
                          "' to itself");
  }
}

Rational WeightedTournament::weight(VertexId x, VertexId y) const {
  check_pair(x, y);
  return x < y ? weights_[arc_index(x, y)] : Rational(-weights_[arc_index(y, x)]);
}

Rational WeightedTournament::weight(const std::string& x,
                                    const std::string& y) const {
  return weight(index_of(x), index_of(y));
}

void WeightedTournament::set_weight(VertexId x, VertexId y, Rational value) {
  check_pair(x, y);
  if (x < y) {
    weights_[arc_index(x, y)] = std::move(value);
  } else {
    weights_[arc_index(y, x)] = -value;
  }
}

void WeightedTournament::set_weight(const std::string& x, const std::string& y,
                                    Rational value) {
  set_weight(index_of(x), index_of(y), std::move(value));
}

bool WeightedTournament::all_zero() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rational& r) { return r == 0; });
}

WeightedTournament with_weights(const WeightedTournament& shape,
                                std::vector<Rational> stored) {
  if (stored.size() != shape.arc_count()) {
    throw ValidationError("weight vector length does not match arc count");
  }
  WeightedTournament out(shape.vertices());
  const std::size_t m = shape.size();
  std::size_t k = 0;
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      out.set_weight(i, j, std::move(stored[k++]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

OrderedPartition::OrderedPartition(std::vector<std::vector<VertexId>> blocks)
    : blocks_(std::move(blocks)) {
  std::vector<VertexId> seen;
  for (auto& block : blocks_) {
    if (block.empty()) throw ValidationError("ordered partition has an empty block");
    std::sort(block.begin(), block.end());
    seen.insert(seen.end(), block.begin(), block.end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ValidationError("ordered partition blocks overlap");
  }
}

OrderedPartition OrderedPartition::from_levels(std::span<const int> levels) {
  int top = -1;
  for (int l : levels) {
    if (l < 0) throw ValidationError("negative level label");
    top = std::max(top, l);
  }
  std::vector<std::vector<VertexId>> by_level(static_cast<std::size_t>(top + 1));
  for (VertexId v = 0; v < levels.size(); ++v) {
    by_level[static_cast<std::size_t>(levels[v])].push_back(v);
  }
  std::erase_if(by_level, [](const auto& b) { return b.empty(); });
  return OrderedPartition(std::move(by_level));
}

std::size_t OrderedPartition::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.size();
  return n;
}

bool OrderedPartition::covers(std::size_t m) const {
  if (vertex_count() != m) return false;
  for (const auto& b : blocks_) {
    if (b.back() >= m) return false;
  }
  return true;
}

std::vector<int> OrderedPartition::levels(std::size_t m) const {
  if (!covers(m)) {
    throw ValidationError("ordered partition does not cover the " +
                          std::to_string(m) + " vertices");
  }
  std::vector<int> out(m, 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (VertexId v : blocks_[b]) out[v] = static_cast<int>(b);
  }
  return out;
}

OrderedPartition OrderedPartition::reversed() const {
  auto blocks = blocks_;
  std::reverse(blocks.begin(), blocks.end());
  return OrderedPartition(std::move(blocks));
}

bool canonical_less(const OrderedPartition& a, const OrderedPartition& b,
                    std::size_t m) {
  return a.levels(m) < b.levels(m);
}

// ---------------------------------------------------------------------------

Rational partition_score(const WeightedTournament& t, const OrderedPartition& p) {
  const auto level = p.levels(t.size());
  Rational total = 0;
  const std::size_t m = t.size();
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      if (level[i] < level[j]) {
        total += t.stored(i, j);
      } else if (level[i] > level[j]) {
        total -= t.stored(i, j);
      }
    }
  }
  return total;
}

Rational borda_score(const WeightedTournament& t, VertexId x) {
  if (x >= t.size()) throw ValidationError("vertex index out of range");
  Rational total = 0;
  for (VertexId y = 0; y < t.size(); ++y) {
    if (y != x) total += t.weight(x, y);
  }
  return total;
}

std::vector<Rational> borda_scores(const WeightedTournament& t) {
  const std::size_t m = t.size();
  std::vector<Rational> beta(m, Rational(0));
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      beta[i] += t.stored(i, j);
      beta[j] -= t.stored(i, j);
    }
  }
  return beta;
}

bool is_quantitatively_transitive(const WeightedTournament& t) {
  const std::size_t m = t.size();
  for (VertexId x = 0; x < m; ++x) {
    for (VertexId y = 0; y < m; ++y) {
      if (y == x) continue;
      for (VertexId z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        if (t.weight(x, y) + t.weight(y, z) != t.weight(x, z)) return false;
      }
    }
  }
  return true;
}

bool is_qualitatively_transitive(const WeightedTournament& t) {
  const std::size_t m = t.size();
  for (VertexId x = 0; x < m; ++x) {
    for (VertexId y = 0; y < m; ++y) {
      if (y == x || t.weight(x, y) <= 0) continue;
      for (VertexId z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        if (t.weight(y, z) > 0 && t.weight(x, z) <= 0) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<Rational>> difference_generator(
    const WeightedTournament& t) {
  const std::size_t m = t.size();
  auto gamma = borda_scores(t);
  for (auto& g : gamma) g /= static_cast<long>(m);
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      if (t.stored(i, j) != gamma[i] - gamma[j]) return std::nullopt;
    }
  }
  return gamma;
}

}  // namespace tourney
