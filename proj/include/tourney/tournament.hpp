#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tourney/rational.hpp"

namespace tourney {

using VertexId = std::size_t;

/// A complete tournament with exact antisymmetric arc weights.
///
/// One arc is stored per unordered pair, oriented from the earlier vertex to
/// the later vertex of the vertex list. Lookups in the opposite direction
/// return the negated weight (the reversal convention), so callers never see
/// the stored orientation unless they ask for it.
class WeightedTournament {
 public:
  WeightedTournament() = default;

  /// All-zero tournament on the given distinct vertex names.
  explicit WeightedTournament(std::vector<std::string> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& name(VertexId v) const { return vertices_.at(v); }

  bool contains(const std::string& name) const;
  /// Throws ValidationError for an unknown name.
  VertexId index_of(const std::string& name) const;

  /// weight(x, y) under the reversal convention. x != y.
  Rational weight(VertexId x, VertexId y) const;
  Rational weight(const std::string& x, const std::string& y) const;

  /// Sets w(x, y) = value, i.e. stores -value when (y, x) is the stored arc.
  void set_weight(VertexId x, VertexId y, Rational value);
  void set_weight(const std::string& x, const std::string& y, Rational value);

  /// Stored weights, arc (i, j) with i < j, in row-major upper-triangle order.
  std::span<const Rational> stored_weights() const noexcept { return weights_; }
  const Rational& stored(VertexId i, VertexId j) const {
    return weights_[arc_index(i, j)];
  }
  std::size_t arc_count() const noexcept { return weights_.size(); }
  std::size_t arc_index(VertexId i, VertexId j) const noexcept {
    return i * size() - i * (i + 1) / 2 + (j - i - 1);
  }

  bool all_zero() const;

  friend bool operator==(const WeightedTournament&,
                         const WeightedTournament&) = default;

 private:
  void check_pair(VertexId x, VertexId y) const;

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Rational> weights_;
};

/// Same vertex list, weights given as a flat upper-triangle vector.
WeightedTournament with_weights(const WeightedTournament& shape,
                                std::vector<Rational> stored);

/// Blocks of vertex ids ordered top (first) to bottom (last).
///
/// Blocks are nonempty, pairwise disjoint, and kept sorted internally. The
/// same type doubles as a weak order in the voting code.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  explicit OrderedPartition(std::vector<std::vector<VertexId>> blocks);

  /// Builds from per-vertex level labels (0 = top). Unused levels are
  /// dropped; relative order is preserved.
  static OrderedPartition from_levels(std::span<const int> levels);

  const std::vector<std::vector<VertexId>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t vertex_count() const noexcept;

  /// Level (block index) of every vertex 0..m-1. Throws ValidationError if
  /// the blocks do not cover exactly 0..m-1.
  std::vector<int> levels(std::size_t m) const;
  bool covers(std::size_t m) const;

  /// Blocks in reverse order.
  OrderedPartition reversed() const;

  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;

 private:
  std::vector<std::vector<VertexId>> blocks_;
};

/// Canonical witness order: lexicographic on the level vector.
bool canonical_less(const OrderedPartition& a, const OrderedPartition& b,
                    std::size_t m);

/// Sum over x strictly above y of w(x, y); sideways pairs contribute nothing.
Rational partition_score(const WeightedTournament& t, const OrderedPartition& p);

/// Sum over y != x of w(x, y).
Rational borda_score(const WeightedTournament& t, VertexId x);
std::vector<Rational> borda_scores(const WeightedTournament& t);

/// w(x,y) + w(y,z) == w(x,z) for all distinct x, y, z.
bool is_quantitatively_transitive(const WeightedTournament& t);

/// w(x,y) > 0 and w(y,z) > 0 imply w(x,z) > 0.
bool is_qualitatively_transitive(const WeightedTournament& t);

/// Scaled Borda scores when they generate the weights as differences,
/// otherwise nullopt.
std::optional<std::vector<Rational>> difference_generator(
    const WeightedTournament& t);

}  // namespace tourney
