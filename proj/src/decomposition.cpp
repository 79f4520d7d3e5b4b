#include "tourney/decomposition.hpp"

#include <algorithm>
#include <vector>

#include "tourney/errors.hpp"

namespace tourney {

WeightedTournament cocycle_component(const WeightedTournament& t) {
  const std::size_t m = t.size();
  WeightedTournament out(t.vertices());
  if (m < 2) return out;
  const auto beta = borda_scores(t);
  const Rational scale(1, static_cast<long>(m));
  for (VertexId i = 0; i < m; ++i) {
    for (VertexId j = i + 1; j < m; ++j) {
      out.set_weight(i, j, (beta[i] - beta[j]) * scale);
    }
  }
  return out;
}

WeightedTournament cycle_component(const WeightedTournament& t) {
  const auto co = cocycle_component(t);
  std::vector<Rational> stored(t.arc_count());
  for (std::size_t k = 0; k < stored.size(); ++k) {
    stored[k] = t.stored_weights()[k] - co.stored_weights()[k];
  }
  return with_weights(t, std::move(stored));
}

Decomposition decompose(const WeightedTournament& t) {
  auto co = cocycle_component(t);
  std::vector<Rational> stored(t.arc_count());
  for (std::size_t k = 0; k < stored.size(); ++k) {
    stored[k] = t.stored_weights()[k] - co.stored_weights()[k];
  }
  return Decomposition{with_weights(t, std::move(stored)), std::move(co)};
}

bool is_purely_acyclic(const WeightedTournament& t) {
  return cycle_component(t).all_zero();
}

bool is_purely_cyclic(const WeightedTournament& t) {
  return cocycle_component(t).all_zero();
}

Rational inner_product(const WeightedTournament& a, const WeightedTournament& b) {
  if (a.vertices() != b.vertices()) {
    throw ValidationError("inner product of tournaments on different vertex lists");
  }
  Rational total = 0;
  auto wa = a.stored_weights();
  auto wb = b.stored_weights();
  for (std::size_t k = 0; k < wa.size(); ++k) total += wa[k] * wb[k];
  return total;
}

Rational norm_squared(const WeightedTournament& t) { return inner_product(t, t); }

WeightedTournament basic_cycle(const WeightedTournament& shape,
                               std::span<const VertexId> cycle) {
  if (cycle.size() < 3) {
    throw ValidationError("basic cycle needs at least 3 vertices");
  }
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("basic cycle repeats a vertex");
  }
  WeightedTournament out(shape.vertices());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.set_weight(cycle[i], cycle[(i + 1) % cycle.size()], Rational(1));
  }
  return out;
}

WeightedTournament basic_cycle(const WeightedTournament& shape,
                               std::span<const std::string> cycle) {
  std::vector<VertexId> ids;
  ids.reserve(cycle.size());
  for (const auto& name : cycle) ids.push_back(shape.index_of(name));
  return basic_cycle(shape, std::span<const VertexId>(ids));
}

WeightedTournament basic_cocycle(const WeightedTournament& shape,
                                 VertexId source) {
  if (source >= shape.size()) throw ValidationError("unknown vertex for basic cocycle");
  WeightedTournament out(shape.vertices());
  for (VertexId y = 0; y < shape.size(); ++y) {
    if (y != source) out.set_weight(source, y, Rational(1));
  }
  return out;
}

}  // namespace tourney
