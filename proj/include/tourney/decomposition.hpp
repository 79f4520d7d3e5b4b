#pragma once

#include <span>
#include <string>

#include "tourney/tournament.hpp"

namespace tourney {

/// Orthogonal split of a weight vector into its cyclic part and its
/// cocyclic (gradient) part. Both share the source's vertices and stored
/// orientations; `cycle + cocycle` reproduces the source arc by arc.
struct Decomposition {
  WeightedTournament cycle;
  WeightedTournament cocycle;
};

/// w_cocycle(x, y) = (beta(x) - beta(y)) / m, the boundary map applied to w.
WeightedTournament cocycle_component(const WeightedTournament& t);

/// w - w_cocycle.
WeightedTournament cycle_component(const WeightedTournament& t);

Decomposition decompose(const WeightedTournament& t);

/// Exact test that w has no cyclic part.
bool is_purely_acyclic(const WeightedTournament& t);
/// Exact test that w has no cocyclic part.
bool is_purely_cyclic(const WeightedTournament& t);

/// Standard inner product over the stored arcs. Throws ValidationError
/// when the vertex lists differ.
Rational inner_product(const WeightedTournament& a, const WeightedTournament& b);

Rational norm_squared(const WeightedTournament& t);

/// +1 around the vertex cycle c[0] -> c[1] -> ... -> c[r-1] -> c[0],
/// 0 elsewhere. Needs at least 3 distinct vertices.
WeightedTournament basic_cycle(const WeightedTournament& shape,
                               std::span<const VertexId> cycle);
WeightedTournament basic_cycle(const WeightedTournament& shape,
                               std::span<const std::string> cycle);

/// +1 on every arc out of `source`, 0 on arcs not touching it.
WeightedTournament basic_cocycle(const WeightedTournament& shape, VertexId source);

}  // namespace tourney
