#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tourney/solvers.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Complete undirected graph with nonnegative integer edge weights; absent
/// edges weigh 0.
class CutInstance {
 public:
  CutInstance() = default;
  explicit CutInstance(std::vector<std::string> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::string& name(VertexId v) const { return vertices_.at(v); }
  VertexId index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  std::int64_t weight(VertexId a, VertexId b) const;
  void set_weight(VertexId a, VertexId b, std::int64_t w);
  void set_weight(const std::string& a, const std::string& b, std::int64_t w);

  std::int64_t total_weight() const;
  /// Pairs {a, b}, a < b, with positive weight, in row-major order.
  std::vector<std::pair<VertexId, VertexId>> positive_edges() const;

  friend bool operator==(const CutInstance&, const CutInstance&) = default;

 private:
  std::size_t pair_index(VertexId a, VertexId b) const;

  std::vector<std::string> vertices_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::int64_t> weights_;
};

/// Unordered partition of a vertex set (piece order is incidental).
using Pieces = std::vector<std::vector<VertexId>>;

/// Total weight of edges whose endpoints lie in different pieces. Empty
/// pieces are ignored; overlapping or missing vertices are an error.
std::int64_t cut_score(const CutInstance& g, const Pieces& parts);

struct CutResult {
  std::int64_t optimum = 0;
  std::vector<Pieces> witnesses;
  bool truncated = false;
};

/// Max cut over partitions into at most `pieces` nonempty pieces.
CutResult solve_cut_bruteforce(const CutInstance& g, std::size_t pieces,
                               const SolveOptions& options = {});

enum class GadgetKind { hg, fg };

/// A reduction's tournament plus the bookkeeping that ties it back to the
/// source graph.
struct GadgetMap {
  GadgetKind kind = GadgetKind::hg;
  CutInstance source;
  WeightedTournament tournament;
  /// Gadget vertices of each source vertex: one for H_G, the quadruple
  /// (a1, a2, a3, a4) for F_G.
  std::vector<std::vector<VertexId>> ordinary;
  /// (a, b) -> d_ab for every positive-weight source edge, both orders.
  std::map<std::pair<VertexId, VertexId>, VertexId> direction;
  Rational C = 0;
  Rational epsilon = 0;
  std::vector<std::string> reference_order;
  std::size_t tiny_arcs = 0;
};

/// 4-cycle gadget a -> d_ab -> b -> d_ba -> a per positive edge; all other
/// pairs weigh 0. The result is purely cyclic.
GadgetMap build_hg(const CutInstance& g);

/// Places the source pieces on levels 0, 1, ... and every cut edge's
/// direction vertices so its 4-cycle contributes exactly +w; direction
/// vertices of uncut edges go to the top level. Needs 2..levels nonempty
/// pieces.
OrderedPartition lift_partition_hg(const GadgetMap& gm, const Pieces& parts,
                                   std::size_t levels = 3);
/// Restricts p to ordinary vertices and forgets the order.
Pieces project_partition_hg(const GadgetMap& gm, const OrderedPartition& p,
                            std::size_t levels = 3);

inline OrderedPartition lift_tripartition_hg(const GadgetMap& gm, const Pieces& parts) {
  return lift_partition_hg(gm, parts, 3);
}
inline Pieces project_tripartition_hg(const GadgetMap& gm, const OrderedPartition& p) {
  return project_partition_hg(gm, p, 3);
}

struct ClubAugmentation {
  CutInstance graph;
  std::int64_t sigma = 0;
};

/// Adds a vertex joined to every original vertex at weight
/// sigma = 1 + total weight.
ClubAugmentation add_club_vertex(const CutInstance& g, const std::string& club = "club");

/// Transitive gadget: per vertex a chain a1 -> a2 -> a3 -> a4 weighted
/// C, 2C, C; per positive edge a < b the adjustment arcs a2 -> d_ab -> b2 and
/// b3 -> d_ba -> a3 weighted w; every other pair gets epsilon along one
/// topological order of those arcs. The vertex list is that order.
GadgetMap build_fg(const CutInstance& g);

/// Quadruples of `up` vertices go up (a1,a2 | a3 | a4), the rest down
/// (a1 | a2 | a3,a4); direction vertices maximize the adjustment arcs.
OrderedPartition place_fg(const GadgetMap& gm, const std::vector<bool>& up);

/// parts[0] goes up, parts[1] down; both pieces must be nonempty.
OrderedPartition lift_bipartition_fg(const GadgetMap& gm, const Pieces& parts);

struct Bipartition {
  std::vector<VertexId> up;
  std::vector<VertexId> down;
};

/// Reads each quadruple's orientation. Throws ValidationError when some
/// quadruple is neither up nor down.
Bipartition project_fg_partition(const GadgetMap& gm, const OrderedPartition& p);

/// Placement value 3|V|C that every up/down placement earns.
Rational fg_placement_value(const GadgetMap& gm);

/// (#tiny arcs) * epsilon.
Rational fg_tiny_total(const GadgetMap& gm);

/// Result of a runnable identity check between a cut optimum and a
/// tournament optimum.
struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;
};

/// max-tricut(G) == max-3OP(H_G), both exhaustive.
IdentityCheck verify_theorem1(const CutInstance& g, const SolveOptions& options = {});

/// max-tricut(G*) == |V| sigma + max-cut(G).
IdentityCheck verify_club(const CutInstance& g, const SolveOptions& options = {});

/// round(max-3OP(F_G)) == 3|V|C + max-cut(G) by exhaustive search when the
/// guard allows, otherwise through the best lifted bipartition. Also checks
/// transitivity and the tiny-arc bound.
IdentityCheck verify_theorem6(const CutInstance& g, const SolveOptions& options = {});

}  // namespace tourney
