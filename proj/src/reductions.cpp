#include "tourney/reductions.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "tourney/errors.hpp"

namespace tourney {

CutInstance::CutInstance(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)) {
  for (VertexId i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      throw ValidationError("duplicate vertex '" + vertices_[i] + "'");
    }
  }
  const std::size_t n = vertices_.size();
  weights_.assign(n * (n - (n > 0 ? 1 : 0)) / 2, 0);
}

VertexId CutInstance::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ValidationError("unknown vertex '" + name + "'");
  return it->second;
}

std::size_t CutInstance::pair_index(VertexId a, VertexId b) const {
  if (a >= size() || b >= size()) throw ValidationError("vertex index out of range");
  if (a == b) throw ValidationError("no self-loops in a cut instance");
  if (a > b) std::swap(a, b);
  return a * size() - a * (a + 1) / 2 + (b - a - 1);
}

std::int64_t CutInstance::weight(VertexId a, VertexId b) const {
  return weights_[pair_index(a, b)];
}

void CutInstance::set_weight(VertexId a, VertexId b, std::int64_t w) {
  if (w < 0) throw ValidationError("edge weights must be nonnegative");
  weights_[pair_index(a, b)] = w;
}

void CutInstance::set_weight(const std::string& a, const std::string& b, std::int64_t w) {
  set_weight(index_of(a), index_of(b), w);
}

std::int64_t CutInstance::total_weight() const {
  std::int64_t total = 0;
  for (auto w : weights_) total += w;
  return total;
}

std::vector<std::pair<VertexId, VertexId>> CutInstance::positive_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a = 0; a < size(); ++a) {
    for (VertexId b = a + 1; b < size(); ++b) {
      if (weight(a, b) > 0) out.emplace_back(a, b);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> piece_labels(std::size_t n, const Pieces& parts) {
  std::vector<int> label(n, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (VertexId v : parts[p]) {
      if (v >= n) throw ValidationError("partition names a vertex outside the graph");
      if (label[v] != -1) throw ValidationError("partition pieces overlap");
      label[v] = static_cast<int>(p);
    }
  }
  for (int l : label) {
    if (l == -1) throw ValidationError("partition does not cover every vertex");
  }
  return label;
}

std::size_t nonempty_count(const Pieces& parts) {
  return static_cast<std::size_t>(std::count_if(
      parts.begin(), parts.end(), [](const auto& p) { return !p.empty(); }));
}

// Score of arc u -> v when u sits on level lu and v on level lv (0 = top).
int arc_sign(int lu, int lv) { return lu < lv ? 1 : (lu > lv ? -1 : 0); }

}  // namespace

std::int64_t cut_score(const CutInstance& g, const Pieces& parts) {
  const auto label = piece_labels(g.size(), parts);
  std::int64_t total = 0;
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) {
      if (label[a] != label[b]) total += g.weight(a, b);
    }
  }
  return total;
}

CutResult solve_cut_bruteforce(const CutInstance& g, std::size_t pieces,
                               const SolveOptions& options) {
  if (pieces == 0) throw ValidationError("piece count must be positive");
  const std::size_t n = g.size();
  if (n == 0) throw ValidationError("graph has no vertices");
  const std::size_t levels = std::min(pieces, n);
  if (labeling_count(levels, n) > options.guard) {
    throw GuardExceeded("cut enumeration over " + std::to_string(levels) + "^" +
                            std::to_string(n) + " labelings exceeds the guard of " +
                            std::to_string(options.guard),
                        options.guard);
  }
  // Restricted growth strings: each unordered partition appears once.
  CutResult result;
  bool found = false;
  std::vector<int> label(n, 0);
  auto record = [&] {
    std::int64_t score = 0;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (label[a] != label[b]) score += g.weight(a, b);
      }
    }
    if (!found || score > result.optimum) {
      found = true;
      result.optimum = score;
      result.witnesses.clear();
      result.truncated = false;
    } else if (score < result.optimum) {
      return;
    } else if (!options.all_ties) {
      return;
    }
    if (result.witnesses.size() >= options.witness_cap) {
      result.truncated = true;
      return;
    }
    int top = *std::max_element(label.begin(), label.end());
    Pieces parts(static_cast<std::size_t>(top + 1));
    for (VertexId v = 0; v < n; ++v) parts[static_cast<std::size_t>(label[v])].push_back(v);
    result.witnesses.push_back(std::move(parts));
  };
  auto rec = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == n) {
      if (!options.exact_k || static_cast<std::size_t>(used) == levels) record();
      return;
    }
    const int limit = std::min(used + 1, static_cast<int>(levels));
    for (int l = 0; l < limit; ++l) {
      label[i] = l;
      self(self, i + 1, std::max(used, l + 1));
    }
  };
  label[0] = 0;
  rec(rec, 1, 1);
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::string direction_name(const CutInstance& g, VertexId a, VertexId b) {
  return "d(" + g.name(a) + "," + g.name(b) + ")";
}

}  // namespace

GadgetMap build_hg(const CutInstance& g) {
  const auto edges = g.positive_edges();
  std::vector<std::string> names = g.vertices();
  for (auto [a, b] : edges) {
    names.push_back(direction_name(g, a, b));
    names.push_back(direction_name(g, b, a));
  }
  GadgetMap gm;
  gm.kind = GadgetKind::hg;
  gm.source = g;
  gm.tournament = WeightedTournament(std::move(names));
  gm.reference_order = g.vertices();
  for (VertexId v = 0; v < g.size(); ++v) gm.ordinary.push_back({v});

  VertexId next = g.size();
  for (auto [a, b] : edges) {
    const VertexId dab = next++;
    const VertexId dba = next++;
    gm.direction[{a, b}] = dab;
    gm.direction[{b, a}] = dba;
    const Rational w(g.weight(a, b));
    auto& t = gm.tournament;
    t.set_weight(a, dab, w);
    t.set_weight(dab, b, w);
    t.set_weight(b, dba, w);
    t.set_weight(dba, a, w);
  }
  return gm;
}

OrderedPartition lift_partition_hg(const GadgetMap& gm, const Pieces& parts,
                                   std::size_t levels) {
  if (gm.kind != GadgetKind::hg) throw ValidationError("not an H_G gadget");
  if (levels < 2) throw ValidationError("lifting needs at least 2 levels");
  const auto& g = gm.source;
  const auto label = piece_labels(g.size(), parts);
  if (nonempty_count(parts) != parts.size() || parts.size() < 2 || parts.size() > levels) {
    throw ValidationError("lift needs between 2 and " + std::to_string(levels) +
                          " nonempty pieces");
  }
  const int L = static_cast<int>(levels);
  std::vector<int> level(gm.tournament.size(), 0);
  for (VertexId v = 0; v < g.size(); ++v) level[gm.ordinary[v][0]] = label[v];

  for (auto [a, b] : g.positive_edges()) {
    const VertexId dab = gm.direction.at({a, b});
    const VertexId dba = gm.direction.at({b, a});
    const int la = label[a];
    const int lb = label[b];
    if (la == lb) continue;  // uncut: both direction vertices stay on top
    bool placed = false;
    for (int x = 0; x < L && !placed; ++x) {
      for (int y = 0; y < L && !placed; ++y) {
        const int net = arc_sign(la, x) + arc_sign(x, lb) + arc_sign(lb, y) + arc_sign(y, la);
        if (net == 1) {
          level[dab] = x;
          level[dba] = y;
          placed = true;
        }
      }
    }
    if (!placed) {
      throw std::logic_error("no direction placement gives a +w 4-cycle");
    }
  }
  return OrderedPartition::from_levels(level);
}

Pieces project_partition_hg(const GadgetMap& gm, const OrderedPartition& p,
                            std::size_t levels) {
  if (gm.kind != GadgetKind::hg) throw ValidationError("not an H_G gadget");
  if (p.block_count() > levels) {
    throw ValidationError("ordered partition has " + std::to_string(p.block_count()) +
                          " blocks; at most " + std::to_string(levels) + " allowed");
  }
  const auto level = p.levels(gm.tournament.size());
  Pieces pieces(p.block_count());
  for (VertexId v = 0; v < gm.source.size(); ++v) {
    pieces[static_cast<std::size_t>(level[gm.ordinary[v][0]])].push_back(v);
  }
  std::erase_if(pieces, [](const auto& piece) { return piece.empty(); });
  return pieces;
}

ClubAugmentation add_club_vertex(const CutInstance& g, const std::string& club) {
  if (g.contains(club)) {
    throw ValidationError("club vertex name '" + club + "' is already used");
  }
  auto names = g.vertices();
  names.push_back(club);
  ClubAugmentation out{CutInstance(std::move(names)), 1 + g.total_weight()};
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) out.graph.set_weight(a, b, g.weight(a, b));
    out.graph.set_weight(a, g.size(), out.sigma);
  }
  return out;
}

// ---------------------------------------------------------------------------

GadgetMap build_fg(const CutInstance& g) {
  const std::size_t n = g.size();
  if (n == 0) throw ValidationError("F_G needs at least one vertex");
  const auto edges = g.positive_edges();
  const Rational C(1 + g.total_weight());
  const Rational n4 = Rational(static_cast<long>(n)) * n * n * n;
  const Rational epsilon = Rational(1) / (72 * n4);

  // Natural construction order: quadruples, then direction pairs.
  std::vector<std::string> natural;
  for (VertexId v = 0; v < n; ++v) {
    for (int q = 1; q <= 4; ++q) natural.push_back(g.name(v) + "." + std::to_string(q));
  }
  auto quad = [](VertexId v, int q) { return 4 * v + static_cast<std::size_t>(q - 1); };
  struct Arc {
    std::size_t from, to;
    Rational weight;
  };
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) {
    arcs.push_back({quad(v, 1), quad(v, 2), C});
    arcs.push_back({quad(v, 2), quad(v, 3), 2 * C});
    arcs.push_back({quad(v, 3), quad(v, 4), C});
  }
  std::vector<std::pair<std::size_t, std::size_t>> direction_natural;
  for (auto [a, b] : edges) {
    const std::size_t dab = natural.size();
    natural.push_back(direction_name(g, a, b));
    const std::size_t dba = natural.size();
    natural.push_back(direction_name(g, b, a));
    direction_natural.emplace_back(dab, dba);
    const Rational w(g.weight(a, b));
    arcs.push_back({quad(a, 2), dab, w});
    arcs.push_back({dab, quad(b, 2), w});
    arcs.push_back({quad(b, 3), dba, w});
    arcs.push_back({dba, quad(a, 3), w});
  }

  // Kahn's algorithm, ties broken by construction order.
  const std::size_t total = natural.size();
  std::vector<std::vector<std::size_t>> out_edges(total);
  std::vector<std::size_t> indegree(total, 0);
  for (const auto& arc : arcs) {
    out_edges[arc.from].push_back(arc.to);
    ++indegree[arc.to];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < total; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> position(total);
  std::vector<std::string> ordered;
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    position[v] = ordered.size();
    ordered.push_back(natural[v]);
    for (std::size_t u : out_edges[v]) {
      if (--indegree[u] == 0) ready.push(u);
    }
  }
  if (ordered.size() != total) {
    throw std::logic_error("placement/adjustment digraph has a cycle");
  }

  GadgetMap gm;
  gm.kind = GadgetKind::fg;
  gm.source = g;
  gm.tournament = WeightedTournament(ordered);
  gm.C = C;
  gm.epsilon = epsilon;
  gm.reference_order = g.vertices();
  std::vector<bool> structural(gm.tournament.arc_count(), false);
  for (const auto& arc : arcs) {
    const VertexId from = position[arc.from];
    const VertexId to = position[arc.to];
    gm.tournament.set_weight(from, to, arc.weight);
    structural[gm.tournament.arc_index(std::min(from, to), std::max(from, to))] = true;
  }
  for (VertexId i = 0; i < total; ++i) {
    for (VertexId j = i + 1; j < total; ++j) {
      if (structural[gm.tournament.arc_index(i, j)]) continue;
      gm.tournament.set_weight(i, j, epsilon);
      ++gm.tiny_arcs;
    }
  }
  if (fg_tiny_total(gm) >= Rational(1, 2)) {
    throw std::logic_error("tiny arcs total " + to_string(fg_tiny_total(gm)) +
                           ", not below 1/2");
  }
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> q;
    for (int i = 1; i <= 4; ++i) q.push_back(position[quad(v, i)]);
    gm.ordinary.push_back(std::move(q));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    gm.direction[{a, b}] = position[direction_natural[e].first];
    gm.direction[{b, a}] = position[direction_natural[e].second];
  }
  return gm;
}

OrderedPartition place_fg(const GadgetMap& gm, const std::vector<bool>& up) {
  if (gm.kind != GadgetKind::fg) throw ValidationError("not an F_G gadget");
  const auto& g = gm.source;
  if (up.size() != g.size()) throw ValidationError("placement vector has the wrong length");
  std::vector<int> level(gm.tournament.size(), 0);
  static constexpr int kUp[4] = {0, 0, 1, 2};
  static constexpr int kDown[4] = {0, 1, 2, 2};
  for (VertexId v = 0; v < g.size(); ++v) {
    for (int q = 0; q < 4; ++q) level[gm.ordinary[v][q]] = up[v] ? kUp[q] : kDown[q];
  }
  for (auto [a, b] : g.positive_edges()) {
    const int a2 = level[gm.ordinary[a][1]];
    const int a3 = level[gm.ordinary[a][2]];
    const int b2 = level[gm.ordinary[b][1]];
    const int b3 = level[gm.ordinary[b][2]];
    int best = -5;
    int bx = 0;
    int by = 0;
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        const int net = arc_sign(a2, x) + arc_sign(x, b2) + arc_sign(b3, y) + arc_sign(y, a3);
        if (net > best) {
          best = net;
          bx = x;
          by = y;
        }
      }
    }
    level[gm.direction.at({a, b})] = bx;
    level[gm.direction.at({b, a})] = by;
  }
  return OrderedPartition::from_levels(level);
}

OrderedPartition lift_bipartition_fg(const GadgetMap& gm, const Pieces& parts) {
  if (parts.size() != 2 || nonempty_count(parts) != 2) {
    throw ValidationError("lift needs a bipartition into two nonempty pieces");
  }
  const auto label = piece_labels(gm.source.size(), parts);
  std::vector<bool> up(gm.source.size());
  for (VertexId v = 0; v < up.size(); ++v) up[v] = label[v] == 0;
  return place_fg(gm, up);
}

Bipartition project_fg_partition(const GadgetMap& gm, const OrderedPartition& p) {
  if (gm.kind != GadgetKind::fg) throw ValidationError("not an F_G gadget");
  if (p.block_count() > 3) throw ValidationError("expected an ordered tripartition");
  const auto level = p.levels(gm.tournament.size());
  Bipartition out;
  for (VertexId v = 0; v < gm.source.size(); ++v) {
    const auto& q = gm.ordinary[v];
    const std::vector<int> got{level[q[0]], level[q[1]], level[q[2]], level[q[3]]};
    if (got == std::vector<int>{0, 0, 1, 2}) {
      out.up.push_back(v);
    } else if (got == std::vector<int>{0, 1, 2, 2}) {
      out.down.push_back(v);
    } else {
      throw ValidationError("quadruple of '" + gm.source.name(v) +
                            "' is placed neither up nor down");
    }
  }
  return out;
}

Rational fg_placement_value(const GadgetMap& gm) {
  return 3 * Rational(static_cast<long>(gm.source.size())) * gm.C;
}

Rational fg_tiny_total(const GadgetMap& gm) {
  return Rational(static_cast<long>(gm.tiny_arcs)) * gm.epsilon;
}

// ---------------------------------------------------------------------------

IdentityCheck verify_theorem1(const CutInstance& g, const SolveOptions& options) {
  SolveOptions one = options;
  one.all_ties = false;
  const auto cut = solve_cut_bruteforce(g, 3, one);
  const auto gm = build_hg(g);
  const auto op = solve_bruteforce(gm.tournament, 3, one);
  IdentityCheck check{"max-tricut(G) = max-3OP(H_G)", Rational(cut.optimum), op.optimum,
                      false, ""};
  check.pass = check.lhs == check.rhs;
  return check;
}

IdentityCheck verify_club(const CutInstance& g, const SolveOptions& options) {
  SolveOptions one = options;
  one.all_ties = false;
  const auto star = add_club_vertex(g);
  const auto tricut = solve_cut_bruteforce(star.graph, 3, one);
  const auto cut = solve_cut_bruteforce(g, 2, one);
  IdentityCheck check{"max-tricut(G*) = |V| sigma + max-cut(G)", Rational(tricut.optimum),
                      Rational(static_cast<long>(g.size()) * star.sigma + cut.optimum),
                      false, "sigma " + std::to_string(star.sigma)};
  check.pass = check.lhs == check.rhs;
  return check;
}

IdentityCheck verify_theorem6(const CutInstance& g, const SolveOptions& options) {
  SolveOptions one = options;
  one.all_ties = false;
  const auto gm = build_fg(g);
  const auto cut = solve_cut_bruteforce(g, 2, one);
  const Rational target = fg_placement_value(gm) + cut.optimum;
  IdentityCheck check{"round(max-3OP(F_G)) = 3|V|C + max-cut(G)", 0, target, false, ""};

  const bool transitive = is_qualitatively_transitive(gm.tournament);
  const bool tiny_ok = fg_tiny_total(gm) < Rational(1, 2);
  std::string shape = std::string("transitive ") + (transitive ? "yes" : "no") +
                      ", tiny total " + to_string(fg_tiny_total(gm));

  if (labeling_count(3, gm.tournament.size()) <= options.guard) {
    const auto op = solve_bruteforce(gm.tournament, 3, one);
    check.lhs = Rational(round_nearest(op.optimum));
    bool projected_ok = true;
    try {
      const auto bp = project_fg_partition(gm, op.witnesses.front());
      projected_ok = cut_score(g, {bp.up, bp.down}) >= cut.optimum;
    } catch (const ValidationError&) {
      projected_ok = false;
    }
    check.detail = "exhaustive; " + shape + "; optimum " + to_string(op.optimum);
    check.pass = transitive && tiny_ok && projected_ok && check.lhs == check.rhs;
    return check;
  }

  // Too large to enumerate: best lift over every nonempty bipartition.
  if (g.size() < 2) throw ValidationError("F_G lift needs at least 2 vertices");
  Rational best = 0;
  bool first = true;
  bool lifts_ok = true;
  const std::size_t n = g.size();
  for (unsigned long long mask = 1; mask + 1 < (1ULL << n); ++mask) {
    if (mask & 1ULL) continue;  // each bipartition once: vertex 0 goes down
    Pieces parts(2);
    for (VertexId v = 0; v < n; ++v) parts[(mask >> v) & 1ULL ? 0 : 1].push_back(v);
    const Rational score = partition_score(gm.tournament, lift_bipartition_fg(gm, parts));
    const Rational expect = fg_placement_value(gm) + cut_score(g, parts);
    if (Rational(round_nearest(score)) != expect) lifts_ok = false;
    if (first || score > best) best = score;
    first = false;
  }
  check.lhs = Rational(round_nearest(best));
  check.detail = "lift bound (guard too small for exhaustive search); " + shape;
  check.pass = transitive && tiny_ok && lifts_ok && check.lhs == check.rhs;
  return check;
}

}  // namespace tourney
