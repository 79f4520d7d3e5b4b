#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tourney/profiles.hpp"
#include "tourney/reductions.hpp"
#include "tourney/tournament.hpp"

// Line-oriented text formats. Blank lines and lines starting with '#' are
// skipped everywhere; tokens are whitespace-separated, so vertex names may not
// contain whitespace or the separators '>', '|', '*', '×'.

namespace tourney {

/// `tournament m`, m name lines, then `x y p/q` arc lines. Arcs may be given
/// in either orientation; missing arcs weigh 0; repeats are an error.
WeightedTournament parse_tournament(std::string_view text,
                                    const std::string& file = "<input>");
/// Every stored arc, including zeros, so the output re-parses exactly.
std::string format_tournament(const WeightedTournament& t);

/// `a b > c > d e`
OrderedPartition parse_partition(std::string_view line,
                                 const std::vector<std::string>& names,
                                 const std::string& file = "<input>",
                                 std::size_t line_no = 1);
std::string format_partition(const OrderedPartition& p,
                             const std::vector<std::string>& names);

/// `profile m`, m name lines, then ballots `a b | c | d × 3` (or `* 3`).
Profile parse_profile(std::string_view text, const std::string& file = "<input>");
std::string format_profile(const Profile& p);

/// `graph n`, n name lines, then `a b w` with integer w >= 0.
CutInstance parse_graph(std::string_view text, const std::string& file = "<input>");
std::string format_graph(const CutInstance& g);

/// Human-readable record of a reduction: vertex classes and constants.
struct GadgetSidecar {
  std::string gadget;
  std::vector<std::string> reference_order;
  /// source vertex -> its gadget vertices
  std::vector<std::pair<std::string, std::vector<std::string>>> ordinary;
  /// (a, b, d_ab)
  std::vector<std::vector<std::string>> direction;
  std::optional<std::string> club;
  std::optional<Rational> C;
  std::optional<Rational> epsilon;
  std::optional<std::int64_t> sigma;

  friend bool operator==(const GadgetSidecar&, const GadgetSidecar&) = default;
};

GadgetSidecar make_sidecar(const GadgetMap& gm);
GadgetSidecar make_club_sidecar(const CutInstance& source, const ClubAugmentation& club,
                                const std::string& club_name = "club");
GadgetSidecar parse_sidecar(std::string_view text, const std::string& file = "<input>");
std::string format_sidecar(const GadgetSidecar& s);

/// Whole file as a string; ValidationError when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace tourney
