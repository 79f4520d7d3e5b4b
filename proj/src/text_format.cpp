#include "tourney/text_format.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "tourney/errors.hpp"

namespace tourney {

ParseError::ParseError(std::string file, std::size_t line, std::string expected,
                       std::string found)
    : std::runtime_error(file + ":" + std::to_string(line) + ": expected " + expected +
                         ", found '" + found + "'"),
      file_(std::move(file)),
      line_(line),
      expected_(std::move(expected)) {}

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
  std::string raw;
};

class LineReader {
 public:
  LineReader(std::string_view text, std::string file) : file_(std::move(file)) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string raw(text.substr(pos, end - pos));
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::istringstream in(raw);
      Line line{number, {}, raw};
      for (std::string tok; in >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty() && line.tokens.front().front() != '#') {
        lines_.push_back(std::move(line));
      }
      pos = end + 1;
    }
    last_line_ = number;
  }

  bool done() const { return next_ >= lines_.size(); }
  const Line& next(const std::string& expected) {
    if (done()) throw ParseError(file_, last_line_, expected, "end of file");
    return lines_[next_++];
  }
  [[noreturn]] void fail(const Line& line, const std::string& expected,
                         const std::string& found) const {
    throw ParseError(file_, line.number, expected, found);
  }
  [[noreturn]] void fail(const Line& line, const std::string& expected) const {
    fail(line, expected, line.raw);
  }
  const std::string& file() const { return file_; }

 private:
  std::string file_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

bool reserved_name(const std::string& s) {
  if (s.empty() || s.front() == '#') return true;
  for (std::string_view bad : {">", "|", "*", "×"}) {
    if (s.find(bad) != std::string::npos) return true;
  }
  return false;
}

std::optional<Rational> rational_token(const std::string& tok) {
  Rational r;
  if (!try_parse_rational(tok, r)) return std::nullopt;
  return r;
}

std::size_t parse_count(const std::string& tok) {
  if (tok.empty() || tok.size() > 18) return std::numeric_limits<std::size_t>::max();
  std::size_t n = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::numeric_limits<std::size_t>::max();
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

std::vector<std::string> read_header_and_names(LineReader& in, const std::string& keyword) {
  const Line& header = in.next("'" + keyword + " <count>'");
  if (header.tokens.size() != 2 || header.tokens[0] != keyword) {
    in.fail(header, "'" + keyword + " <count>'");
  }
  const std::size_t count = parse_count(header.tokens[1]);
  if (count == std::numeric_limits<std::size_t>::max()) {
    in.fail(header, "a nonnegative vertex count", header.tokens[1]);
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < count; ++i) {
    const Line& line = in.next("a vertex name");
    if (line.tokens.size() != 1 || reserved_name(line.tokens[0])) {
      in.fail(line, "a single vertex name");
    }
    if (!seen.insert(line.tokens[0]).second) {
      in.fail(line, "a new vertex name", line.tokens[0]);
    }
    names.push_back(line.tokens[0]);
  }
  return names;
}

VertexId lookup(const LineReader& in, const Line& line, const std::vector<std::string>& names,
                const std::string& name) {
  for (VertexId v = 0; v < names.size(); ++v) {
    if (names[v] == name) return v;
  }
  in.fail(line, "a declared vertex name", name);
}

// Splits tokens on a separator token into groups of vertex ids.
std::vector<std::vector<VertexId>> parse_groups(const LineReader& in, const Line& line,
                                                const std::vector<std::string>& tokens,
                                                const std::vector<std::string>& names,
                                                const std::string& sep) {
  std::vector<std::vector<VertexId>> groups(1);
  std::vector<bool> used(names.size(), false);
  for (const auto& tok : tokens) {
    if (tok == sep) {
      if (groups.back().empty()) in.fail(line, "a vertex name before '" + sep + "'", tok);
      groups.emplace_back();
      continue;
    }
    const VertexId v = lookup(in, line, names, tok);
    if (used[v]) in.fail(line, "each vertex once", tok);
    used[v] = true;
    groups.back().push_back(v);
  }
  if (groups.back().empty()) in.fail(line, "a vertex name after '" + sep + "'", "end of line");
  return groups;
}

void append_names(std::string& out, const std::vector<std::string>& names) {
  out += std::to_string(names.size()) + "\n";
  for (const auto& n : names) out += n + "\n";
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

WeightedTournament parse_tournament(std::string_view text, const std::string& file) {
  LineReader in(text, file);
  auto names = read_header_and_names(in, "tournament");
  WeightedTournament t(names);
  std::vector<bool> seen(t.arc_count(), false);
  while (!in.done()) {
    const Line& line = in.next("an arc line");
    if (line.tokens.size() != 3) in.fail(line, "'x y p/q'");
    const VertexId x = lookup(in, line, names, line.tokens[0]);
    const VertexId y = lookup(in, line, names, line.tokens[1]);
    if (x == y) in.fail(line, "two distinct vertices", line.tokens[1]);
    auto w = rational_token(line.tokens[2]);
    if (!w) in.fail(line, "a rational weight p/q", line.tokens[2]);
    const std::size_t arc = t.arc_index(std::min(x, y), std::max(x, y));
    if (seen[arc]) in.fail(line, "each arc at most once", line.tokens[0] + " " + line.tokens[1]);
    seen[arc] = true;
    t.set_weight(x, y, *w);
  }
  return t;
}

std::string format_tournament(const WeightedTournament& t) {
  std::string out = "tournament ";
  append_names(out, t.vertices());
  for (VertexId i = 0; i < t.size(); ++i) {
    for (VertexId j = i + 1; j < t.size(); ++j) {
      out += t.name(i) + " " + t.name(j) + " " + to_string(t.stored(i, j)) + "\n";
    }
  }
  return out;
}

OrderedPartition parse_partition(std::string_view text, const std::vector<std::string>& names,
                                 const std::string& file, std::size_t line_no) {
  Line line{line_no, {}, std::string(text)};
  std::istringstream ss{std::string(text)};
  for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
  LineReader in("", file);
  if (line.tokens.empty()) in.fail(line, "a partition 'a b > c'", "empty line");
  return OrderedPartition(parse_groups(in, line, line.tokens, names, ">"));
}

std::string format_partition(const OrderedPartition& p, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b) out += " > ";
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ' ';
      out += names.at(block[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Profile parse_profile(std::string_view text, const std::string& file) {
  LineReader in(text, file);
  auto names = read_header_and_names(in, "profile");
  std::vector<Ballot> ballots;
  while (!in.done()) {
    const Line& line = in.next("a ballot line");
    std::vector<std::string> tokens = line.tokens;
    unsigned long long count = 1;
    if (tokens.size() >= 2 && (tokens[tokens.size() - 2] == "×" || tokens[tokens.size() - 2] == "*")) {
      const std::size_t c = parse_count(tokens.back());
      if (c == 0 || c == std::numeric_limits<std::size_t>::max()) {
        in.fail(line, "a positive multiplicity", tokens.back());
      }
      count = c;
      tokens.resize(tokens.size() - 2);
    }
    auto groups = parse_groups(in, line, tokens, names, "|");
    std::size_t covered = 0;
    for (const auto& g : groups) covered += g.size();
    if (covered != names.size()) in.fail(line, "a ballot ranking every alternative");
    ballots.push_back({WeakOrder(std::move(groups)), count});
  }
  if (ballots.empty()) {
    throw ParseError(file, 0, "at least one ballot", "none");
  }
  return Profile(std::move(names), std::move(ballots));
}

std::string format_profile(const Profile& p) {
  std::string out = "profile ";
  append_names(out, p.alternatives());
  for (const auto& ballot : p.ballots()) {
    for (std::size_t b = 0; b < ballot.order.block_count(); ++b) {
      if (b) out += " | ";
      const auto& block = ballot.order.blocks()[b];
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ' ';
        out += p.alternatives()[block[i]];
      }
    }
    if (ballot.count != 1) out += " * " + std::to_string(ballot.count);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

CutInstance parse_graph(std::string_view text, const std::string& file) {
  LineReader in(text, file);
  auto names = read_header_and_names(in, "graph");
  CutInstance g(names);
  std::set<std::pair<VertexId, VertexId>> seen;
  while (!in.done()) {
    const Line& line = in.next("an edge line");
    if (line.tokens.size() != 3) in.fail(line, "'a b w'");
    const VertexId a = lookup(in, line, names, line.tokens[0]);
    const VertexId b = lookup(in, line, names, line.tokens[1]);
    if (a == b) in.fail(line, "two distinct vertices", line.tokens[1]);
    const std::size_t w = parse_count(line.tokens[2]);
    if (w == std::numeric_limits<std::size_t>::max() ||
        w > static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max() / 4)) {
      in.fail(line, "a nonnegative integer weight", line.tokens[2]);
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      in.fail(line, "each edge at most once", line.tokens[0] + " " + line.tokens[1]);
    }
    g.set_weight(a, b, static_cast<std::int64_t>(w));
  }
  return g;
}

std::string format_graph(const CutInstance& g) {
  std::string out = "graph ";
  append_names(out, g.vertices());
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) {
      if (g.weight(a, b) != 0) {
        out += g.name(a) + " " + g.name(b) + " " + std::to_string(g.weight(a, b)) + "\n";
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GadgetSidecar make_sidecar(const GadgetMap& gm) {
  GadgetSidecar s;
  s.gadget = gm.kind == GadgetKind::hg ? "hg" : "fg";
  s.reference_order = gm.reference_order;
  const auto& t = gm.tournament;
  for (VertexId v = 0; v < gm.source.size(); ++v) {
    std::vector<std::string> members;
    for (VertexId u : gm.ordinary[v]) members.push_back(t.name(u));
    s.ordinary.emplace_back(gm.source.name(v), std::move(members));
  }
  for (const auto& [ab, d] : gm.direction) {
    s.direction.push_back({gm.source.name(ab.first), gm.source.name(ab.second), t.name(d)});
  }
  if (gm.kind == GadgetKind::fg) {
    s.C = gm.C;
    s.epsilon = gm.epsilon;
  }
  return s;
}

GadgetSidecar make_club_sidecar(const CutInstance& source, const ClubAugmentation& club,
                                const std::string& club_name) {
  GadgetSidecar s;
  s.gadget = "club";
  s.reference_order = source.vertices();
  for (const auto& v : source.vertices()) s.ordinary.emplace_back(v, std::vector{v});
  s.club = club_name;
  s.sigma = club.sigma;
  return s;
}

std::string format_sidecar(const GadgetSidecar& s) {
  std::string out = "gadget " + s.gadget + "\n";
  out += "reference " + join(s.reference_order) + "\n";
  for (const auto& [v, members] : s.ordinary) out += "ordinary " + v + " " + join(members) + "\n";
  for (const auto& d : s.direction) out += "direction " + join(d) + "\n";
  if (s.club) out += "club " + *s.club + "\n";
  if (s.C) out += "C " + to_string(*s.C) + "\n";
  if (s.epsilon) out += "epsilon " + to_string(*s.epsilon) + "\n";
  if (s.sigma) out += "sigma " + std::to_string(*s.sigma) + "\n";
  return out;
}

GadgetSidecar parse_sidecar(std::string_view text, const std::string& file) {
  LineReader in(text, file);
  GadgetSidecar s;
  const Line& header = in.next("'gadget hg|fg|club'");
  if (header.tokens.size() != 2 || header.tokens[0] != "gadget" ||
      (header.tokens[1] != "hg" && header.tokens[1] != "fg" && header.tokens[1] != "club")) {
    in.fail(header, "'gadget hg|fg|club'");
  }
  s.gadget = header.tokens[1];
  while (!in.done()) {
    const Line& line = in.next("a sidecar record");
    const auto& tok = line.tokens;
    const std::string& key = tok[0];
    auto rational_value = [&]() {
      if (tok.size() != 2) in.fail(line, "'" + key + " p/q'");
      auto r = rational_token(tok[1]);
      if (!r) in.fail(line, "a rational", tok[1]);
      return *r;
    };
    if (key == "reference") {
      s.reference_order.assign(tok.begin() + 1, tok.end());
    } else if (key == "ordinary") {
      if (tok.size() < 3) in.fail(line, "'ordinary v member...'");
      s.ordinary.emplace_back(tok[1], std::vector<std::string>(tok.begin() + 2, tok.end()));
    } else if (key == "direction") {
      if (tok.size() != 4) in.fail(line, "'direction a b d'");
      s.direction.push_back({tok[1], tok[2], tok[3]});
    } else if (key == "club") {
      if (tok.size() != 2) in.fail(line, "'club name'");
      s.club = tok[1];
    } else if (key == "C") {
      s.C = rational_value();
    } else if (key == "epsilon") {
      s.epsilon = rational_value();
    } else if (key == "sigma") {
      if (tok.size() != 2) in.fail(line, "'sigma n'");
      const std::size_t v = parse_count(tok[1]);
      if (v == std::numeric_limits<std::size_t>::max()) in.fail(line, "an integer", tok[1]);
      s.sigma = static_cast<std::int64_t>(v);
    } else {
      in.fail(line, "reference, ordinary, direction, club, C, epsilon or sigma", key);
    }
  }
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tourney
