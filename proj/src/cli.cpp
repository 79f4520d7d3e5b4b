#include "tourney/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "tourney/decomposition.hpp"
#include "tourney/errors.hpp"
#include "tourney/profiles.hpp"
#include "tourney/reductions.hpp"
#include "tourney/solvers.hpp"
#include "tourney/text_format.hpp"

namespace tourney {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << content;
  if (!f) throw ValidationError("failed writing '" + path + "'");
}

// Primary report goes to --output when given, otherwise to stdout.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output_path) {
    write_file(*config.output_path, text);
  } else {
    out << text;
  }
}

SolveOptions solve_options(const RunConfig& config) {
  SolveOptions so;
  so.all_ties = config.all_ties;
  so.exact_k = config.exact_k;
  so.guard = config.guard;
  return so;
}

SolveMethod parse_method(const std::string& name) {
  if (name == "auto") return SolveMethod::automatic;
  if (name == "bruteforce") return SolveMethod::bruteforce;
  if (name == "dp") return SolveMethod::acyclic_dp;
  if (name == "2op") return SolveMethod::two_op;
  throw ValidationError("unknown method '" + name + "' (auto, bruteforce, dp, 2op)");
}

Rational threshold_value(const std::string& text) {
  Rational r;
  if (!try_parse_rational(text, r)) throw ValidationError("malformed threshold '" + text + "'");
  return r;
}

int do_solve(const RunConfig& config, std::ostream& out) {
  const auto t = parse_tournament(read_text_file(config.input), config.input);
  const auto so = solve_options(config);
  const auto result = solve(t, config.k, so, parse_method(config.method));
  std::string report = "optimum " + to_string(result.optimum) + "\n";
  for (const auto& w : result.witnesses) report += format_partition(w, t.vertices()) + "\n";
  if (result.truncated) report += "# witness list truncated\n";
  if (config.threshold) {
    const bool yes = result.optimum >= threshold_value(*config.threshold);
    report += std::string("decision ") + (yes ? "yes" : "no") + "\n";
  }
  emit(config, out, report);
  return 0;
}

int do_decide(const RunConfig& config, std::ostream& out) {
  if (!config.threshold) throw ValidationError("decide needs --threshold");
  const auto t = parse_tournament(read_text_file(config.input), config.input);
  const bool yes = decide(t, config.k, threshold_value(*config.threshold), solve_options(config));
  emit(config, out, std::string("decision ") + (yes ? "yes" : "no") + "\n");
  return 0;
}

int do_decompose(const RunConfig& config, std::ostream& out) {
  const auto t = parse_tournament(read_text_file(config.input), config.input);
  const auto d = decompose(t);
  const std::string summary = "cyclic_norm_sq " + to_string(norm_squared(d.cycle)) +
                              "  cocyclic_norm_sq " + to_string(norm_squared(d.cocycle)) + "\n";
  if (config.output_path) {
    write_file(*config.output_path + ".cycle", format_tournament(d.cycle));
    write_file(*config.output_path + ".cocycle", format_tournament(d.cocycle));
    out << "wrote " << *config.output_path << ".cycle and " << *config.output_path
        << ".cocycle\n";
  } else {
    out << "# cycle\n" << format_tournament(d.cycle) << "# cocycle\n"
        << format_tournament(d.cocycle);
  }
  out << summary;
  return 0;
}

int do_aggregate(const RunConfig& config, std::ostream& out) {
  const auto p = parse_profile(read_text_file(config.input), config.input);
  AggregateOptions ao;
  ao.coerce = config.coerce;
  ao.exact_k = config.exact_k;
  ao.guard = config.guard;

  AggregateResult result;
  LevelSpec k = LevelSpec::linear();
  if (config.rule) {
    if (config.j_spec || config.k_spec) throw ValidationError("give --rule or --j/--k, not both");
    const auto rule = parse_named_rule(*config.rule);
    k = rule_levels(rule).second;
    result = named_rule(p, rule, ao);
  } else {
    if (!config.j_spec || !config.k_spec) throw ValidationError("aggregate needs --rule or both --j and --k");
    k = LevelSpec::parse(*config.k_spec);
    result = jk_kemeny(p, LevelSpec::parse(*config.j_spec), k, ao);
  }
  std::string report = "optimum " + to_string(result.optimum) + "\n";
  for (const auto& order : result.orders) {
    if (k.kind == LevelSpec::Kind::univalent) {
      report += p.alternatives()[order.blocks().front().front()] + "\n";
    } else {
      report += format_partition(order, p.alternatives()) + "\n";
    }
  }
  if (result.truncated) report += "# outcome list truncated\n";
  emit(config, out, report);
  return 0;
}

int do_realize(const RunConfig& config, std::ostream& out) {
  const auto t = parse_tournament(read_text_file(config.input), config.input);
  emit(config, out, format_profile(realize_weights(t)));
  return 0;
}

int do_reduce(const RunConfig& config, std::ostream& out) {
  const auto g = parse_graph(read_text_file(config.input), config.input);
  std::string body;
  GadgetSidecar sidecar;
  if (config.gadget == "hg") {
    const auto gm = build_hg(g);
    body = format_tournament(gm.tournament);
    sidecar = make_sidecar(gm);
  } else if (config.gadget == "fg") {
    const auto gm = build_fg(g);
    body = format_tournament(gm.tournament);
    sidecar = make_sidecar(gm);
  } else if (config.gadget == "club") {
    const auto club = add_club_vertex(g);
    body = format_graph(club.graph);
    sidecar = make_club_sidecar(g, club);
  } else {
    throw ValidationError("unknown gadget '" + config.gadget + "' (hg, club, fg)");
  }
  const std::string map_text = format_sidecar(sidecar);
  std::optional<std::string> map_path = config.map_path;
  if (!map_path && config.output_path) map_path = *config.output_path + ".map";
  if (map_path) {
    write_file(*map_path, map_text);
    emit(config, out, body);
  } else {
    // Sidecar as comment lines keeps stdout parseable as the gadget file.
    std::string commented;
    std::istringstream lines(map_text);
    for (std::string line; std::getline(lines, line);) commented += "# " + line + "\n";
    emit(config, out, body + commented);
  }
  return 0;
}

int do_verify(const RunConfig& config, std::ostream& out) {
  const auto g = parse_graph(read_text_file(config.input), config.input);
  SolveOptions so = solve_options(config);
  IdentityCheck check;
  if (config.theorem == "1") {
    check = verify_theorem1(g, so);
  } else if (config.theorem == "prop1") {
    check = verify_club(g, so);
  } else if (config.theorem == "6") {
    check = verify_theorem6(g, so);
  } else {
    throw ValidationError("unknown identity '" + config.theorem + "' (1, prop1, 6)");
  }
  std::string report = (check.pass ? "PASS " : "FAIL ") + check.name + ": " +
                       to_string(check.lhs) + " = " + to_string(check.rhs) + "\n";
  if (!check.detail.empty()) report += "# " + check.detail + "\n";
  emit(config, out, report);
  return check.pass ? 0 : 3;
}

int do_selftest(const RunConfig& config, std::ostream& out) {
  SolveOptions so;
  so.guard = config.guard;
  std::ostringstream report;
  const std::size_t failures = run_selftest(config.seed, so, report);
  emit(config, out, report.str());
  return failures == 0 ? 0 : 3;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.guard == 0) throw ValidationError("--guard must be at least 1");
    switch (config.command) {
      case Command::solve:
        return do_solve(config, out);
      case Command::decide:
        return do_decide(config, out);
      case Command::decompose:
        return do_decompose(config, out);
      case Command::aggregate:
        return do_aggregate(config, out);
      case Command::realize:
        return do_realize(config, out);
      case Command::reduce:
        return do_reduce(config, out);
      case Command::verify:
        return do_verify(config, out);
      case Command::selftest:
        return do_selftest(config, out);
    }
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ordered-partition optimization on weighted tournaments"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    sub->add_option("--guard", config.guard, "cap on enumerated level labelings")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output,-o", config.output_path, "write the result here");
    if (needs_input) sub->add_option("input", config.input, "input file")->required();
  };

  auto* solve_cmd = app.add_subcommand("solve", "max-kOP optimum and witnesses");
  solve_cmd->add_option("--k", config.k, "number of blocks")->required()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threshold", config.threshold, "also decide optimum >= p/q");
  solve_cmd->add_flag("--all-ties", config.all_ties, "list every optimal partition");
  solve_cmd->add_flag("--exact-k", config.exact_k, "exactly k nonempty blocks");
  solve_cmd->add_option("--method", config.method, "auto, bruteforce, dp or 2op");
  common(solve_cmd);

  auto* decide_cmd = app.add_subcommand("decide", "is there a partition scoring >= threshold");
  decide_cmd->add_option("--k", config.k, "number of blocks")->required()->check(CLI::PositiveNumber);
  decide_cmd->add_option("--threshold", config.threshold, "p/q")->required();
  decide_cmd->add_flag("--exact-k", config.exact_k, "exactly k nonempty blocks");
  common(decide_cmd);

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "cyclic and cocyclic components; --output P writes P.cycle and P.cocycle");
  common(decompose_cmd);

  auto* aggregate_cmd = app.add_subcommand("aggregate", "(j,k)-Kemeny outcome of a profile");
  aggregate_cmd->add_option("--rule", config.rule,
                            "approval_ranking, approval_winner, plurality_ranking, "
                            "plurality_winner, borda_ranking, borda_winner, kemeny_ranking");
  aggregate_cmd->add_option("--j", config.j_spec, "ballot shape: integer, |V| or 2*");
  aggregate_cmd->add_option("--k", config.k_spec, "outcome shape: integer, |V| or 2*");
  aggregate_cmd->add_flag("--coerce", config.coerce, "skip ballot shape checks");
  aggregate_cmd->add_flag("--exact-k", config.exact_k, "exactly k classes for integer k");
  common(aggregate_cmd);

  auto* realize_cmd = app.add_subcommand(
      "realize", "trichotomous profile whose net-majority tournament is twice the input");
  common(realize_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "build a gadget from a graph file");
  reduce_cmd->add_option("--gadget", config.gadget, "hg, club or fg")
      ->check(CLI::IsMember({"hg", "club", "fg"}));
  reduce_cmd->add_option("--map", config.map_path,
                         "sidecar path (default: <output>.map, or comments on stdout)");
  reduce_cmd->footer(
      "hg: 4-cycle gadget, max-tricut(G) = max-3OP(H_G).\n"
      "club: adds vertex 'club' at weight sigma = 1 + total weight,\n"
      "      max-tricut(G*) = |V| sigma + max-cut(G).\n"
      "fg: transitive gadget with C = 1 + total weight, epsilon = 1/(72|V|^4),\n"
      "    round(max-3OP(F_G)) = 3|V|C + max-cut(G). For j >= 4 blocks the\n"
      "    placement constant becomes (2j-3)|V|C; that variant is not built.");
  common(reduce_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check a reduction identity by brute force");
  verify_cmd->add_option("--theorem", config.theorem, "1 (H_G), prop1 (club) or 6 (F_G)")
      ->check(CLI::IsMember({"1", "prop1", "6"}));
  common(verify_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "seeded randomized property suite");
  selftest_cmd->add_option("--seed", config.seed, "random seed");
  common(selftest_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::pair<CLI::App*, Command> table[] = {
      {solve_cmd, Command::solve},         {decide_cmd, Command::decide},
      {decompose_cmd, Command::decompose}, {aggregate_cmd, Command::aggregate},
      {realize_cmd, Command::realize},     {reduce_cmd, Command::reduce},
      {verify_cmd, Command::verify},       {selftest_cmd, Command::selftest},
  };
  for (const auto& [sub, command] : table) {
    if (sub->parsed()) config.command = command;
  }
  return run(config, out, err);
}

}  // namespace tourney
