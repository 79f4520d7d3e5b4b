#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "tourney/selftest.hpp"

namespace tourney {

enum class Command { solve, decide, decompose, aggregate, realize, reduce, verify, selftest };

struct RunConfig {
  Command command = Command::solve;
  std::string input;
  unsigned long long guard = 100'000'000ULL;
  bool all_ties = false;
  bool exact_k = false;
  std::optional<std::string> output_path;

  // solve / decide
  std::size_t k = 2;
  std::optional<std::string> threshold;
  std::string method = "auto";

  // aggregate
  std::optional<std::string> rule;
  std::optional<std::string> j_spec;
  std::optional<std::string> k_spec;
  bool coerce = false;

  // reduce / verify
  std::string gadget = "hg";
  std::optional<std::string> map_path;
  std::string theorem = "1";

  std::uint64_t seed = kDefaultSeed;
};

/// Exit status: 0 ok, 1 validation or parse error, 2 guard exceeded,
/// 3 verification failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tourney
