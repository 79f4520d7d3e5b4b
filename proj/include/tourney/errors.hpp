#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tourney {

/// Input violates a documented domain restriction (bad vertex, bad ballot,
/// malformed partition). The CLI maps this to exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver precondition that the caller must establish (e.g. the acyclic
/// DP on a tournament with a cyclic component).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration would exceed the configured guard. CLI exit status 2.
class GuardExceeded : public std::length_error {
 public:
  GuardExceeded(const std::string& what, unsigned long long bound)
      : std::length_error(what), bound_(bound) {}
  unsigned long long bound() const noexcept { return bound_; }

 private:
  unsigned long long bound_;
};

/// Text-format parse failure with location and expected token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, std::string expected,
             std::string found);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string expected_;
};

}  // namespace tourney
