#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace tourney {

/// Exact rational scalar used for every weight and score.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses `p`, `-p`, or `p/q` (q != 0). Returns false on malformed input.
bool try_parse_rational(std::string_view text, Rational& out);

/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Lowest terms, `p/q`, with `/1` elided.
std::string to_string(const Rational& r);

/// Nearest integer. Throws std::domain_error on an exact half, since the
/// callers only round values whose fractional part stays below 1/2.
Integer round_nearest(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace tourney
