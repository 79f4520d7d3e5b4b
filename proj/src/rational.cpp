#include "tourney/rational.hpp"

#include <cctype>
#include <stdexcept>


namespace tourney {

namespace {

bool parse_integer(std::string_view text, bool allow_sign, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(start));
  out = Integer(digits);
  if (text[0] == '-') out = -out;
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view text, Rational& out) {
  auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, true, num)) return false;
  } else {
    if (!parse_integer(text.substr(0, slash), true, num)) return false;
    if (!parse_integer(text.substr(slash + 1), false, den)) return false;
    if (den == 0) return false;
  }
  out = Rational(num, den);
  return true;
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (!try_parse_rational(text, r)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  }
  return r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer round_nearest(const Rational& r) {
  // floor(r + 1/2), rejecting exact halves.
  Rational shifted = r + Rational(1, 2);
  if (is_integer(shifted)) {
    throw std::domain_error("round_nearest: exact half " + to_string(r));
  }
  Integer num = numerator(shifted);
  Integer den = denominator(shifted);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace tourney
