#include "betalab/rational.hpp"

#include <cctype>

#include "betalab/types.hpp"

namespace betalab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rat(long long num, long long den) {
  if (den <= 0) throw ArgumentError("rational denominator must be positive");
  return Rational(BigInt(num), BigInt(den));
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ArgumentError("malformed rational literal: '" + std::string(text) +
                        "'");
  }
  BigInt num{std::string(num_part)};
  BigInt den{std::string(den_part)};
  if (den == 0) {
    throw ArgumentError("rational literal with zero denominator: '" +
                        std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace betalab
