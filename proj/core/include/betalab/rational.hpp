#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace betalab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar carrying every distance, radius and weight.
// cpp_rational keeps the canonical reduced form with a positive denominator,
// so comparisons and arithmetic are exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

Rational rat(long long num, long long den = 1);

// Parses "p/q" or "p"; optional leading '-' on p only. Throws ArgumentError
// on anything else (q = 0 included).
Rational parse_rational(std::string_view text);

// Canonical form: "p/q", or plain "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace betalab
