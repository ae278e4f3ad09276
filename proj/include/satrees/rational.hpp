#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace satrees {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& x);

/// Parses "p", "-p" or "p/q". Throws Error{parse} on malformed input.
Rational parse_rational(const std::string& text);

} // namespace satrees
