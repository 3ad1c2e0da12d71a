#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cspleth/errors.hpp"

namespace cspleth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "n" or "n/d" with optional leading sign.  Throws ExprParseError on
// anything else (boost accepts the same grammar but its failure mode is an
// unrelated exception type).
Rational parse_rational(const std::string& text);

// Canonical form: "n" when the denominator is 1, otherwise "n/d", lowest
// terms, sign on the numerator.
std::string rational_to_string(const Rational& value);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace cspleth
