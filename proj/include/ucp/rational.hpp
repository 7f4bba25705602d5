#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ucp/errors.hpp"

namespace ucp {

// Exact rational scalar. boost keeps it in lowest terms with positive
// denominator, which is the canonical form assumed everywhere (equality is
// plain ==, hashing/serialization need no extra normalization).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "num/den" or a bare integer "num" (optional leading minus on num).
// Throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical string form: bare integer when the denominator is 1, otherwise
// "num/den" in lowest terms. parse_rational(format_rational(q)) == q.
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

}  // namespace ucp
