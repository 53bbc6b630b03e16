#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace entropic {

// All set-function values are exact rationals; floating point appears only in
// the concretization oracle.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Rat make_rat(long long num, long long den = 1);

// Parses "7", "-3/4", or a terminating decimal such as "0.125", exactly.
Rat parse_rational(const std::string& text);

// "num/den" in lowest terms, or just "num" for integers.
std::string rational_to_string(const Rat& value);

bool is_integer(const Rat& value);

// Conversion for values that must fit a machine integer; usage_error otherwise.
long long to_int64(const Rat& value);

double to_double(const Rat& value);

// Least common multiple of the denominators (1 for an empty list).
BigInt denominator_lcm(const std::vector<Rat>& values);

}  // namespace entropic
