#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcds {

/// Exact arbitrary-precision rational.
using Rational = boost::multiprecision::cpp_rational;

/// H(x) = 1 + 1/2 + ... + 1/x. Throws InputError for x < 1.
Rational harmonic(int x);

/// Parses "7/8", "1", or a finite decimal such as "0.875".
Rational parse_rational(std::string_view text);

/// "7/8" style; integers print without a denominator.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

/// Rounds to 6 decimal places for report output.
double round6(double x);

/// Ceiling of r as an integer.
std::int64_t ceil_int(const Rational& r);

}  // namespace bcds
