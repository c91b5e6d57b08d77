#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cvd {

// Exact arithmetic everywhere cost values flow; the zero-cost test in the
// local ratio loop must be exact, so no floating point on these paths.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p/q" when the denominator is nontrivial, plain integer otherwise.
std::string to_string(const Rational& r);

// Accepts "123", "1.25" and "p/q". Throws PreconditionError on anything else
// (including negative values when allow_negative is false).
Rational parse_rational(const std::string& text, bool allow_negative = false);

double to_double(const Rational& r);

}  // namespace cvd
