#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rembed {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; integers keep the "/1".
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p".
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

}  // namespace rembed
