#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace springer {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Inverse of to_string; also accepts surrounding whitespace.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace springer
