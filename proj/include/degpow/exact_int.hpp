#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degpow {

/// Arbitrary-precision integer carrying every degree-power value.
/// Signed so that differences of degree powers stay exact too.
using ExactInt = boost::multiprecision::cpp_int;

/// base^exponent, exactly. exponent must be >= 0.
ExactInt ipow(long long base, int exponent);

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace degpow
