#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& q, int digits = 6);

} // namespace frob
