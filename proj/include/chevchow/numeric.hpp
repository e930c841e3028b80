#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chevchow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

inline std::string to_string(const BigInt& x) { return x.str(); }
std::string to_string(const Rational& x);

/// Floor division (rounds toward negative infinity), b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Dot product of equal-length integer vectors.
BigInt dot(const IntVector& a, const IntVector& b);

bool is_zero(const IntVector& v);

}  // namespace chevchow
