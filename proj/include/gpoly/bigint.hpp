#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt ipow(const BigInt& base, unsigned exp);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

} // namespace gpoly
