#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xtint {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(m, r); zero outside 0 <= r <= m.
BigInt binomial(std::int64_t m, std::int64_t r);

std::string to_string(const BigInt& v);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Inverse of to_string(Rational); accepts "p/q" or "p".
Rational parse_rational(const std::string& text);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

}  // namespace xtint
