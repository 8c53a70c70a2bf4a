#include "xtint/bigint.hpp"

#include "xtint/errors.hpp"

namespace xtint {

BigInt binomial(std::int64_t m, std::int64_t r) {
  if (m < 0 || r < 0 || r > m) return 0;
  if (r > m - r) r = m - r;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= r; ++j) {
    result *= m - r + j;
    result /= j;
  }
  return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw IntegrityError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw IntegrityError("malformed rational '" + text + "'");
  }
}

}  // namespace xtint
