#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "waldspurger/error.hpp"

namespace wald {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Throws InvariantError when q is not an integer that fits in 64 bits.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) {
    throw InvariantError("expected an integer, got " + q.str());
  }
  const BigInt num = boost::multiprecision::numerator(q);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    throw InvariantError("integer out of 64-bit range: " + num.str());
  }
  return static_cast<std::int64_t>(num);
}

// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
}

}  // namespace wald
