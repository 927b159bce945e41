#pragma once
// Exact scalar type used wherever the input data is rational: edge weights,
// metric matrices given as fractions, closed-form bounds.  Keeping these
// computations in arbitrary-precision rationals means equalities in tests
// are actual equalities, not tolerance games.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sgt/error.hpp"

namespace sgt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt bigint_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  return Rational(bigint_pow(numerator(base), exp),
                  bigint_pow(denominator(base), exp));
}

// "p/q" when the denominator is not 1, plain integer otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Accepted forms: integers ("7", "-3"), fractions ("22/7"), and decimal
// literals ("1.25", ".5").  A decimal literal parses to the exact rational
// it denotes, so reading a file we wrote earlier cannot drift.
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = (text[pos] == '-');
    ++pos;
  }
  BigInt num = 0;
  BigInt den = 1;
  std::size_t digits = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    num = num * 10 + (text[pos] - '0');
    ++digits;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '/') {
    if (digits == 0) return std::nullopt;
    ++pos;
    BigInt d = 0;
    std::size_t ddigits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      d = d * 10 + (text[pos] - '0');
      ++ddigits;
      ++pos;
    }
    if (ddigits == 0 || pos != text.size() || d == 0) return std::nullopt;
    den = d;
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t fdigits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      ++fdigits;
      ++pos;
    }
    if (digits + fdigits == 0 || pos != text.size()) return std::nullopt;
  } else if (digits == 0 || pos != text.size()) {
    return std::nullopt;
  }
  Rational value(num, den);
  if (negative) value = -value;
  return value;
}

inline Rational parse_rational_or_fail(std::string_view text,
                                       const std::string& what) {
  auto v = parse_rational(text);
  if (!v) fail(Errc::ParseError, "cannot parse " + what + " '" + std::string(text) + "'");
  return *v;
}

}  // namespace sgt
