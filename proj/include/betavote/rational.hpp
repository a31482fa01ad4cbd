#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace betavote {

// Exact rational number. Every score, weight and interval endpoint in the
// library is one of these; nothing is compared in floating point.
using Rational = mpq_class;

// Accepts "7", "-3", "5/2" and finite decimals such as "1.25".
// Returns nullopt on anything else (including a zero denominator).
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "5/2", "7", "-1/3".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace betavote
