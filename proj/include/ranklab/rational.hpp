#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ranklab {

// Exact rational number. Every rating, matrix entry and threshold in this
// library is an mpq_class; doubles appear only in display code and in the
// floating-point cross-check oracles.
using Rational = mpq_class;

// mpq_class has no long long constructor and does not canonicalize two-part
// construction; route all integer conversions through these.
inline Rational rat(long long value) {
  return Rational(mpz_class(static_cast<long>(value)));
}

inline Rational rat(long long num, long long den) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Parses "17/20", "0.85", ".5", "-3" into an exact rational.
// Decimal input is converted exactly (0.85 -> 85/100), never through double.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical fraction string: "4/55", "-2/55", or "7" when the denominator is 1.
std::string fraction_string(const Rational& q);

double as_double(const Rational& q);

// Fixed-point decimal rendering for tables, e.g. 0.072727.
std::string decimal_string(const Rational& q, int digits = 6);

}  // namespace ranklab
