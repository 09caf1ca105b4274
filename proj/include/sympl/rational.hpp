#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympl {

/// Exact rational scalar. Every number in the library is one of these.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

/// Parses a comma separated list of rationals; empty text gives an empty list.
RationalVector parse_rational_list(std::string_view text);

/// Canonical "p/q" rendering ("p" when the denominator is 1).
std::string to_string(const Rational& value);
std::string to_string(std::span<const Rational> values);

/// p/q in lowest terms; mpq_class(p, q) alone does not canonicalize.
inline Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

/// Integer value of an integral rational; throws NonIntegral otherwise and
/// InvalidArgument when the value does not fit into 64 bits.
std::int64_t to_int64(const Rational& value);

/// Parity in {0, 1} of an integral rational (also for negative values).
int parity(const Rational& value);

inline Rational abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

}  // namespace sympl
