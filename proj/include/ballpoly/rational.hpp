#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <type_traits>

namespace ballpoly {

/// Arbitrary-precision rational; always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// num/den in lowest terms. Prefer this to Rational(num, den), which does not reduce.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Scalar conversion used when casting polynomial coefficients or evaluating at points.
template <class To, class From>
To convert_scalar(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<From, Rational> && std::is_floating_point_v<To>) {
    return static_cast<To>(v.get_d());
  } else {
    return To(v);
  }
}

}  // namespace ballpoly
