#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace lattisym {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// Parses "7", "-3/16", "1.25" (decimals are read exactly). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact square root if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lattisym
