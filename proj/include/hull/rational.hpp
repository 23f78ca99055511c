#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hull {

// Exact arbitrary-precision rational scalar. GMP keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" (q > 0 after normalization), plain integers, and finite
// decimals such as "0.25" (converted exactly). Returns nothing on any
// malformed or non-finite literal.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);

// Shortest decimal that round-trips through a 64-bit double. Lossy by
// construction; only for mesh export.
std::string format_double_shortest(double v);

}  // namespace hull
