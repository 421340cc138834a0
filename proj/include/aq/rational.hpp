#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace aq {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "3", "-3/2"; input must be canonical.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "n" or "n/d" with an optional leading sign; nullopt on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

inline int sign_of_parity(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace aq
