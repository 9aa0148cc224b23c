#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lodpois {

// Exact rational scalars. mpq_class keeps values in lowest terms with a
// positive denominator as long as every entry point canonicalizes, so all
// construction from raw numerator/denominator pairs must go through here.
using Rational = mpq_class;

inline Rational frac(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Accepts "p", "-p", "p/q" with optional sign on p. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

} // namespace lodpois
