#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twocon {

/// Exact arbitrary-precision integer and rational coefficients.
/// mpq_class keeps values in lowest terms with positive denominator,
/// which is exactly the invariant required of series coefficients.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational ratio(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(r.get_den_mpz_t(), 1) == 0;
}

inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: " + r.get_str() + " is not integral");
    return r.get_num();
}

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p/q" or "p"; result canonicalized.
Rational parse_rational(const std::string& s);

}  // namespace twocon
