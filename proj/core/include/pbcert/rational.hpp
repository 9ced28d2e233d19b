#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pbcert/errors.hpp"

namespace pbcert {

// Exact scalars. The ground field is modelled by Q: every construction in
// this library (signs, leading coefficients, resultants, shifts) stays
// rational when its inputs are rational. Values are always stored in lowest
// terms with a positive denominator; there is no rounding anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Build a rational from a (possibly negative) numerator/denominator pair.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline int sign_of(const Rational& q) {
    if (q == 0) return 0;
    return q > 0 ? 1 : -1;
}

inline Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// q^e for a natural exponent.
inline Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r(1);
    Rational base = q;
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Parse "p" or "p/q" (q > 0 after normalization happens automatically).
Rational parse_rational(const std::string& text);

}  // namespace pbcert
