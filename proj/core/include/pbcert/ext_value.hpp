#pragma once

#include <string>

#include "pbcert/errors.hpp"
#include "pbcert/rational.hpp"

namespace pbcert {

// Element of the value group Q + Z*Omega, ordered lexicographically with the
// Omega part dominant, together with an absorbing infinity for support
// elements. Omega is the value of the side infinitesimal u; t carries value 1.
//
// The omega part of a polynomial value is always >= 0; quotients may carry a
// negative finite part (y2 = u/t^2 has value Omega - 2) and intermediate
// arithmetic may produce negative omega parts, so the field is kept signed.
struct ExtValue {
    long long omega = 0;
    Rational finite = Rational(0);
    bool infinite = false;

    ExtValue() = default;
    ExtValue(long long k, Rational q) : omega(k), finite(std::move(q)) {}

    static ExtValue infinity() {
        ExtValue v;
        v.infinite = true;
        return v;
    }
    static ExtValue of(const Rational& q) { return ExtValue(0, q); }
    static ExtValue omega_value(long long k = 1) { return ExtValue(k, Rational(0)); }

    bool is_zero() const { return !infinite && omega == 0 && finite == 0; }
};

/// Total order: infinity is the maximum, otherwise compare omega then finite.
inline int ext_value_compare(const ExtValue& a, const ExtValue& b) {
    if (a.infinite && b.infinite) return 0;
    if (a.infinite) return 1;
    if (b.infinite) return -1;
    if (a.omega != b.omega) return a.omega < b.omega ? -1 : 1;
    if (a.finite != b.finite) return a.finite < b.finite ? -1 : 1;
    return 0;
}

inline bool operator==(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) == 0; }
inline bool operator!=(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) != 0; }
inline bool operator<(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) < 0; }
inline bool operator<=(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) <= 0; }
inline bool operator>(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) > 0; }
inline bool operator>=(const ExtValue& a, const ExtValue& b) { return ext_value_compare(a, b) >= 0; }

/// Componentwise sum; infinity absorbs.
inline ExtValue ext_value_add(const ExtValue& a, const ExtValue& b) {
    if (a.infinite || b.infinite) return ExtValue::infinity();
    return ExtValue(a.omega + b.omega, a.finite + b.finite);
}

/// a - b, defined when b is finite; infinity - finite stays infinite.
inline ExtValue ext_value_sub(const ExtValue& a, const ExtValue& b) {
    if (b.infinite) throw InternalError("cannot subtract an infinite value");
    if (a.infinite) return ExtValue::infinity();
    return ExtValue(a.omega - b.omega, a.finite - b.finite);
}

inline ExtValue operator+(const ExtValue& a, const ExtValue& b) { return ext_value_add(a, b); }
inline ExtValue operator-(const ExtValue& a, const ExtValue& b) { return ext_value_sub(a, b); }

/// n * a for a natural n (value of an n-th power).
inline ExtValue ext_value_scale(const ExtValue& a, unsigned long n) {
    if (a.infinite) return n == 0 ? ExtValue() : ExtValue::infinity();
    return ExtValue(a.omega * static_cast<long long>(n), a.finite * Rational(n));
}

inline ExtValue ext_value_min(const ExtValue& a, const ExtValue& b) { return a <= b ? a : b; }

inline std::string ext_value_to_string(const ExtValue& v) {
    if (v.infinite) return "inf";
    std::string s;
    if (v.omega != 0) {
        s = (v.omega == 1) ? "W" : (v.omega == -1 ? "-W" : std::to_string(v.omega) + "W");
        if (v.finite > 0) s += "+" + rational_to_string(v.finite);
        if (v.finite < 0) s += rational_to_string(v.finite);
        return s;
    }
    return rational_to_string(v.finite);
}

}  // namespace pbcert
