#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbcert/errors.hpp"
#include "pbcert/rational.hpp"

namespace pbcert {

/// Monomial x^dx * y^dy.
struct Mono {
    unsigned dx = 0;
    unsigned dy = 0;

    unsigned total() const { return dx + dy; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Ascending graded-lex order (total degree first, then x-exponent); the
/// reverse iteration order is the canonical serialization order.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.dx < b.dx;
    }
};

// Sparse bivariate polynomial over Q. Terms with zero coefficient are never
// stored, so the representation is canonical and comparison is structural.
class Poly2 {
public:
    using TermMap = std::map<Mono, Rational, MonoLess>;

    Poly2() = default;
    explicit Poly2(const Rational& c) {
        if (c != 0) terms_[Mono{0, 0}] = c;
    }

    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return Poly2(Rational(1)); }
    static Poly2 var_x() { return monomial(Mono{1, 0}, Rational(1)); }
    static Poly2 var_y() { return monomial(Mono{0, 1}, Rational(1)); }
    static Poly2 monomial(Mono m, const Rational& c) {
        Poly2 p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero when absent).
    Rational coeff(Mono m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Value at the origin.
    Rational constant_term() const { return coeff(Mono{0, 0}); }

    void add_term(Mono m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Total degree; zero polynomial reports 0.
    unsigned degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.total();
    }
    unsigned degree_x() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
        return d;
    }
    unsigned degree_y() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
        return d;
    }

    /// Minimal exponent of x (resp. y) across terms; 0 for the zero polynomial.
    unsigned val_x() const {
        if (terms_.empty()) return 0;
        unsigned v = terms_.begin()->first.dx;
        for (const auto& [m, c] : terms_) v = std::min(v, m.dx);
        return v;
    }
    unsigned val_y() const {
        if (terms_.empty()) return 0;
        unsigned v = terms_.begin()->first.dy;
        for (const auto& [m, c] : terms_) v = std::min(v, m.dy);
        return v;
    }

    /// Minimal total degree over stored terms; nullopt encodes infinity (the
    /// zero polynomial, whose order is above every power of the maximal ideal).
    std::optional<unsigned> order_at_origin() const {
        if (terms_.empty()) return std::nullopt;
        unsigned v = terms_.begin()->first.total();
        for (const auto& [m, c] : terms_) v = std::min(v, m.total());
        return v;
    }

    /// Leading term under graded-lex (largest monomial). Polynomial must be nonzero.
    Mono lead_mono() const {
        if (terms_.empty()) throw InternalError("lead_mono of zero polynomial");
        return terms_.rbegin()->first;
    }
    Rational lead_coeff() const {
        if (terms_.empty()) throw InternalError("lead_coeff of zero polynomial");
        return terms_.rbegin()->second;
    }

    Rational eval(const Rational& x, const Rational& y) const;

    Poly2 operator-() const {
        Poly2 r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly2& operator+=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    friend Poly2 operator*(const Rational& c, const Poly2& p);

    Poly2 pow(unsigned e) const;

    /// Exchange the roles of x and y.
    Poly2 swap_vars() const {
        Poly2 r;
        for (const auto& [m, c] : terms_) r.terms_[Mono{m.dy, m.dx}] = c;
        return r;
    }

    /// Multiply by x^a y^b.
    Poly2 shift_up(unsigned a, unsigned b) const {
        Poly2 r;
        for (const auto& [m, c] : terms_) r.terms_[Mono{m.dx + a, m.dy + b}] = c;
        return r;
    }
    /// Divide by x^a y^b; every term must be divisible.
    Poly2 shift_down(unsigned a, unsigned b) const {
        Poly2 r;
        for (const auto& [m, c] : terms_) {
            if (m.dx < a || m.dy < b) throw InternalError("monomial division not exact");
            r.terms_[Mono{m.dx - a, m.dy - b}] = c;
        }
        return r;
    }

    friend bool operator==(const Poly2&, const Poly2&) = default;

private:
    TermMap terms_;
};

/// Quotient with remainder-free division; nullopt when g does not divide f.
std::optional<Poly2> divide_exact(const Poly2& f, const Poly2& g);
inline bool divides(const Poly2& g, const Poly2& f) { return divide_exact(f, g).has_value(); }

/// Scale to integer coefficients with content 1 and positive leading coefficient.
Poly2 normalize_primitive(const Poly2& f);

// Rational function in the plane coordinates. The pair is reduced by its
// common monomial content and the denominator is normalized monic; full gcd
// reduction is deliberately not performed (sign and value computations do not
// need it, and bivariate gcds are expensive).
class RatFunc2 {
public:
    RatFunc2() : num_(), den_(Poly2::one()) {}
    RatFunc2(const Poly2& n) : num_(n), den_(Poly2::one()) {}  // NOLINT(google-explicit-constructor)
    RatFunc2(Poly2 n, Poly2 d);

    static RatFunc2 var_x() { return RatFunc2(Poly2::var_x()); }
    static RatFunc2 var_y() { return RatFunc2(Poly2::var_y()); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly2::one(); }

    RatFunc2 operator-() const { return RatFunc2(-num_, den_); }
    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const Rational& c, const RatFunc2& f);

    /// Equality as rational functions (cross multiplication).
    friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    void normalize();

    Poly2 num_;
    Poly2 den_;
};

/// Exact composite f(xe, ye); polynomial inputs give denominator 1.
RatFunc2 substitute(const Poly2& f, const RatFunc2& xe, const RatFunc2& ye);
RatFunc2 substitute(const RatFunc2& f, const RatFunc2& xe, const RatFunc2& ye);
/// Composite with polynomial expressions.
Poly2 substitute_poly(const Poly2& f, const Poly2& xe, const Poly2& ye);

struct PuiseuxTerm {
    Rational exponent;  // strictly positive
    Rational coeff;     // nonzero
    friend bool operator==(const PuiseuxTerm&, const PuiseuxTerm&) = default;
};

// Finite Puiseux polynomial phi with strictly increasing positive exponents.
// An empty series denotes a half of the x-axis (y identically 0 along the
// branch).
class PuiseuxPoly {
public:
    PuiseuxPoly() = default;
    explicit PuiseuxPoly(std::vector<PuiseuxTerm> terms);

    const std::vector<PuiseuxTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// lcm of the exponent denominators (1 for the empty series).
    Int ramification_index() const;

    friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

private:
    std::vector<PuiseuxTerm> terms_;
};

// Univariate polynomial in an auxiliary variable z with Poly2 coefficients,
// used only for elimination. coeffs[k] is the coefficient of z^k.
using ZPoly = std::vector<Poly2>;

/// Degree in z after trimming; -1 for the zero polynomial.
int zpoly_degree(const ZPoly& f);

/// Sylvester resultant eliminating z. Errors when both inputs are constant in z.
Poly2 sylvester_resultant(const ZPoly& f, const ZPoly& g);

}  // namespace pbcert
