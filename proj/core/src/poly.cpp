#include "pbcert/poly.hpp"

#include <algorithm>

namespace pbcert {

Rational Poly2::eval(const Rational& x, const Rational& y) const {
    // Powers are cached because blow-up substitutions evaluate the same
    // polynomial at many grid points.
    std::vector<Rational> xpow(degree_x() + 1), ypow(degree_y() + 1);
    xpow[0] = 1;
    for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = xpow[i - 1] * x;
    ypow[0] = 1;
    for (std::size_t j = 1; j < ypow.size(); ++j) ypow[j] = ypow[j - 1] * y;
    Rational r(0);
    for (const auto& [m, c] : terms_) r += c * xpow[m.dx] * ypow[m.dy];
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Mono{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return r;
}

Poly2 operator*(const Rational& c, const Poly2& p) {
    Poly2 r;
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 r = Poly2::one();
    Poly2 base = *this;
    while (e != 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::optional<Poly2> divide_exact(const Poly2& f, const Poly2& g) {
    if (g.is_zero()) return std::nullopt;
    Poly2 q;
    Poly2 r = f;
    const Mono lg = g.lead_mono();
    const Rational lc = g.lead_coeff();
    while (!r.is_zero()) {
        const Mono lr = r.lead_mono();
        if (lr.dx < lg.dx || lr.dy < lg.dy) return std::nullopt;
        const Mono m{lr.dx - lg.dx, lr.dy - lg.dy};
        const Rational c = r.lead_coeff() / lc;
        Poly2 t = Poly2::monomial(m, c);
        q += t;
        r -= t * g;
    }
    return q;
}

Poly2 normalize_primitive(const Poly2& f) {
    if (f.is_zero()) return f;
    Int den_lcm = 1;
    for (const auto& [m, c] : f.terms()) den_lcm = lcm(den_lcm, denominator(c));
    Int num_gcd = 0;
    for (const auto& [m, c] : f.terms()) num_gcd = gcd(num_gcd, numerator(c * Rational(den_lcm)));
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (f.lead_coeff() < 0) scale = -scale;
    return scale * f;
}

RatFunc2::RatFunc2(Poly2 n, Poly2 d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RatFunc2::normalize() {
    if (num_.is_zero()) {
        den_ = Poly2::one();
        return;
    }
    const unsigned ax = std::min(num_.val_x(), den_.val_x());
    const unsigned ay = std::min(num_.val_y(), den_.val_y());
    if (ax != 0 || ay != 0) {
        num_ = num_.shift_down(ax, ay);
        den_ = den_.shift_down(ax, ay);
    }
    const Rational lc = den_.lead_coeff();
    if (lc != 1) {
        const Rational inv = Rational(1) / lc;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
    return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
    if (b.num_.is_zero()) throw DomainError("division by the zero rational function");
    return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
}
RatFunc2 operator*(const Rational& c, const RatFunc2& f) {
    return RatFunc2(c * f.num_, f.den_);
}

RatFunc2 substitute(const Poly2& f, const RatFunc2& xe, const RatFunc2& ye) {
    // Common-denominator expansion: f(p/q, r/s) = sum c * p^i q^(Dx-i) r^j s^(Dy-j)
    // over q^Dx s^Dy.
    const unsigned dx = f.degree_x();
    const unsigned dy = f.degree_y();
    std::vector<Poly2> xn(dx + 1), xd(dx + 1), yn(dy + 1), yd(dy + 1);
    xn[0] = xd[0] = yn[0] = yd[0] = Poly2::one();
    for (unsigned i = 1; i <= dx; ++i) {
        xn[i] = xn[i - 1] * xe.num();
        xd[i] = xd[i - 1] * xe.den();
    }
    for (unsigned j = 1; j <= dy; ++j) {
        yn[j] = yn[j - 1] * ye.num();
        yd[j] = yd[j - 1] * ye.den();
    }
    Poly2 num;
    for (const auto& [m, c] : f.terms())
        num += c * (xn[m.dx] * xd[dx - m.dx] * yn[m.dy] * yd[dy - m.dy]);
    return RatFunc2(num, xd[dx] * yd[dy]);
}

RatFunc2 substitute(const RatFunc2& f, const RatFunc2& xe, const RatFunc2& ye) {
    const RatFunc2 n = substitute(f.num(), xe, ye);
    const RatFunc2 d = substitute(f.den(), xe, ye);
    if (d.is_zero()) throw DomainError("substitution maps denominator to zero");
    return n / d;
}

Poly2 substitute_poly(const Poly2& f, const Poly2& xe, const Poly2& ye) {
    const RatFunc2 r = substitute(f, RatFunc2(xe), RatFunc2(ye));
    if (!r.is_polynomial()) throw InternalError("polynomial substitution produced a denominator");
    return r.num();
}

PuiseuxPoly::PuiseuxPoly(std::vector<PuiseuxTerm> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exponent <= 0)
            throw DomainError("Puiseux exponents must be strictly positive");
        if (terms_[i].coeff == 0) throw DomainError("Puiseux coefficients must be nonzero");
        if (i > 0 && !(terms_[i - 1].exponent < terms_[i].exponent))
            throw DomainError("Puiseux exponents must be strictly increasing");
    }
}

Int PuiseuxPoly::ramification_index() const {
    Int n = 1;
    for (const auto& t : terms_) n = lcm(n, denominator(t.exponent));
    return n;
}

int zpoly_degree(const ZPoly& f) {
    for (std::size_t k = f.size(); k-- > 0;)
        if (!f[k].is_zero()) return static_cast<int>(k);
    return -1;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
Poly2 bareiss_determinant(std::vector<std::vector<Poly2>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly2::one();
    int sign = 1;
    Poly2 prev = Poly2::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Poly2::zero();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly2 t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = divide_exact(t, prev);
                if (!q) throw InternalError("Bareiss division not exact");
                m[i][j] = *q;
            }
            m[i][k] = Poly2::zero();
        }
        prev = m[k][k];
    }
    Poly2 det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Poly2 sylvester_resultant(const ZPoly& f, const ZPoly& g) {
    const int df = zpoly_degree(f);
    const int dg = zpoly_degree(g);
    if (df < 0 || dg < 0) throw DomainError("resultant of the zero polynomial");
    if (df == 0 && dg == 0) throw DomainError("nothing to eliminate");
    if (df == 0) return f[0].pow(static_cast<unsigned>(dg));
    if (dg == 0) return g[0].pow(static_cast<unsigned>(df));

    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Poly2>> m(n, std::vector<Poly2>(n, Poly2::zero()));
    // dg rows of f's coefficients, then df rows of g's, highest degree first.
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[r][r + k] = f[static_cast<std::size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) m[dg + r][r + k] = g[static_cast<std::size_t>(dg - k)];
    return bareiss_determinant(std::move(m));
}

}  // namespace pbcert
