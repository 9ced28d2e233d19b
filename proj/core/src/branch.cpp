#include "pbcert/branch.hpp"

#include <map>
#include <utility>
#include <vector>

#include "pbcert/errors.hpp"

namespace pbcert {

namespace {

// Exponent map of a finite expansion in t (rational exponents).
using Series = std::map<Rational, Rational>;

Series series_mul(const Series& a, const Series& b) {
    Series r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rational& slot = r[ea + eb];
            slot += ca * cb;
            if (slot == 0) r.erase(ea + eb);
        }
    return r;
}

struct UKey {
    long long upow;
    Rational texp;
    bool operator<(const UKey& o) const {
        if (upow != o.upow) return upow < o.upow;
        return texp < o.texp;
    }
};

// Substitute x = orientation * t, y = phi(t) + side * u into f and collect
// the finite sum of c * t^q * u^k terms.
std::map<UKey, Rational> expand(const Poly2& f, const BranchPoint& alpha) {
    const int side_sign = alpha.side == Side::above ? 1 : (alpha.side == Side::below ? -1 : 0);
    const unsigned maxy = f.degree_y();

    Series phi;
    for (const auto& term : alpha.series.terms()) phi[term.exponent] = term.coeff;
    std::vector<Series> phi_pow(maxy + 1);
    phi_pow[0] = Series{{Rational(0), Rational(1)}};
    for (unsigned j = 1; j <= maxy; ++j) phi_pow[j] = series_mul(phi_pow[j - 1], phi);

    // Pascal triangle up to maxy.
    std::vector<std::vector<Int>> binom(maxy + 1);
    for (unsigned j = 0; j <= maxy; ++j) {
        binom[j].assign(j + 1, Int(1));
        for (unsigned k = 1; k < j; ++k) binom[j][k] = binom[j - 1][k - 1] + binom[j - 1][k];
    }

    std::map<UKey, Rational> out;
    auto put = [&out](long long k, const Rational& q, const Rational& c) {
        if (c == 0) return;
        const UKey key{k, q};
        Rational& slot = out[key];
        slot += c;
        if (slot == 0) out.erase(key);
    };

    for (const auto& [m, c] : f.terms()) {
        const Rational xfac = (alpha.orientation < 0 && m.dx % 2 == 1) ? Rational(-c) : c;
        const Rational xexp(m.dx);
        if (side_sign == 0) {
            for (const auto& [e, cc] : phi_pow[m.dy]) put(0, xexp + e, xfac * cc);
            continue;
        }
        for (unsigned k = 0; k <= m.dy; ++k) {
            Rational factor = xfac * Rational(binom[m.dy][k]);
            if (side_sign < 0 && k % 2 == 1) factor = -factor;
            for (const auto& [e, cc] : phi_pow[m.dy - k])
                put(static_cast<long long>(k), xexp + e, factor * cc);
        }
    }
    return out;
}

LeadingData leading_of_expansion(const std::map<UKey, Rational>& ex) {
    if (ex.empty()) return LeadingData{ExtValue::infinity(), Rational(0)};
    const auto& [key, coeff] = *ex.begin();
    return LeadingData{ExtValue(key.upow, key.texp), coeff};
}

}  // namespace

LeadingData leading_at_branch(const Poly2& f, const BranchPoint& alpha) {
    return leading_of_expansion(expand(f, alpha));
}

LeadingData leading_at_branch(const RatFunc2& f, const BranchPoint& alpha) {
    const LeadingData den = leading_at_branch(f.den(), alpha);
    if (den.coeff == 0) {
        if (alpha.side == Side::on) throw DomainError("pole along branch");
        throw InternalError("zero denominator survived normalization");
    }
    const LeadingData num = leading_at_branch(f.num(), alpha);
    if (num.coeff == 0) return LeadingData{ExtValue::infinity(), Rational(0)};
    return LeadingData{num.value - den.value, num.coeff / den.coeff};
}

SignValue eval_at_branch(const Poly2& f, const BranchPoint& alpha) {
    const LeadingData d = leading_at_branch(f, alpha);
    return SignValue{d.sign(), d.value};
}

SignValue eval_at_branch(const RatFunc2& f, const BranchPoint& alpha) {
    const LeadingData d = leading_at_branch(f, alpha);
    return SignValue{d.sign(), d.value};
}

Poly2 oriented_curve_equation(const PuiseuxPoly& phi, int orientation) {
    const Int ram = phi.ramification_index();
    if (ram > 64) throw DomainError("ramification index too large");
    const unsigned n = static_cast<unsigned>(ram);

    // f = z^N - orientation * x
    ZPoly f(n + 1, Poly2::zero());
    f[n] = Poly2::one();
    f[0] = Rational(-orientation) * Poly2::var_x();

    // g = y - phi_hat(z), exponent q rewritten as z^(qN)
    unsigned gdeg = 0;
    for (const auto& term : phi.terms()) {
        const Rational e = term.exponent * Rational(ram);
        if (denominator(e) != 1) throw InternalError("ramification index is not common");
        gdeg = std::max(gdeg, static_cast<unsigned>(numerator(e)));
    }
    ZPoly g(gdeg + 1, Poly2::zero());
    g[0] = Poly2::var_y();
    for (const auto& term : phi.terms()) {
        const unsigned e = static_cast<unsigned>(numerator(term.exponent * Rational(ram)));
        g[e] += Poly2(-term.coeff);
    }

    Poly2 res = normalize_primitive(sylvester_resultant(f, g));
    // Fix the sign so the graded-lex minimal term is positive (the tangent
    // term of a germ through the origin, e.g. y - x^2 rather than x^2 - y).
    if (res.terms().begin()->second < 0) res = -res;
    return res;
}

Poly2 curve_equation(const PuiseuxPoly& phi) { return oriented_curve_equation(phi, +1); }

CenterRelation common_center(const BranchPoint&, const BranchPoint&) {
    return CenterRelation::origin;
}

}  // namespace pbcert
