#pragma once

// Test-only oracles, independent of the evaluation paths they check.

#include <random>
#include <vector>

#include "pbcert/branch.hpp"
#include "pbcert/poly.hpp"

namespace pbcert::oracles {

// Hierarchical-epsilon sign oracle: substitute concrete rationals
// t = eta^N (eta = 1/1000) and u = eta^E with E beyond every exponent that
// can appear after substitution, and read off the exact sign numerically.
// Valid for the modest degrees and coefficients of the test corpus.
inline int numeric_sign(const Poly2& f, const BranchPoint& b) {
    const Rational eta = Rational(1) / Rational(1000);
    const unsigned n = static_cast<unsigned>(b.series.ramification_index());

    unsigned max_exp_num = 1;  // numerator of the largest series exponent, in 1/N units
    for (const auto& term : b.series.terms()) {
        const Rational e = term.exponent * Rational(n);
        max_exp_num = std::max(max_exp_num, static_cast<unsigned>(numerator(e)));
    }
    const unsigned bound = n * f.degree_x() + max_exp_num * f.degree_y();
    const unsigned offset_exp = bound + 2;

    const Rational x = Rational(b.orientation) * rational_pow(eta, n);
    Rational y(0);
    for (const auto& term : b.series.terms()) {
        const Rational e = term.exponent * Rational(n);
        y += term.coeff * rational_pow(eta, static_cast<unsigned long>(numerator(e)));
    }
    if (b.side == Side::above) y += rational_pow(eta, offset_exp);
    if (b.side == Side::below) y -= rational_pow(eta, offset_exp);
    return sign_of(f.eval(x, y));
}

inline Poly2 random_poly(std::mt19937_64& rng, unsigned max_deg, long coeff_range,
                         unsigned max_terms, bool allow_zero = false) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    for (;;) {
        Poly2 p;
        const unsigned k = nterms(rng);
        for (unsigned i = 0; i < k; ++i) {
            const unsigned d = deg(rng);
            std::uniform_int_distribution<unsigned> split(0, d);
            const unsigned dx = split(rng);
            long c = coeff(rng);
            p.add_term(Mono{dx, d - dx}, Rational(c));
        }
        if (allow_zero || !p.is_zero()) return p;
    }
}

inline BranchPoint random_branch(std::mt19937_64& rng, bool allow_on = true) {
    std::uniform_int_distribution<int> flip(0, 1);
    std::uniform_int_distribution<unsigned> ram(1, 3);
    std::uniform_int_distribution<unsigned> nterms(0, 3);
    std::uniform_int_distribution<unsigned> gap(1, 2);
    std::uniform_int_distribution<int> coeff_pick(0, 5);
    static const char* kCoeffs[] = {"-2", "-1", "-1/2", "1/2", "1", "2"};

    const unsigned n = ram(rng);
    std::vector<PuiseuxTerm> terms;
    unsigned num = 0;
    const unsigned k = nterms(rng);
    for (unsigned i = 0; i < k; ++i) {
        num += gap(rng);
        terms.push_back(PuiseuxTerm{make_rational(num, n),
                                    parse_rational(kCoeffs[coeff_pick(rng)])});
    }
    Side side = Side::above;
    const int which = flip(rng) + (allow_on ? flip(rng) * 2 : 0);
    if (which == 1) side = Side::below;
    if (which >= 2) side = Side::on;
    // The 'on' side needs a nonempty series to define a curve germ other
    // than the axis; the empty series is fine for above/below.
    if (side == Side::on && terms.empty()) side = Side::above;
    return BranchPoint{flip(rng) ? 1 : -1, PuiseuxPoly(std::move(terms)), side};
}

}  // namespace pbcert::oracles
