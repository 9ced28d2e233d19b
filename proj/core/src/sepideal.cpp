#include "pbcert/sepideal.hpp"

#include <algorithm>

#include "pbcert/errors.hpp"

namespace pbcert {

namespace {

/// Orient c so that it is >= 0 at alpha and <= 0 at beta; the input must
/// change sign weakly between the points.
Poly2 orient_changer(const Poly2& c, const BranchPoint& alpha, const BranchPoint& beta) {
    const int sa = eval_at_branch(c, alpha).sign;
    const int sb = eval_at_branch(c, beta).sign;
    if (sa >= 0 && sb <= 0) return c;
    if (sa <= 0 && sb >= 0) return -c;
    throw InternalError("element does not change sign between the points");
}

bool same_germ(const BranchPoint& a, const BranchPoint& b) {
    return a.orientation == b.orientation && a.series == b.series;
}

std::optional<Rational> cancel_ratio(const LeadingData& first, const LeadingData& second) {
    if (first.value.infinite || second.value.infinite) return std::nullopt;
    if (!(first.value == second.value)) return std::nullopt;
    return Rational(-first.coeff / second.coeff);
}

void add_cancel_ratios(std::vector<Rational>& ds, const LeadingData& a1, const LeadingData& a2,
                       const LeadingData& b1, const LeadingData& b2) {
    const auto da = cancel_ratio(a1, a2);
    const auto db = cancel_ratio(b1, b2);
    for (const auto& d : {da, db}) {
        if (!d) continue;
        ds.push_back(*d);
        ds.push_back(*d + 1);
        ds.push_back(*d - 1);
    }
    if (da && db) ds.push_back((*da + *db) / 2);
}

/// A sign changer of minimal value among the generators and their pencils:
/// any minimal-value changer's two leading coefficients are matched by a
/// constant-coefficient pencil, so this search is exhaustive for signs.
Poly2 minimal_changer(const std::vector<Poly2>& gens, const ExtValue& threshold,
                      const BranchPoint& alpha, const BranchPoint& beta,
                      const std::optional<Poly2>& fallback) {
    std::vector<Poly2> candidates = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            std::vector<Rational> ds = {Rational(1), Rational(-1)};
            add_cancel_ratios(ds, leading_at_branch(gens[i], alpha),
                              leading_at_branch(gens[j], alpha),
                              leading_at_branch(gens[i], beta),
                              leading_at_branch(gens[j], beta));
            for (const Rational& d : ds) {
                if (d == 0) continue;
                candidates.push_back(gens[i] + d * gens[j]);
            }
        }
    if (fallback) candidates.push_back(*fallback);
    for (const Poly2& c : candidates) {
        const SignValue sa = eval_at_branch(c, alpha);
        if (!(sa.value == threshold)) continue;
        const SignValue sb = eval_at_branch(c, beta);
        if (sa.sign > 0 && sb.sign <= 0) return c;
        if (sa.sign < 0 && sb.sign >= 0) return -c;
    }
    throw InternalError("no minimal-value sign changer among generator pencils");
}

}  // namespace

SeparatingIdeal separating_ideal(const BranchPoint& alpha, const BranchPoint& beta,
                                 unsigned max_steps) {
    SeparatingIdeal S;
    if (alpha == beta) {
        S.kind = IdealKind::zero;
        S.threshold = ExtValue::infinity();
        return S;
    }
    if (same_germ(alpha, beta)) {
        // Same oriented germ, different side flags: the ideal is the
        // principal prime of the curve (a curve element has sign 0 on the
        // 'on' point and strict opposite signs on the two sides).
        S.kind = IdealKind::height_one;
        S.curve = oriented_curve_equation(alpha.series, alpha.orientation);
        S.generators = {*S.curve};
        S.threshold = eval_at_branch(*S.curve, alpha).value;
        S.changer = orient_changer(*S.curve, alpha, beta);
        return S;
    }

    S.kind = IdealKind::height_two;
    S.chain = run_chain(alpha, beta, max_steps);
    std::vector<Poly2> gens = {Poly2::var_x(), Poly2::var_y()};
    for (std::size_t i = S.chain->charts.size(); i-- > 1;)
        gens = inverse_transform_ideal_reduced(gens, S.chain->charts[i]);
    const Chart& c0 = S.chain->charts.front();
    for (Poly2& g : gens) {
        const RatFunc2 r = substitute(g, c0.x_param, c0.y_param);
        if (!r.is_polynomial()) throw InternalError("generator fold left a denominator");
        g = r.num();
    }
    S.generators = std::move(gens);
    bool first = true;
    for (const Poly2& g : S.generators) {
        const ExtValue v = eval_at_branch(g, alpha).value;
        if (first || v < S.threshold) S.threshold = v;
        first = false;
    }
    S.changer = orient_changer(
        minimal_changer(S.generators, S.threshold, alpha, beta, S.chain->witness_root), alpha,
        beta);
    return S;
}

bool member(const Poly2& g, const SeparatingIdeal& S, const BranchPoint& alpha,
            const BranchPoint& /*beta*/) {
    switch (S.kind) {
        case IdealKind::zero:
            return eval_at_branch(g, alpha).value == ExtValue::infinity();
        case IdealKind::height_one:
            return divides(*S.curve, g);
        case IdealKind::height_two:
            return eval_at_branch(g, alpha).value >= S.threshold;
        case IdealKind::unit:
            return true;
    }
    throw InternalError("unknown ideal kind");
}

Poly2 h_witness(const Poly2& a, const SeparatingIdeal& S, const BranchPoint& alpha,
                const BranchPoint& beta) {
    const LeadingData la = leading_at_branch(a, alpha);
    if (la.sign() < 0) throw DomainError("h_witness requires a(alpha) >= 0");
    if (!member(a, S, alpha, beta)) throw DomainError("h_witness requires a member of the ideal");
    if (a.is_zero()) return Poly2::zero();

    const Poly2 b = S.changer ? *S.changer : a;
    const LeadingData lb = leading_at_branch(b, alpha);
    Rational lambda(1);
    if (!la.value.infinite && !lb.value.infinite && la.value == lb.value && lb.coeff != 0)
        lambda = abs_of(la.coeff / lb.coeff) + 1;

    for (int attempt = 0; attempt <= 16; ++attempt) {
        const Poly2 h = lambda * b;
        const int s1 = eval_at_branch(h - a, alpha).sign;
        const int s2 = eval_at_branch(h, beta).sign;
        if (s1 >= 0 && s2 <= 0) return h;
        lambda *= 2;
    }
    throw InternalError("no witness found");
}

Specialization common_specialization(const BranchPoint& alpha, const BranchPoint& /*beta*/,
                                     const SeparatingIdeal& S) {
    Specialization sp;
    switch (S.kind) {
        case IdealKind::zero:
            sp.kind = Specialization::Kind::point;
            sp.gamma = alpha;
            return sp;
        case IdealKind::height_one:
            sp.kind = Specialization::Kind::curve_point;
            sp.curve = S.curve;
            sp.gamma = BranchPoint{alpha.orientation, alpha.series, Side::on};
            return sp;
        case IdealKind::height_two:
            sp.kind = Specialization::Kind::origin;
            return sp;
        case IdealKind::unit:
            throw DomainError("the unit ideal has no common specialization");
    }
    throw InternalError("unknown ideal kind");
}

MonomialFactorization monomial_factor_checked(const Poly2& g, const SeparatingIdeal& S,
                                              const BranchPoint& alpha, const BranchPoint& beta) {
    if (member(g, S, alpha, beta)) throw DomainError("not a unit: g lies in the separating ideal");
    if (S.kind != IdealKind::height_two || !S.chain)
        throw DomainError("monomial factorization requires a height-two pair");
    return monomial_factor(g, *S.chain);
}

namespace {

std::vector<Mono> monomials_up_to(unsigned degree_cap) {
    std::vector<Mono> ms;
    for (unsigned d = 0; d <= degree_cap; ++d)
        for (unsigned dx = d + 1; dx-- > 0;) ms.push_back(Mono{dx, d - dx});
    std::sort(ms.begin(), ms.end(), [](const Mono& a, const Mono& b) { return MonoLess{}(a, b); });
    return ms;
}

}  // namespace

OracleResult signchanger_oracle(const BranchPoint& alpha, const BranchPoint& beta,
                                unsigned degree_cap, long coeff_range, unsigned support_cap) {
    if (alpha == beta) throw DomainError("oracle requires distinct points");
    if (coeff_range < 1) throw DomainError("oracle coefficient range must be positive");
    const std::vector<Mono> ms = monomials_up_to(degree_cap);

    std::vector<Rational> coeff_values;
    for (long c = -coeff_range; c <= coeff_range; ++c)
        if (c != 0) coeff_values.emplace_back(c);

    std::optional<OracleResult> best;
    std::vector<std::size_t> support;

    auto consider = [&](const Poly2& p) {
        const SignValue sa = eval_at_branch(p, alpha);
        const SignValue sb = eval_at_branch(p, beta);
        if (!(sa.sign >= 0 && sb.sign <= 0)) return;
        if (sa.sign == 0 && sb.sign == 0) return;
        if (!best || sa.value < best->min_value) best = OracleResult{sa.value, p};
    };

    // Odometer over coefficient assignments for one support set.
    auto scan_support = [&]() {
        std::vector<std::size_t> idx(support.size(), 0);
        while (true) {
            Poly2 p;
            for (std::size_t k = 0; k < support.size(); ++k)
                p.add_term(ms[support[k]], coeff_values[idx[k]]);
            consider(p);
            std::size_t k = 0;
            while (k < idx.size()) {
                if (++idx[k] < coeff_values.size()) break;
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size()) break;
        }
    };

    // Lexicographic combinations of each size up to the support cap.
    auto combos = [&](auto&& self, std::size_t start, unsigned remaining) -> void {
        if (remaining == 0) {
            scan_support();
            return;
        }
        for (std::size_t i = start; i + remaining <= ms.size() + 1 && i < ms.size(); ++i) {
            support.push_back(i);
            self(self, i + 1, remaining - 1);
            support.pop_back();
        }
    };
    for (unsigned size = 1; size <= support_cap; ++size) combos(combos, 0, size);

    if (!best) throw LimitError("oracle inconclusive");
    return *best;
}

}  // namespace pbcert
