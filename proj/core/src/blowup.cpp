#include "pbcert/blowup.hpp"

#include <algorithm>
#include <set>

#include "pbcert/errors.hpp"

namespace pbcert {

namespace {

bool positive(const ExtValue& v) { return v > ExtValue(0, Rational(0)); }

/// Flip the sign of one chart coordinate consistently across the chart data.
void apply_flip(Chart& c, bool flip_x, bool flip_y) {
    if (!flip_x && !flip_y) return;
    const Poly2 sx = flip_x ? -Poly2::var_x() : Poly2::var_x();
    const Poly2 sy = flip_y ? -Poly2::var_y() : Poly2::var_y();
    if (flip_x) {
        c.x_param = -c.x_param;
        c.step_up_x = -c.step_up_x;
        c.sign_x = -c.sign_x;
    }
    if (flip_y) {
        c.y_param = -c.y_param;
        c.step_up_y = -c.step_up_y;
        c.sign_y = -c.sign_y;
    }
    // Polynomials in this chart's coordinates see the substitution x -> -x.
    c.down_x = substitute_poly(c.down_x, sx, sy);
    c.down_y = substitute_poly(c.down_y, sx, sy);
    c.step_down_x = substitute_poly(c.step_down_x, sx, sy);
    c.step_down_y = substitute_poly(c.step_down_y, sx, sy);
}

/// Exchange the two chart coordinates consistently.
void apply_swap(Chart& c) {
    std::swap(c.x_param, c.y_param);
    std::swap(c.step_up_x, c.step_up_y);
    std::swap(c.sign_x, c.sign_y);
    c.down_x = c.down_x.swap_vars();
    c.down_y = c.down_y.swap_vars();
    c.step_down_x = c.step_down_x.swap_vars();
    c.step_down_y = c.step_down_y.swap_vars();
}

/// Re-establish v(x) <= v(y) and positive signs at alpha on a chart.
Chart normalized(Chart c, const BranchPoint& alpha) {
    LeadingData lx = leading_at_branch(c.x_param, alpha);
    LeadingData ly = leading_at_branch(c.y_param, alpha);
    if (lx.value > ly.value) {
        apply_swap(c);
        std::swap(lx, ly);
    }
    apply_flip(c, lx.sign() < 0, ly.sign() < 0);
    return c;
}

}  // namespace

Chart root_chart(const BranchPoint& alpha) { return normalized(Chart{}, alpha); }

Chart blowup_step(const Chart& chart, const BranchPoint& alpha) {
    const Chart cur = normalized(chart, alpha);
    const LeadingData lx = leading_at_branch(cur.x_param, alpha);
    const LeadingData ly = leading_at_branch(cur.y_param, alpha);
    if (!positive(lx.value) || !positive(ly.value))
        throw DomainError("valuation not centered in chart");

    const RatFunc2 quot = cur.y_param / cur.x_param;
    const Poly2 X = Poly2::var_x();
    const Poly2 Y = Poly2::var_y();

    Chart next;
    next.index = cur.index + 1;
    if (lx.value < ly.value) {
        const ExtValue vq = ly.value - lx.value;
        if (lx.value <= vq) {
            next.step_case = StepCase::I1;
            next.x_param = cur.x_param;
            next.y_param = quot;
            next.step_down_x = X;
            next.step_down_y = X * Y;
            next.step_up_x = RatFunc2::var_x();
            next.step_up_y = RatFunc2::var_y() / RatFunc2::var_x();
        } else {
            next.step_case = StepCase::I2;
            next.x_param = quot;
            next.y_param = cur.x_param;
            next.step_down_x = Y;
            next.step_down_y = X * Y;
            next.step_up_x = RatFunc2::var_y() / RatFunc2::var_x();
            next.step_up_y = RatFunc2::var_x();
        }
    } else {
        // v(x) = v(y), both finite: subtract the residue of y/x.
        const Rational u = ly.coeff / lx.coeff;
        const RatFunc2 shifted = quot - RatFunc2(Poly2(u));
        const LeadingData ls = leading_at_branch(shifted, alpha);
        if (!positive(ls.value)) throw InternalError("case II shift did not raise the value");
        next.shift = u;
        if (lx.value <= ls.value) {
            next.step_case = StepCase::II1;
            next.x_param = cur.x_param;
            next.y_param = shifted;
            next.step_down_x = X;
            next.step_down_y = X * (Y + Poly2(u));
            next.step_up_x = RatFunc2::var_x();
            next.step_up_y = RatFunc2::var_y() / RatFunc2::var_x() - RatFunc2(Poly2(u));
        } else {
            next.step_case = StepCase::II2;
            next.x_param = shifted;
            next.y_param = cur.x_param;
            next.step_down_x = Y;
            next.step_down_y = Y * (X + Poly2(u));
            next.step_up_x = RatFunc2::var_y() / RatFunc2::var_x() - RatFunc2(Poly2(u));
            next.step_up_y = RatFunc2::var_x();
        }
    }

    const LeadingData nx = leading_at_branch(next.x_param, alpha);
    const LeadingData ny = leading_at_branch(next.y_param, alpha);
    apply_flip(next, nx.sign() < 0, ny.sign() < 0);
    next.down_x = substitute_poly(cur.down_x, next.step_down_x, next.step_down_y);
    next.down_y = substitute_poly(cur.down_y, next.step_down_x, next.step_down_y);
    return next;
}

namespace {

/// Chart polynomial as a function on the plane.
RatFunc2 on_plane(const Poly2& g, const Chart& chart) {
    return substitute(g, chart.x_param, chart.y_param);
}

/// Ratio at which the leading terms of first + d * second cancel; defined
/// only when the two values tie (and are finite).
std::optional<Rational> cancel_ratio(const LeadingData& first, const LeadingData& second) {
    if (first.value.infinite || second.value.infinite) return std::nullopt;
    if (!(first.value == second.value)) return std::nullopt;
    return Rational(-first.coeff / second.coeff);
}

void add_ratio_family(std::set<Rational>& ds, const LeadingData& a1, const LeadingData& a2,
                      const LeadingData& b1, const LeadingData& b2) {
    const auto da = cancel_ratio(a1, a2);
    const auto db = cancel_ratio(b1, b2);
    for (const auto& d : {da, db}) {
        if (!d) continue;
        ds.insert(*d);
        ds.insert(*d + 1);
        ds.insert(*d - 1);
    }
    // The sign-changing shifts form the interval between the two cancellation
    // ratios; the midpoint witnesses it when both are defined.
    if (da && db) ds.insert((*da + *db) / 2);
}

}  // namespace

std::optional<Poly2> stopping_test(const Chart& chart, const BranchPoint& alpha,
                                   const BranchPoint& beta) {
    const LeadingData xa = leading_at_branch(chart.x_param, alpha);
    const LeadingData ya = leading_at_branch(chart.y_param, alpha);
    const LeadingData xb = leading_at_branch(chart.x_param, beta);
    const LeadingData yb = leading_at_branch(chart.y_param, beta);
    const ExtValue m_val = ext_value_min(xa.value, ya.value);

    std::vector<Poly2> candidates;
    candidates.push_back(Poly2::var_x());
    candidates.push_back(Poly2::var_y());

    std::set<Rational> dx;  // pencil x + d y
    add_ratio_family(dx, xa, ya, xb, yb);
    dx.insert(Rational(1));
    dx.insert(Rational(-1));
    std::set<Rational> dy;  // pencil y + d x
    add_ratio_family(dy, ya, xa, yb, xb);
    dy.insert(Rational(1));
    dy.insert(Rational(-1));

    for (const Rational& d : dx) {
        if (d == 0) continue;
        candidates.push_back(Poly2::var_x() + d * Poly2::var_y());
    }
    for (const Rational& d : dy) {
        if (d == 0) continue;
        candidates.push_back(Poly2::var_y() + d * Poly2::var_x());
    }

    for (const Poly2& c : candidates) {
        const RatFunc2 rf = on_plane(c, chart);
        const SignValue sa = eval_at_branch(rf, alpha);
        if (!(sa.value == m_val)) continue;
        const SignValue sb = eval_at_branch(rf, beta);
        if (sa.sign > 0 && sb.sign <= 0) return c;
        if (sa.sign < 0 && sb.sign >= 0) return -c;
    }
    return std::nullopt;
}

namespace {

/// Strip the denominator of a chart element rewritten one chart down; the
/// denominator is a power of the previous chart's x (the minimal-value
/// element of its maximal ideal).
std::pair<Poly2, unsigned> clear_step_denominator(const Poly2& g, const Chart& source) {
    const RatFunc2 r = substitute(g, source.step_up_x, source.step_up_y);
    const Poly2& den = r.den();
    if (den.term_count() != 1 || den.lead_mono().dy != 0 || den.lead_coeff() != 1)
        throw InternalError("step denominator is not a power of x");
    return {r.num(), den.lead_mono().dx};
}

}  // namespace

std::vector<Poly2> transform_ideal(const std::vector<Poly2>& gens, const Chart& target) {
    if (target.step_case == StepCase::root)
        throw DomainError("the root chart has no incoming transform");
    std::vector<Poly2> up;
    up.reserve(gens.size());
    for (const Poly2& g : gens) {
        if (g.is_zero()) throw DomainError("transform of a zero generator");
        up.push_back(substitute_poly(g, target.step_down_x, target.step_down_y));
    }
    unsigned rho = 0;
    bool first = true;
    for (const Poly2& g : up) {
        const unsigned v = target.exceptional_is_x() ? g.val_x() : g.val_y();
        rho = first ? v : std::min(rho, v);
        first = false;
    }
    for (Poly2& g : up)
        g = target.exceptional_is_x() ? g.shift_down(rho, 0) : g.shift_down(0, rho);
    return up;
}

std::vector<Poly2> inverse_transform_ideal(const std::vector<Poly2>& gens, const Chart& source) {
    if (source.step_case == StepCase::root)
        throw DomainError("the root chart has no outgoing inverse transform");
    std::vector<std::pair<Poly2, unsigned>> cleared;
    cleared.reserve(gens.size());
    unsigned n = 0;
    for (const Poly2& g : gens) {
        if (g.is_zero()) throw DomainError("inverse transform of a zero generator");
        cleared.push_back(clear_step_denominator(g, source));
        n = std::max(n, cleared.back().second);
    }
    std::vector<Poly2> out;
    out.reserve(gens.size());
    for (const auto& [num, d] : cleared) out.push_back(num.shift_up(n - d, 0));
    return out;
}

namespace {

unsigned mono_cost(Mono m, bool x_expensive) { return x_expensive ? m.dx : m.dy; }

/// Term order with the expensive coordinate's degree dominant; the leading
/// monomial under it is the one forcing the clearing exponent.
bool cost_less(Mono a, Mono b, bool x_expensive) {
    const unsigned ca = mono_cost(a, x_expensive), cb = mono_cost(b, x_expensive);
    if (ca != cb) return ca < cb;
    if (a.total() != b.total()) return a.total() < b.total();
    return a.dx < b.dx;
}

Mono cost_lead(const Poly2& p, bool x_expensive) {
    Mono best = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
        if (cost_less(best, m, x_expensive)) best = m;
    return best;
}

bool mono_divides(Mono a, Mono b) { return a.dx <= b.dx && a.dy <= b.dy; }

/// Normal form of g modulo h under the cost order.
Poly2 cost_reduce(Poly2 g, const Poly2& h, bool x_expensive) {
    const Mono lh = cost_lead(h, x_expensive);
    const Rational lc = h.coeff(lh);
    for (int guard = 0; guard < 10000; ++guard) {
        if (g.is_zero()) return g;
        // Highest reducible monomial of g.
        bool found = false;
        Mono target{};
        for (const auto& [m, c] : g.terms()) {
            if (!mono_divides(lh, m)) continue;
            if (!found || cost_less(target, m, x_expensive)) {
                target = m;
                found = true;
            }
        }
        if (!found) return g;
        const Rational factor = g.coeff(target) / lc;
        g -= factor * h.shift_up(target.dx - lh.dx, target.dy - lh.dy);
    }
    throw InternalError("cost reduction did not terminate");
}

/// Reduce the list against itself until stable; the ideal is unchanged and
/// zero remainders are dropped.
void cost_improve(std::vector<Poly2>& gens, bool x_expensive) {
    for (int guard = 0; guard < 1000; ++guard) {
        bool changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Poly2 r = gens[i];
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (j == i || gens[j].is_zero()) continue;
                r = cost_reduce(r, gens[j], x_expensive);
            }
            if (r != gens[i]) {
                gens[i] = r;
                changed = true;
            }
        }
        std::erase_if(gens, [](const Poly2& g) { return g.is_zero(); });
        if (gens.empty()) throw InternalError("generator list reduced to nothing");
        if (!changed) return;
    }
    throw InternalError("generator improvement did not terminate");
}

}  // namespace

std::vector<Poly2> inverse_transform_ideal_reduced(const std::vector<Poly2>& gens,
                                                   const Chart& source) {
    std::vector<Poly2> reduced = gens;
    // The expensive coordinate is the non-exceptional one: its rewrite one
    // chart down is the fraction.
    cost_improve(reduced, /*x_expensive=*/!source.exceptional_is_x());
    return inverse_transform_ideal(reduced, source);
}

Poly2 to_chart(const Poly2& g, const Chart& chart) {
    return substitute_poly(g, chart.down_x, chart.down_y);
}

Poly2 fold_to_root(const Poly2& g, const BlowupChain& chain) {
    Poly2 cur = g;
    for (std::size_t i = chain.charts.size(); i-- > 1;)
        cur = clear_step_denominator(cur, chain.charts[i]).first;
    // Chart-0 coordinates are the plane ones up to swap and sign.
    const Chart& c0 = chain.charts.front();
    const RatFunc2 r = substitute(cur, c0.x_param, c0.y_param);
    if (!r.is_polynomial()) throw InternalError("root chart fold left a denominator");
    return r.num();
}

BlowupChain run_chain(const BranchPoint& alpha, const BranchPoint& beta, unsigned max_steps) {
    if (alpha == beta) throw DomainError("identical branch points have no blow-up chain");
    BlowupChain chain;
    chain.charts.push_back(root_chart(alpha));
    while (true) {
        const Chart& cur = chain.charts.back();
        if (auto w = stopping_test(cur, alpha, beta)) {
            chain.stop_reason = StopReason::separating_ideal_is_maximal;
            chain.witness_chart = *w;
            chain.sign_x_alpha = eval_at_branch(cur.x_param, alpha).sign;
            chain.sign_y_alpha = eval_at_branch(cur.y_param, alpha).sign;
            chain.sign_x_beta = eval_at_branch(cur.x_param, beta).sign;
            chain.sign_y_beta = eval_at_branch(cur.y_param, beta).sign;
            if (!chain.x_nonchanger() && !chain.y_nonchanger())
                throw InternalError("no nonchanging parameter in the final chart");
            chain.witness_root = fold_to_root(chain.witness_chart, chain);
            return chain;
        }
        const SignValue bx = eval_at_branch(cur.x_param, beta);
        const SignValue by = eval_at_branch(cur.y_param, beta);
        if (!positive(bx.value) || !positive(by.value))
            throw InternalError("inconsistent separation: beta left the chart center");
        if (chain.charts.size() > max_steps) {
            chain.stop_reason = StopReason::iteration_limit;
            throw ChainLimitError("blow-up iteration limit reached", chain);
        }
        chain.charts.push_back(blowup_step(cur, alpha));
    }
}

MonomialFactorization monomial_factor(const Poly2& g, const BlowupChain& chain) {
    if (g.is_zero()) throw DomainError("cannot factor the zero polynomial");
    // Walk the chain accumulating the exceptional multiplicities; the
    // per-case rewrite of x_i^s y_i^t in the next chart's coordinates keeps
    // (s, t) a pure monomial (case II absorbs unit factors into w).
    Poly2 cur = to_chart(g, chain.charts.front());
    unsigned a = 0, b = 0;
    for (std::size_t i = 1; i < chain.charts.size(); ++i) {
        const Chart& ch = chain.charts[i];
        Poly2 stepped = substitute_poly(cur, ch.step_down_x, ch.step_down_y);
        const unsigned nu = ch.exceptional_is_x() ? stepped.val_x() : stepped.val_y();
        cur = ch.exceptional_is_x() ? stepped.shift_down(nu, 0) : stepped.shift_down(0, nu);
        switch (ch.step_case) {
            case StepCase::I1: a = a + b + nu; break;
            case StepCase::I2: {
                const unsigned na = b;
                b = a + b + nu;
                a = na;
                break;
            }
            case StepCase::II1:
                a = a + b + nu;
                b = 0;
                break;
            case StepCase::II2:
                b = a + b + nu;
                a = 0;
                break;
            case StepCase::root: throw InternalError("root chart inside a chain tail");
        }
    }

    const Poly2 full = to_chart(g, chain.last());
    if (full.val_x() < a || full.val_y() < b)
        throw InternalError("exceptional multiplicities exceed the pullback");
    MonomialFactorization mf;
    mf.e = a;
    mf.f = b;
    mf.w = full.shift_down(a, b);
    if (mf.w.constant_term() == 0)
        throw DomainError("not a unit: g lies in the separating ideal");
    if ((chain.x_changes_sign() && mf.e != 0) || (chain.y_changes_sign() && mf.f != 0))
        throw DomainError(
            "g lies in the separating ideal: a sign-changing parameter carries a positive "
            "exponent");
    return mf;
}

}  // namespace pbcert
