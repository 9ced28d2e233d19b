#include "pbcert/pbcheck.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "pbcert/errors.hpp"
#include "pbcert/parse.hpp"

namespace pbcert {

namespace {

bool sign_satisfies(int sign, Relation rel) {
    switch (rel) {
        case Relation::ge: return sign >= 0;
        case Relation::le: return sign <= 0;
        case Relation::eq: return sign == 0;
    }
    return false;
}

bool region_holds_at(const SignConditionSet& conds, const BranchPoint& p) {
    for (const auto& cond : conds)
        if (!sign_satisfies(eval_at_branch(cond.poly, p).sign, cond.rel)) return false;
    return true;
}

bool region_holds_at_point(const SignConditionSet& conds, const Rational& x, const Rational& y) {
    for (const auto& cond : conds)
        if (!sign_satisfies(sign_of(cond.poly.eval(x, y)), cond.rel)) return false;
    return true;
}

std::vector<std::size_t> pieces_containing(const PiecewiseFunction& t, const BranchPoint& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.pieces.size(); ++i)
        if (region_holds_at(t.pieces[i].where, p)) out.push_back(i);
    return out;
}

/// side deterministic sample coordinates in (-1,1); a nonzero seed jitters
/// them (densification hook for repeated runs).
std::vector<Rational> grid_coordinates(unsigned side, std::uint64_t seed) {
    std::vector<Rational> out;
    out.reserve(side);
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < side; ++i) {
        Rational c = make_rational(2 * static_cast<long>(i) - static_cast<long>(side) + 1,
                                   static_cast<long>(side));
        if (seed != 0) {
            const long j = static_cast<long>(rng() % 999) - 499;
            c += make_rational(j, 1000L * static_cast<long>(side));
        }
        out.push_back(c);
    }
    return out;
}

unsigned grid_side(unsigned samples) {
    unsigned side = 1;
    while (side * side < samples) ++side;
    return side;
}

}  // namespace

Rational SupInfExpression::eval(const Rational& x, const Rational& y) const {
    if (rows.empty()) throw InternalError("empty sup-inf expression");
    bool first_row = true;
    Rational best;
    for (const auto& row : rows) {
        if (row.empty()) throw InternalError("empty inf row");
        Rational low = row.front().eval(x, y);
        for (std::size_t j = 1; j < row.size(); ++j) low = std::min(low, row[j].eval(x, y));
        if (first_row || low > best) best = low;
        first_row = false;
    }
    return best;
}

std::size_t locate_piece(const PiecewiseFunction& t, const BranchPoint& alpha) {
    for (std::size_t i = 0; i < t.pieces.size(); ++i)
        if (region_holds_at(t.pieces[i].where, alpha)) return i;
    throw DomainError("cover does not contain point");
}

PairCheckResult pw_pair_check(const PiecewiseFunction& t, const BranchPoint& alpha,
                              const BranchPoint& beta, unsigned max_steps) {
    const SeparatingIdeal S = separating_ideal(alpha, beta, max_steps);
    const Poly2& ta = t.pieces[locate_piece(t, alpha)].value;
    const Poly2& tb = t.pieces[locate_piece(t, beta)].value;
    PairCheckResult r;
    r.difference = ta - tb;
    r.value = eval_at_branch(r.difference, alpha).value;
    r.threshold = S.threshold;
    r.pass = member(r.difference, S, alpha, beta);
    return r;
}

ChainTransferResult chain_transfer(const PiecewiseFunction& t, const BranchPoint& alpha,
                                   const BranchPoint& beta,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& adjacency,
                                   unsigned max_steps) {
    const std::size_t n = t.pieces.size();
    const SeparatingIdeal S = separating_ideal(alpha, beta, max_steps);

    // Prune the edges whose difference leaves the ideal (the set T of the
    // transfer argument), then search the remainder.
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : adjacency) {
        if (a >= n || b >= n) throw DomainError("adjacency index out of range");
        if (a == b) continue;
        if (!member(t.pieces[a].value - t.pieces[b].value, S, alpha, beta)) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    const std::vector<std::size_t> sources = pieces_containing(t, alpha);
    const std::vector<std::size_t> targets = pieces_containing(t, beta);
    if (sources.empty() || targets.empty()) throw DomainError("cover does not contain point");

    std::vector<int> parent(n, -2);  // -2 unseen, -1 source
    std::deque<std::size_t> queue;
    for (std::size_t s : sources) {
        parent[s] = -1;
        queue.push_back(s);
    }
    std::optional<std::size_t> hit;
    while (!queue.empty() && !hit) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (std::find(targets.begin(), targets.end(), v) != targets.end()) {
            hit = v;
            break;
        }
        for (std::size_t w : adj[v]) {
            if (parent[w] != -2) continue;
            parent[w] = static_cast<int>(v);
            queue.push_back(w);
        }
    }

    ChainTransferResult out;
    for (std::size_t i = 0; i < n; ++i)
        if (parent[i] != -2) out.reachable.push_back(i);

    if (!hit) {
        // F/G partition: the reachable set K is closed under unpruned edges.
        out.ok = false;
        return out;
    }

    std::vector<std::size_t> chain;
    for (int v = static_cast<int>(*hit); v != -1; v = parent[static_cast<std::size_t>(v)])
        chain.push_back(static_cast<std::size_t>(v));
    std::reverse(chain.begin(), chain.end());

    ChainCertificate cert;
    cert.chain = chain;
    cert.t_alpha_index = chain.front();
    cert.t_beta_index = chain.back();
    Poly2 telescope;
    for (std::size_t q = 0; q + 1 < chain.size(); ++q) {
        Poly2 diff = t.pieces[chain[q]].value - t.pieces[chain[q + 1]].value;
        if (!member(diff, S, alpha, beta))
            throw InternalError("pruned adjacency admitted a non-member difference");
        telescope += diff;
        cert.differences.push_back(std::move(diff));
    }
    const Poly2 direct = t.pieces[cert.t_alpha_index].value - t.pieces[cert.t_beta_index].value;
    if (telescope != direct) throw InternalError("telescoping identity failed");
    if (!member(direct, S, alpha, beta))
        throw InternalError("certificate does not imply direct membership");
    out.ok = true;
    out.certificate = std::move(cert);
    return out;
}

AssembleResult assemble_supinf(const PiecewiseFunction& t, const std::vector<BranchPoint>& points,
                               const std::vector<std::vector<Poly2>>& witnesses,
                               const SampleOptions& opts) {
    const std::size_t n = points.size();
    if (n == 0) throw DomainError("assemble_supinf needs at least one point");
    if (witnesses.size() != n) throw DomainError("witness matrix must be square over the points");
    for (const auto& row : witnesses)
        if (row.size() != n) throw DomainError("witness matrix must be square over the points");

    std::vector<Poly2> tp(n);
    for (std::size_t i = 0; i < n; ++i) tp[i] = t.pieces[locate_piece(t, points[i])].value;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Poly2& h = witnesses[i][j];
            if (eval_at_branch(h - tp[i], points[i]).sign < 0)
                throw DomainError("witness sign verification failed at (" + std::to_string(i) +
                                  "," + std::to_string(j) + "): h < t at the row point");
            if (eval_at_branch(h - tp[j], points[j]).sign > 0)
                throw DomainError("witness sign verification failed at (" + std::to_string(i) +
                                  "," + std::to_string(j) + "): h > t at the column point");
        }

    AssembleResult out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Poly2> row;
        for (const Poly2& h : witnesses[i])
            if (std::find(row.begin(), row.end(), h) == row.end()) row.push_back(h);
        if (std::find(out.expression.rows.begin(), out.expression.rows.end(), row) ==
            out.expression.rows.end())
            out.expression.rows.push_back(std::move(row));
    }

    // At each supplied point every row-inf is <= t (its column entry) and the
    // row of the point itself is >= t, so the sup is exact there. Decide the
    // sup/inf branches by exact sign comparisons at the branch point.
    for (std::size_t i = 0; i < n; ++i) {
        const BranchPoint& p = points[i];
        auto less_at = [&p](const Poly2& a, const Poly2& b) {
            return eval_at_branch(a - b, p).sign < 0;
        };
        bool first_row = true;
        Poly2 best;
        for (const auto& row : out.expression.rows) {
            Poly2 low = row.front();
            for (std::size_t j = 1; j < row.size(); ++j)
                if (less_at(row[j], low)) low = row[j];
            if (first_row || less_at(best, low)) best = low;
            first_row = false;
        }
        if (eval_at_branch(best - tp[i], p).sign != 0)
            throw InternalError("assembled expression differs from t at a supplied point");
    }

    // Grid agreement inside each piece, reported as warnings only.
    const unsigned side = grid_side(opts.samples);
    const std::vector<Rational> coords = grid_coordinates(side, opts.seed);
    for (std::size_t k = 0; k < t.pieces.size(); ++k) {
        for (const Rational& gx : coords)
            for (const Rational& gy : coords) {
                if (!region_holds_at_point(t.pieces[k].where, gx, gy)) continue;
                const Rational expected = t.pieces[k].value.eval(gx, gy);
                const Rational got = out.expression.eval(gx, gy);
                if (expected != got)
                    out.warnings.push_back("piece " + std::to_string(k) + " at (" +
                                           rational_to_string(gx) + ", " + rational_to_string(gy) +
                                           "): expression " + rational_to_string(got) +
                                           " != piece value " + rational_to_string(expected));
            }
    }
    return out;
}

std::vector<std::string> piecewise_compatibility_warnings(const PiecewiseFunction& t,
                                                          const SampleOptions& opts) {
    std::vector<std::string> warnings;
    const unsigned side = grid_side(opts.samples);
    const std::vector<Rational> coords = grid_coordinates(side, opts.seed);
    for (const Rational& gx : coords)
        for (const Rational& gy : coords)
            for (std::size_t i = 0; i < t.pieces.size(); ++i) {
                if (!region_holds_at_point(t.pieces[i].where, gx, gy)) continue;
                for (std::size_t j = i + 1; j < t.pieces.size(); ++j) {
                    if (!region_holds_at_point(t.pieces[j].where, gx, gy)) continue;
                    if (t.pieces[i].value.eval(gx, gy) != t.pieces[j].value.eval(gx, gy))
                        warnings.push_back("pieces " + std::to_string(i) + " and " +
                                           std::to_string(j) + " disagree at (" +
                                           rational_to_string(gx) + ", " +
                                           rational_to_string(gy) + ")");
                }
            }
    return warnings;
}

namespace {

/// Largest power of two s with 2 s^2 <= epsilon (an inscribed-square radius).
Rational inscribed_radius(const Rational& epsilon) {
    Rational s(1);
    while (2 * s * s > epsilon) s /= 2;
    return s;
}

Rational ball_bound_epsilon(const std::vector<WitnessSet::MonomialData>& factors) {
    Rational eps(1);
    for (;;) {
        bool ok = true;
        for (const auto& md : factors) {
            Rational tail(0);
            for (const auto& [m, c] : md.w.terms()) {
                if (m == Mono{0, 0}) continue;
                tail += abs_of(c) * rational_pow(eps, m.total());
            }
            if (!(tail < abs_of(md.w.constant_term()))) {
                ok = false;
                break;
            }
        }
        if (ok) return eps;
        eps /= 2;
        if (eps == 0) throw InternalError("ball bound collapsed to zero");
    }
}

}  // namespace

WitnessSet connectedness_witness(const BranchPoint& alpha, const BranchPoint& beta,
                                 const std::vector<Poly2>& gs, const SampleOptions& opts,
                                 unsigned max_steps) {
    const SeparatingIdeal S = separating_ideal(alpha, beta, max_steps);
    // For a height-two pair, admissibility of a g is decided by its monomial
    // factorization below (a unit cofactor is exactly what the region needs;
    // the factorization errors otherwise). The height-one and degenerate
    // paths use plain membership, where the ideal is radical.
    if (S.kind != IdealKind::height_two)
        for (const Poly2& g : gs)
            if (member(g, S, alpha, beta)) throw DomainError("g lies in the separating ideal");

    WitnessSet ws;
    if (S.kind == IdealKind::zero) {
        // Coinciding points: the singleton {alpha} already meets the
        // connectedness condition; report the nonvanishing signs.
        ws.kind = WitnessSet::Kind::single_point;
        ws.gamma = alpha;
        for (const Poly2& g : gs)
            if (eval_at_branch(g, alpha).sign == 0) ws.all_nonzero = false;
        return ws;
    }

    if (S.kind == IdealKind::height_two) {
        ws.kind = WitnessSet::Kind::chart_ball;
        const BlowupChain& chain = *S.chain;
        ws.r = chain.r();
        ws.map_x = chain.last().down_x;
        ws.map_y = chain.last().down_y;
        if (chain.x_nonchanger()) ws.positive.push_back("x");
        if (chain.y_nonchanger()) ws.positive.push_back("y");
        for (const Poly2& g : gs) {
            const MonomialFactorization mf = monomial_factor(g, chain);
            ws.factors.push_back(WitnessSet::MonomialData{g, mf.e, mf.f, mf.w});
        }
        ws.epsilon = ball_bound_epsilon(ws.factors);

        // alpha and beta satisfy the region conditions exactly.
        const Chart& last = chain.last();
        const RatFunc2 ball = RatFunc2(Poly2(ws.epsilon)) -
                              last.x_param * last.x_param - last.y_param * last.y_param;
        for (const BranchPoint* p : {&alpha, &beta}) {
            if (eval_at_branch(ball, *p).sign != 1)
                throw InternalError("point fails the ball condition");
            if (chain.x_nonchanger() && eval_at_branch(last.x_param, *p).sign != 1)
                throw InternalError("point fails a positivity condition");
            if (chain.y_nonchanger() && eval_at_branch(last.y_param, *p).sign != 1)
                throw InternalError("point fails a positivity condition");
        }

        const unsigned side = grid_side(opts.samples);
        const Rational s = inscribed_radius(ws.epsilon);
        std::mt19937_64 rng(opts.seed);
        auto coordinates = [&](bool constrained) {
            std::vector<Rational> cs;
            for (unsigned i = 1; i <= side; ++i) {
                Rational c = constrained
                                 ? Rational(i) / Rational(side + 1)
                                 : make_rational(2 * static_cast<long>(i) - static_cast<long>(side) - 1,
                                                 static_cast<long>(side) + 1);
                if (opts.seed != 0) {
                    const long j = static_cast<long>(rng() % 999);
                    c += (constrained ? Rational(j) : Rational(j - 499)) /
                         Rational(4000L * (static_cast<long>(side) + 1));
                }
                cs.push_back(c * s);
            }
            return cs;
        };
        const std::vector<Rational> xs = coordinates(chain.x_nonchanger());
        const std::vector<Rational> ys = coordinates(chain.y_nonchanger());
        for (const Rational& cx : xs)
            for (const Rational& cy : ys) {
                WitnessSet::Sample sample;
                sample.cx = cx;
                sample.cy = cy;
                sample.px = ws.map_x.eval(cx, cy);
                sample.py = ws.map_y.eval(cx, cy);
                for (const Poly2& g : gs) {
                    const Rational v = g.eval(sample.px, sample.py);
                    if (v == 0) ws.all_nonzero = false;
                    sample.g_values.push_back(v);
                }
                ws.samples.push_back(std::move(sample));
            }
        return ws;
    }

    // Height one: the component of the complement of {prod g = 0} through the
    // common specialization; sample the curve germ and both sides.
    ws.kind = WitnessSet::Kind::curve_component;
    ws.curve = S.curve;
    ws.gamma = common_specialization(alpha, beta, S).gamma;
    Poly2 product = Poly2::one();
    for (const Poly2& g : gs) product *= g;
    ws.product = product;

    const Int ram = alpha.series.ramification_index();
    const unsigned n = static_cast<unsigned>(ram);
    Rational max_exp(1);
    for (const auto& term : alpha.series.terms()) max_exp = std::max(max_exp, term.exponent);
    const unsigned kOffsetExp =
        n * (2 + static_cast<unsigned>(numerator(max_exp) / denominator(max_exp))) +
        product.degree() + 2;

    const unsigned kCurveSamples = 20;
    Rational sp(1);
    for (unsigned k = 0; k < kCurveSamples; ++k) {
        sp /= 2;
        WitnessSet::CurveSample cs;
        cs.t = sp;
        cs.px = Rational(alpha.orientation) * rational_pow(sp, n);
        cs.py = 0;
        for (const auto& term : alpha.series.terms()) {
            const Rational e = term.exponent * Rational(ram);
            cs.py += term.coeff * rational_pow(sp, static_cast<unsigned long>(numerator(e)));
        }
        const Rational delta = rational_pow(sp, kOffsetExp);
        cs.on_value = product.eval(cs.px, cs.py);
        cs.above_value = product.eval(cs.px, cs.py + delta);
        cs.below_value = product.eval(cs.px, cs.py - delta);
        if (cs.on_value == 0 || cs.above_value == 0 || cs.below_value == 0) ws.all_nonzero = false;
        ws.curve_samples.push_back(std::move(cs));
    }
    return ws;
}

}  // namespace pbcert
