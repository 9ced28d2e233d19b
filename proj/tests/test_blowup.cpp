#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pbcert/blowup.hpp"
#include "pbcert/parse.hpp"

using namespace pbcert;
using fixtures::P;
using fixtures::make_branch;

namespace {

/// g == c * x^a y^b * h for a rational c and some monomial shift, either way.
bool equal_up_to_monomial_unit(const Poly2& g, const Poly2& h) {
    auto try_divide = [](const Poly2& big, const Poly2& small) {
        const auto q = divide_exact(big, small);
        if (!q) return false;
        return q->term_count() == 1;
    };
    return try_divide(g, h) || try_divide(h, g);
}

void check_chart_invariants(const Chart& c, const BranchPoint& alpha) {
    // down_map is a section of the parameters.
    CHECK(substitute(c.x_param, RatFunc2(c.down_x), RatFunc2(c.down_y)) == RatFunc2::var_x());
    CHECK(substitute(c.y_param, RatFunc2(c.down_x), RatFunc2(c.down_y)) == RatFunc2::var_y());
    // sign normalization and value ordering at alpha
    const SignValue sx = eval_at_branch(c.x_param, alpha);
    const SignValue sy = eval_at_branch(c.y_param, alpha);
    CHECK(sx.sign >= 0);
    CHECK(sy.sign >= 0);
    CHECK(sx.value <= sy.value);
}

}  // namespace

TEST_CASE("the worked blow-up chain: I.1 then II.1") {
    const BranchPoint a = fixtures::main_alpha();
    const BranchPoint b = fixtures::main_beta();
    const BlowupChain chain = run_chain(a, b);

    REQUIRE(chain.r() == 2);
    CHECK(chain.charts[1].step_case == StepCase::I1);
    CHECK(chain.charts[1].x_param == RatFunc2(P("x")));
    CHECK(chain.charts[1].y_param == RatFunc2(P("y"), P("x")));
    CHECK(chain.charts[2].step_case == StepCase::II1);
    CHECK(chain.charts[2].shift == 1);
    CHECK(chain.charts[2].y_param == RatFunc2(P("y - x^2"), P("x^2")));
    CHECK(chain.charts[2].down_x == P("x"));
    CHECK(chain.charts[2].down_y == P("x^2y + x^2"));
    CHECK(chain.x_nonchanger());
    CHECK(chain.y_nonchanger());
    CHECK(chain.witness_chart == P("x - 2y"));

    for (const Chart& c : chain.charts) check_chart_invariants(c, a);

    // The folded witness is a polynomial sign changer of value 3.
    const SignValue wa = eval_at_branch(chain.witness_root, a);
    const SignValue wb = eval_at_branch(chain.witness_root, b);
    CHECK(wa.sign == +1);
    CHECK(wb.sign == -1);
    CHECK(wa.value == ExtValue(0, Rational(3)));
}

TEST_CASE("stopping test on the worked chain") {
    const BranchPoint a = fixtures::main_alpha();
    const BranchPoint b = fixtures::main_beta();
    const BlowupChain chain = run_chain(a, b);
    CHECK_FALSE(stopping_test(chain.charts[0], a, b).has_value());
    CHECK_FALSE(stopping_test(chain.charts[1], a, b).has_value());
    const auto w = stopping_test(chain.charts[2], a, b);
    REQUIRE(w.has_value());
    CHECK(*w == P("x - 2y"));
}

TEST_CASE("opposite orientations stop at the root chart") {
    const BranchPoint a = make_branch(+1, {{"1", "1"}}, Side::above);
    const BranchPoint b = make_branch(-1, {{"1", "1"}}, Side::above);
    const BlowupChain chain = run_chain(a, b);
    CHECK(chain.r() == 0);
    const auto w = stopping_test(chain.charts[0], a, b);
    REQUIRE(w.has_value());
    CHECK(*w == P("x"));
    CHECK(chain.x_changes_sign());
    CHECK(chain.y_nonchanger());
}

TEST_CASE("a Puiseux branch swaps at the root (case I.2)") {
    const BlowupChain chain = run_chain(fixtures::puiseux_alpha(), fixtures::puiseux_beta());
    CHECK(chain.charts[1].step_case == StepCase::I2);
    CHECK(chain.r() == 4);
    for (const Chart& c : chain.charts) check_chart_invariants(c, fixtures::puiseux_alpha());
}

TEST_CASE("negative orientation chains sign-normalize the root chart") {
    const BranchPoint a = make_branch(-1, {{"2", "1"}}, Side::above);
    const BranchPoint b = make_branch(-1, {{"2", "1"}, {"4", "1"}}, Side::below);
    const BlowupChain chain = run_chain(a, b);
    CHECK(chain.charts[0].sign_x == -1);  // x0 = -x is positive at alpha
    for (const Chart& c : chain.charts) check_chart_invariants(c, a);
}

TEST_CASE("x-values never increase along a chain") {
    for (const auto& [a, b] : fixtures::chain_corpus()) {
        const BlowupChain chain = run_chain(a, b);
        ExtValue prev;
        bool first = true;
        for (const Chart& c : chain.charts) {
            const ExtValue vx = eval_at_branch(c.x_param, a).value;
            if (!first) CHECK(vx <= prev);
            prev = vx;
            first = false;
        }
    }
}

TEST_CASE("transform of the maximal ideal is the unit ideal") {
    const BlowupChain chain = run_chain(fixtures::main_alpha(), fixtures::main_beta());
    const auto t = transform_ideal({P("x"), P("y")}, chain.charts[1]);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == P("1"));
    CHECK(t[1] == P("y"));
}

TEST_CASE("transform strips the full exceptional power at once") {
    // Two I.1 steps along y = x^3; (x^2) becomes the unit ideal immediately.
    const BranchPoint a = make_branch(+1, {{"3", "1"}}, Side::above);
    Chart c0 = root_chart(a);
    Chart c1 = blowup_step(c0, a);
    Chart c2 = blowup_step(c1, a);
    CHECK(c1.step_case == StepCase::I1);
    CHECK(c2.step_case == StepCase::I1);
    const auto t1 = transform_ideal({P("x^2")}, c1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0] == P("1"));
}

TEST_CASE("worked transform and inverse transform of the separating ideal") {
    const BlowupChain chain = run_chain(fixtures::main_alpha(), fixtures::main_beta());

    const auto t = transform_ideal({P("x^3"), P("y - x^2")}, chain.charts[1]);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == P("x^2"));
    CHECK(t[1] == P("y - x"));

    const auto w2 = inverse_transform_ideal({P("x"), P("y")}, chain.charts[2]);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == P("x^2"));
    CHECK(w2[1] == P("y - x"));

    const auto w1 = inverse_transform_ideal(w2, chain.charts[1]);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0] == P("x^3"));
    CHECK(w1[1] == P("y - x^2"));

    const auto u = inverse_transform_ideal({P("1")}, chain.charts[1]);
    REQUIRE(u.size() == 1);
    CHECK(u[0] == P("1"));
}

TEST_CASE("transform is multiplicative on monomial ideals") {
    const BlowupChain chain = run_chain(fixtures::main_alpha(), fixtures::main_beta());
    const std::vector<Poly2> I = {P("x^2"), P("xy")};
    const std::vector<Poly2> J = {P("y"), P("x^3")};
    for (std::size_t step = 1; step < chain.charts.size(); ++step) {
        std::vector<Poly2> product;
        for (const Poly2& gi : I)
            for (const Poly2& gj : J) product.push_back(gi * gj);
        const auto t_product = transform_ideal(product, chain.charts[step]);
        const auto ti = transform_ideal(I, chain.charts[step]);
        const auto tj = transform_ideal(J, chain.charts[step]);
        std::size_t k = 0;
        for (const Poly2& gi : ti)
            for (const Poly2& gj : tj) {
                CHECK(equal_up_to_monomial_unit(t_product[k], gi * gj));
                ++k;
            }
    }
}

TEST_CASE("transform round-trips across the corpus") {
    for (const auto& [a, b] : fixtures::chain_corpus()) {
        const BlowupChain chain = run_chain(a, b);
        std::vector<Poly2> j = {Poly2::var_x(), Poly2::var_y()};
        for (std::size_t i = chain.charts.size(); i-- > 1;) {
            // T(W(J)) = J up to monomial units, step by step.
            const auto w = inverse_transform_ideal(j, chain.charts[i]);
            const auto t = transform_ideal(w, chain.charts[i]);
            REQUIRE(t.size() == j.size());
            for (std::size_t k = 0; k < j.size(); ++k)
                CHECK(equal_up_to_monomial_unit(t[k], j[k]));
            j = w;
        }
    }
}

TEST_CASE("monomial factorization on the worked chain") {
    const BlowupChain chain = run_chain(fixtures::main_alpha(), fixtures::main_beta());

    const MonomialFactorization fx = monomial_factor(P("x"), chain);
    CHECK(fx.e == 1);
    CHECK(fx.f == 0);
    CHECK(fx.w == P("1"));

    const MonomialFactorization fy = monomial_factor(P("y"), chain);
    CHECK(fy.e == 2);
    CHECK(fy.f == 0);
    CHECK(fy.w == P("y + 1"));

    CHECK_THROWS_AS(monomial_factor(P("y - x^2"), chain), DomainError);
    CHECK_THROWS_AS(monomial_factor(Poly2::zero(), chain), DomainError);

    // The factorization is an exact identity in the final chart.
    for (const char* gtext : {"x", "y", "x + y", "1 + x", "3x - y"}) {
        const Poly2 g = P(gtext);
        const MonomialFactorization mf = monomial_factor(g, chain);
        CHECK(to_chart(g, chain.last()) ==
              Poly2::monomial(Mono{mf.e, mf.f}, Rational(1)) * mf.w);
        CHECK(mf.w.constant_term() != 0);
    }
}

TEST_CASE("chain errors") {
    CHECK_THROWS_AS(run_chain(fixtures::main_alpha(), fixtures::main_alpha()), DomainError);
    try {
        run_chain(fixtures::main_alpha(), fixtures::main_beta(), 1);
        FAIL("expected ChainLimitError");
    } catch (const ChainLimitError& e) {
        CHECK(e.partial().charts.size() == 2);
        CHECK(e.partial().stop_reason == StopReason::iteration_limit);
    }
    // A chart where the valuation is not centered refuses to step.
    Chart c = root_chart(fixtures::main_alpha());
    c.x_param = RatFunc2(P("1 + x"));
    CHECK_THROWS_AS(blowup_step(c, fixtures::main_alpha()), DomainError);
}
