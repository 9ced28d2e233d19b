#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pbcert/parse.hpp"
#include "pbcert/pbcheck.hpp"

using namespace pbcert;
using fixtures::P;
using fixtures::make_branch;

namespace {

PiecewiseFunction absolute_value() {
    PiecewiseFunction t;
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::ge}}, P("y")});
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::le}}, P("0 - y")});
    return t;
}

// Pieces with values x and 2x, glued along a curve that runs between the two
// worked branch points: fails because v(x) = 1 is below the threshold 3.
PiecewiseFunction mismatched_slopes() {
    PiecewiseFunction t;
    t.pieces.push_back(Piece{{SignCondition{P("y - x^2 - 1/2x^3"), Relation::le}}, P("x")});
    t.pieces.push_back(Piece{{SignCondition{P("y - x^2 - 1/2x^3"), Relation::ge}}, P("2x")});
    return t;
}

}  // namespace

TEST_CASE("locate_piece picks the least covering piece") {
    const PiecewiseFunction t = absolute_value();
    const auto [xa, xb] = fixtures::xaxis_sides();
    CHECK(locate_piece(t, xa) == 0);
    CHECK(locate_piece(t, xb) == 1);

    PiecewiseFunction halfplane;
    halfplane.pieces.push_back(Piece{{SignCondition{P("x"), Relation::ge}}, P("x")});
    CHECK_THROWS_AS(locate_piece(halfplane, make_branch(-1, {{"2", "1"}}, Side::above)),
                    DomainError);
}

TEST_CASE("pairwise representability check") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    CHECK(pw_pair_check(absolute_value(), xa, xb).pass);

    const PairCheckResult fail =
        pw_pair_check(mismatched_slopes(), fixtures::main_alpha(), fixtures::main_beta());
    CHECK_FALSE(fail.pass);
    CHECK(fail.value == ExtValue(0, Rational(1)));
    CHECK(fail.threshold == ExtValue(0, Rational(3)));

    PiecewiseFunction constant;
    constant.pieces.push_back(Piece{{}, P("7")});
    CHECK(pw_pair_check(constant, fixtures::main_alpha(), fixtures::main_beta()).pass);
}

TEST_CASE("chain transfer on the absolute value") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    const ChainTransferResult r =
        chain_transfer(absolute_value(), xa, xb, {{0, 1}});
    REQUIRE(r.ok);
    CHECK(r.certificate->chain == std::vector<std::size_t>{0, 1});
    CHECK(r.certificate->differences.size() == 1);
    CHECK(r.certificate->differences[0] == P("2y"));
}

TEST_CASE("chain transfer failure returns the reachable set") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    // Third piece carries an incompatible value and covers beta's side; no
    // adjacency reaches it.
    PiecewiseFunction t = absolute_value();
    t.pieces[1].where = {SignCondition{P("y"), Relation::le}, SignCondition{P("x"), Relation::le}};
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::le}}, P("x - y")});
    const ChainTransferResult r = chain_transfer(t, xa, xb, {{0, 1}});
    CHECK_FALSE(r.ok);
    CHECK(r.reachable == std::vector<std::size_t>{0, 1});

    // The worked failing function: the only candidate edge is pruned.
    const ChainTransferResult f = chain_transfer(
        mismatched_slopes(), fixtures::main_alpha(), fixtures::main_beta(), {{0, 1}});
    CHECK_FALSE(f.ok);
    CHECK(f.reachable == std::vector<std::size_t>{0});
}

TEST_CASE("assemble the absolute value") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    const PiecewiseFunction t = absolute_value();
    const AssembleResult r =
        assemble_supinf(t, {xa, xb}, {{P("y"), P("y")}, {P("0-y"), P("0-y")}});
    REQUIRE(r.expression.rows.size() == 2);
    CHECK(r.expression.rows[0] == std::vector<Poly2>{P("y")});
    CHECK(r.expression.rows[1] == std::vector<Poly2>{-P("y")});
    CHECK(r.warnings.empty());
    // sup(y, -y) is |y| on the grid.
    CHECK(r.expression.eval(make_rational(1, 3), make_rational(-2, 7)) == make_rational(2, 7));
}

TEST_CASE("assemble a single point") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    const AssembleResult r = assemble_supinf(absolute_value(), {xa}, {{P("y")}});
    REQUIRE(r.expression.rows.size() == 1);
    CHECK(r.expression.rows[0] == std::vector<Poly2>{P("y")});
}

TEST_CASE("assemble verifies witness signs") {
    const auto [xa, xb] = fixtures::xaxis_sides();
    // h = -y fails h >= t at the row point alpha.
    CHECK_THROWS_AS(
        assemble_supinf(absolute_value(), {xa, xb}, {{P("0-y"), P("y")}, {P("0-y"), P("0-y")}}),
        DomainError);
}

TEST_CASE("assemble warns when the expression misses a piece on the grid") {
    // sup(inf(y), inf(-y)) = |y| differs from the piecewise function that
    // claims value 0 on the upper half plane.
    PiecewiseFunction t;
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::ge}}, P("y")});
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::le}}, P("y")});
    const auto [xa, xb] = fixtures::xaxis_sides();
    const AssembleResult r = assemble_supinf(t, {xa}, {{P("y")}});
    CHECK(r.warnings.empty());

    PiecewiseFunction bad = t;
    bad.pieces[1].value = P("2y");  // incompatible away from the seam
    // The witness conditions still hold at the single supplied point, but the
    // grid exposes the disagreement as warnings.
    const AssembleResult rb = assemble_supinf(bad, {xa}, {{P("y")}});
    CHECK_FALSE(rb.warnings.empty());
}

TEST_CASE("piecewise compatibility sampling") {
    CHECK(piecewise_compatibility_warnings(absolute_value()).empty());
    PiecewiseFunction bad;
    bad.pieces.push_back(Piece{{SignCondition{P("y"), Relation::ge}}, P("y")});
    bad.pieces.push_back(Piece{{SignCondition{P("y"), Relation::ge}}, P("2y")});
    CHECK_FALSE(piecewise_compatibility_warnings(bad).empty());
}

TEST_CASE("connectedness witness on the worked pair") {
    const BranchPoint a = fixtures::main_alpha();
    const BranchPoint b = fixtures::main_beta();

    const WitnessSet w1 = connectedness_witness(a, b, {P("x")});
    CHECK(w1.kind == WitnessSet::Kind::chart_ball);
    CHECK(w1.epsilon == Rational(1));
    CHECK(w1.positive == std::vector<std::string>{"x", "y"});
    CHECK(w1.samples.size() == 49);
    CHECK(w1.all_nonzero);
    CHECK(w1.map_x == P("x"));
    CHECK(w1.map_y == P("x^2y + x^2"));

    const WitnessSet w2 = connectedness_witness(a, b, {P("y")});
    CHECK(w2.epsilon == make_rational(1, 2));
    CHECK(w2.all_nonzero);

    const WitnessSet w3 = connectedness_witness(a, b, {P("x"), P("y"), P("xy")});
    CHECK(w3.all_nonzero);
    for (const auto& s : w3.samples) {
        REQUIRE(s.g_values.size() == 3);
        for (const Rational& v : s.g_values) CHECK(v != 0);
    }

    // A member without a unit factorization is rejected.
    CHECK_THROWS_AS(connectedness_witness(a, b, {P("y - x^2")}), DomainError);
}

TEST_CASE("connectedness witness respects the sampling options") {
    const BranchPoint a = fixtures::main_alpha();
    const BranchPoint b = fixtures::main_beta();
    const WitnessSet w = connectedness_witness(a, b, {P("x")}, SampleOptions{16, 0});
    CHECK(w.samples.size() == 16);
    const WitnessSet wj = connectedness_witness(a, b, {P("x")}, SampleOptions{16, 99});
    CHECK(wj.samples.size() == 16);
    CHECK(wj.all_nonzero);
}

TEST_CASE("height-one connectedness witness") {
    const auto [pa, pb] = fixtures::parabola_sides();
    const WitnessSet w = connectedness_witness(pa, pb, {P("x")});
    CHECK(w.kind == WitnessSet::Kind::curve_component);
    CHECK(*w.curve == P("y - x^2"));
    CHECK(w.gamma->side == Side::on);
    CHECK(w.curve_samples.size() == 20);
    CHECK(w.all_nonzero);
    for (const auto& s : w.curve_samples) {
        CHECK(s.on_value != 0);
        CHECK(s.above_value != 0);
        CHECK(s.below_value != 0);
    }
    CHECK_THROWS_AS(connectedness_witness(pa, pb, {P("xy - x^3")}), DomainError);
}

TEST_CASE("coinciding points give the singleton witness") {
    const auto [pa, pb] = fixtures::parabola_sides();
    const WitnessSet w = connectedness_witness(pa, pa, {P("x")});
    CHECK(w.kind == WitnessSet::Kind::single_point);
    CHECK(w.all_nonzero);
    // For a coinciding pair on the curve, the ideal is the support: a curve
    // multiple is a member and is rejected.
    const BranchPoint on = make_branch(+1, {{"2", "1"}}, Side::on);
    CHECK_THROWS_AS(connectedness_witness(on, on, {P("y - x^2")}), DomainError);
    // A side point has trivial support, so the same g is admissible there.
    CHECK(connectedness_witness(pa, pa, {P("y - x^2")}).all_nonzero);
}

TEST_CASE("randomized chain transfer is sound") {
    std::mt19937_64 rng(61);
    const BranchPoint a = fixtures::main_alpha();
    const BranchPoint b = fixtures::main_beta();
    const SeparatingIdeal S = separating_ideal(a, b);

    std::uniform_int_distribution<int> npieces(2, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = npieces(rng);
        PiecewiseFunction t;
        // Half-plane style covers so both points are always contained.
        for (int i = 0; i < n; ++i) {
            Poly2 v = oracles::random_poly(rng, 2, 2, 2);
            if (coin(rng)) v = v * P("y - x^2");  // sometimes a member offset
            t.pieces.push_back(Piece{{}, v});
        }
        std::vector<std::pair<std::size_t, std::size_t>> adjacency;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) adjacency.emplace_back(i, j);

        const ChainTransferResult r = chain_transfer(t, a, b, adjacency);
        if (r.ok) {
            // Telescoping and direct membership (also asserted internally).
            Poly2 sum;
            for (const Poly2& d : r.certificate->differences) sum += d;
            CHECK(sum == t.pieces[r.certificate->t_alpha_index].value -
                             t.pieces[r.certificate->t_beta_index].value);
            CHECK(member(sum, S, a, b));
        } else {
            // No unpruned edge crosses the F/G partition.
            auto reached = [&](std::size_t v) {
                return std::find(r.reachable.begin(), r.reachable.end(), v) != r.reachable.end();
            };
            for (const auto& [u, v] : adjacency) {
                if (reached(u) == reached(v)) continue;
                CHECK_FALSE(member(t.pieces[u].value - t.pieces[v].value, S, a, b));
            }
        }
    }
}
