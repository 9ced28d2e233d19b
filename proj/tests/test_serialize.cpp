#include <doctest.h>

#include "fixtures.hpp"
#include "pbcert/serialize.hpp"

using namespace pbcert;
using fixtures::P;

TEST_CASE("branch serialization round-trips") {
    const BranchPoint b = fixtures::puiseux_beta();
    const Json j = to_json(b);
    CHECK(j["orient"] == "+");
    CHECK(j["side"] == "below");
    CHECK(j["series"][0]["q"] == "3/2");
    CHECK(branch_from_json(j) == b);

    const BranchPoint axis = fixtures::make_branch(-1, {}, Side::on);
    CHECK(branch_from_json(to_json(axis)) == axis);
}

TEST_CASE("extended value serialization") {
    CHECK(to_json(ExtValue::infinity()) == Json("inf"));
    const ExtValue v(1, make_rational(-2, 3));
    CHECK(to_json(v)["omega"] == 1);
    CHECK(to_json(v)["finite"] == "-2/3");
    CHECK(ext_value_from_json(to_json(v)) == v);
    CHECK(ext_value_from_json(Json("inf")).infinite);
}

TEST_CASE("piecewise serialization round-trips") {
    PiecewiseFunction t;
    t.pieces.push_back(Piece{{SignCondition{P("y"), Relation::ge}}, P("y")});
    t.pieces.push_back(
        Piece{{SignCondition{P("y"), Relation::le}, SignCondition{P("x"), Relation::eq}},
              P("0 - y")});
    const Json j = to_json(t);
    const PiecewiseFunction t2 = piecewise_from_json(j);
    REQUIRE(t2.pieces.size() == 2);
    CHECK(t2.pieces[0].value == P("y"));
    CHECK(t2.pieces[1].where.size() == 2);
    CHECK(t2.pieces[1].where[1].rel == Relation::eq);
}

TEST_CASE("malformed inputs raise parse errors") {
    CHECK_THROWS_AS(parse_json_text("{not json"), ParseError);
    CHECK_THROWS_AS(branch_from_json(parse_json_text(R"({"orient":"*","series":[],"side":"on"})")),
                    ParseError);
    CHECK_THROWS_AS(branch_from_json(parse_json_text(R"({"orient":"+"})")), ParseError);
    CHECK_THROWS_AS(
        branch_from_json(parse_json_text(
            R"({"orient":"+","series":[{"q":"-1","c":"1"}],"side":"on"})")),
        ParseError);
    CHECK_THROWS_AS(poly_from_json(Json(3)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
}
