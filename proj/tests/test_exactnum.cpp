#include <doctest.h>

#include <random>

#include "pbcert/ext_value.hpp"
#include "pbcert/rational.hpp"

using namespace pbcert;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(rational_to_string(q) == "-3/2");
    CHECK(rational_to_string(Rational(7)) == "7");

    const Rational a = make_rational(22, 7);
    CHECK(a * (Rational(1) / a) == 1);
    CHECK(parse_rational("22/7") == a);
    CHECK(parse_rational("-5") == Rational(-5));
}

TEST_CASE("extended value comparison is lexicographic with Omega dominant") {
    CHECK(ext_value_compare(ExtValue(0, Rational(3)), ExtValue(1, Rational(-2))) < 0);
    CHECK(ext_value_compare(ExtValue(0, Rational(0)), ExtValue(0, Rational(0))) == 0);
    CHECK(ext_value_compare(ExtValue(1, Rational(-2)), ExtValue(0, Rational(1000000))) > 0);
    CHECK(ExtValue::infinity() > ExtValue(5, Rational(10)));
}

TEST_CASE("extended value addition is componentwise with absorbing infinity") {
    CHECK(ExtValue(0, Rational(1)) + ExtValue(1, Rational(-2)) == ExtValue(1, Rational(-1)));
    const ExtValue x(2, make_rational(3, 2));
    CHECK(ExtValue(0, Rational(0)) + x == x);
    CHECK((ExtValue::infinity() + ExtValue(0, Rational(5))).infinite);
}

TEST_CASE("extended value order and addition laws on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> k(-3, 3);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 6);
    std::uniform_int_distribution<int> inf(0, 9);
    auto rand_val = [&]() {
        if (inf(rng) == 0) return ExtValue::infinity();
        return ExtValue(k(rng), make_rational(num(rng), den(rng)));
    };
    for (int i = 0; i < 500; ++i) {
        const ExtValue a = rand_val(), b = rand_val(), c = rand_val();
        // antisymmetry and transitivity
        CHECK(ext_value_compare(a, b) == -ext_value_compare(b, a));
        if (a <= b && b <= c) CHECK(a <= c);
        if (!a.infinite && !b.infinite && !c.infinite) {
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            if (a <= b) CHECK(a + c <= b + c);  // monotone in each argument
        }
    }
}
