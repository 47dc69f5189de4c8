#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bv/bernoulli.hpp"
#include "bv/rational.hpp"

using bv::Rational;

TEST_CASE("rational basics stay in lowest terms") {
    Rational a(6, 4);
    CHECK(a == Rational(3, 2));
    CHECK(a.str() == "3/2");
    CHECK((a + Rational(1, 2)) == Rational(2));
    CHECK((a * Rational(2, 3)) == Rational(1));
    CHECK((Rational(1) / Rational(-2)).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor, ceil, fractional part") {
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(5, 3).frac() == Rational(2, 3));
    CHECK(Rational(4).frac() == Rational(0));
    // <<x>> = 1 - <1-x>
    CHECK(bv::dfrac(Rational(3)) == Rational(1));
    CHECK(bv::dfrac(Rational(5, 2)) == Rational(1, 2));
}

TEST_CASE("string round trip and parse") {
    Rational r("22/7");
    CHECK(r == Rational(22, 7));
    CHECK_THROWS(Rational("not-a-number"));
    CHECK(Rational("-3").str() == "-3");
}

TEST_CASE("bernoulli values") {
    CHECK(bv::bernoulli_number(0) == Rational(1));
    CHECK(bv::bernoulli_number(1) == Rational(-1, 2));
    CHECK(bv::bernoulli_number(2) == Rational(1, 6));
    CHECK(bv::bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bv::bernoulli_polynomial(0, Rational(17, 3)) == Rational(1));
    CHECK(bv::bernoulli_polynomial(1, Rational(0)) == Rational(-1, 2));
    // B_4(1/2) via the forward recurrence oracle B_n(x+1)-B_n(x) = n x^{n-1}
    CHECK(bv::bernoulli_polynomial(4, Rational(1, 2)) == Rational(7, 240));
}

TEST_CASE("bernoulli reflection B_d(1-x) = (-1)^d B_d(x)") {
    for (int d = 0; d <= 12; ++d) {
        Rational x(3, 7);
        Rational lhs = bv::bernoulli_polynomial(d, Rational(1) - x);
        Rational rhs = bv::bernoulli_polynomial(d, x);
        if (d % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("bernoulli polynomial forward recurrence (independent oracle)") {
    // B_n(x+1) - B_n(x) = n x^{n-1}, applied from B_n(0) = B_n.
    for (int n = 1; n <= 8; ++n) {
        Rational direct = bv::bernoulli_polynomial(n, Rational(5));
        Rational acc = bv::bernoulli_number(n);
        for (long x = 0; x < 5; ++x)
            acc += Rational(n) * Rational(x).pow(n - 1);
        CHECK(direct == acc);
    }
}
