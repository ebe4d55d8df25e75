#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qident/qseries.hpp>

#include "test_helpers.hpp"

using namespace qident;

TEST_CASE("constant and monomial construction") {
    QSeries one = QSeries::constant(1);
    CHECK(one.exact());
    CHECK(one.coeff(Rat(0)) == 1);
    CHECK(one.coeff(Rat(5)) == 0);

    QSeries m = QSeries::monomial(Rat(3, 2), Rat(1, 2));
    CHECK(m.scale() == 2);
    CHECK(m.coeff(Rat(1, 2)) == Rat(3, 2));
    CHECK(m.coeff(Rat(1)) == 0);
}

TEST_CASE("mul of binomials matches hand expansion") {
    // (1 - q)(1 + q) = 1 - q^2
    QSeries a = QSeries::constant(1);
    a.mul_binomial(-1, Rat(1));
    QSeries b = QSeries::constant(1);
    b.mul_binomial(+1, Rat(1));
    QSeries p = mul(a, b);
    CHECK(p.exact());
    CHECK(p.coeff(Rat(0)) == 1);
    CHECK(p.coeff(Rat(1)) == 0);
    CHECK(p.coeff(Rat(2)) == -1);
}

TEST_CASE("invert(1 - q) is the geometric series") {
    QSeries a = QSeries::constant(1);
    a.mul_binomial(-1, Rat(1));
    QSeries inv = invert(a, Rat(3));
    for (long i = 0; i <= 3; ++i) CHECK(inv.coeff(Rat(i)) == 1);
    CHECK(!inv.known_through(Rat(4)));
}

TEST_CASE("substitute_power doubles exponents") {
    QSeries a = QSeries::constant(1);
    a.mul_binomial(+1, Rat(1)); // 1 + q
    QSeries b = a.substitute_power(2);
    CHECK(b.coeff(Rat(0)) == 1);
    CHECK(b.coeff(Rat(1)) == 0);
    CHECK(b.coeff(Rat(2)) == 1);
}

TEST_CASE("scale alignment and reduction") {
    QSeries h = QSeries::monomial(Rat(1), Rat(1, 2));
    QSeries s = mul(h, h); // q^(1/2) * q^(1/2) = q, back on the integer grid
    CHECK(s.scale() == 1);
    CHECK(s.coeff(Rat(1)) == 1);

    QSeries t = add(h, QSeries::constant(1));
    CHECK(t.scale() == 2);
    CHECK(t.coeff(Rat(1, 2)) == 1);
}

TEST_CASE("order bookkeeping through multiplication") {
    QSeries a = QSeries::make(1, 0, {Rat(1), Rat(1)}, 5, false);   // 1 + q + O(q^6)
    QSeries b = QSeries::make(1, 2, {Rat(1)}, 9, false);           // q^2 + O(q^10)
    QSeries p = mul(a, b);
    CHECK(p.order_index() == 7); // min(5 + 2, 9 + 0)
    CHECK(p.coeff(Rat(2)) == 1);
    CHECK(p.coeff(Rat(3)) == 1);
}

TEST_CASE("laurent window with negative exponents") {
    QSeries a = QSeries::monomial(Rat(1), Rat(-2)); // q^-2, exact
    QSeries b = invert(a);
    CHECK(b.exact());
    CHECK(b.coeff(Rat(2)) == 1);
    QSeries c = mul(a, QSeries::make(1, 0, {Rat(1), Rat(2)}, 4, false));
    CHECK(c.coeff(Rat(-2)) == 1);
    CHECK(c.coeff(Rat(-1)) == 2);
    CHECK(c.order_index() == 2);
}

TEST_CASE("invert round trip on randomized unit series") {
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 200; ++rep) {
        QSeries s = testutil::random_unit_series(rng, 24);
        QSeries r = invert(s);
        QSeries p = mul(s, r);
        CHECK(equal_through(p, QSeries::constant(1), Rat(24)));
    }
}

TEST_CASE("div_binomial undoes mul_binomial") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        QSeries s = testutil::random_unit_series(rng, 20);
        QSeries t = s;
        t.mul_binomial(-1, Rat(3));
        t = t.truncated(Rat(20));
        t.div_binomial(-1, Rat(3));
        CHECK(equal_through(s, t, Rat(20)));
    }
}

TEST_CASE("not invertible on zero window") {
    QSeries z = QSeries::zero_through(8);
    CHECK_THROWS_AS((void)invert(z, Rat(4)), error);
}

TEST_CASE("derivative_qlog multiplies by the exponent") {
    QSeries s = QSeries::make(1, 0, {Rat(7), Rat(2), Rat(5)}, 10, false);
    QSeries d = s.derivative_qlog();
    CHECK(d.coeff(Rat(0)) == 0);
    CHECK(d.coeff(Rat(1)) == 2);
    CHECK(d.coeff(Rat(2)) == 10);
}

TEST_CASE("first_difference reports the earliest mismatch") {
    QSeries a = QSeries::make(1, 0, {Rat(1), Rat(2), Rat(3)}, 9, false);
    QSeries b = QSeries::make(1, 0, {Rat(1), Rat(2), Rat(4)}, 9, false);
    Rat where;
    CHECK(first_difference(a, b, Rat(9), &where));
    CHECK(where == 2);
    CHECK_THROWS_AS((void)equal_through(a, b, Rat(10)), error);
}
