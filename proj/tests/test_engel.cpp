#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qident/engel.hpp>
#include <qident/theta.hpp>

using namespace qident;

TEST_CASE("engel digits of 1/(1-q)") {
    QSeries a = invert(poch_finite(SignedMonomial::q_pow(Rat(1)), Rat(1), 1, 40), Rat(40));
    EngelResult r = engel_expand(a, 6);
    REQUIRE(!r.digits.empty());
    CHECK(equal_through(r.digits[0], QSeries::constant(1), Rat(5)));
    // a_1 = q^-1 - 1, then A_2 = 0 through the window
    REQUIRE(r.digits.size() >= 2);
    CHECK(r.digits[1].coeff(Rat(-1)) == 1);
    CHECK(r.digits[1].coeff(Rat(0)) == -1);
    CHECK(r.stop == EngelResult::Stop::exhausted);
    // the two digits already reconstruct A exactly to the window
    QSeries p = engel_partial_sum(r.digits, 1, Rat(30));
    CHECK(equal_through(p, a, Rat(30)));
}

TEST_CASE("engel of the constant 1 terminates at once") {
    EngelResult r = engel_expand(QSeries::constant(1), 5);
    REQUIRE(r.digits.size() == 1);
    CHECK(equal_through(r.digits[0], QSeries::constant(1), Rat(3)));
    CHECK(r.stop == EngelResult::Stop::terminated);
}

TEST_CASE("engel reconstruction valuation strictly increases") {
    // product side of the mod-5 classic: 1/((q;q^5)(q^4;q^5)) truncated
    long N = 60;
    QSeries prod = mul(poch_infinite_pow(SignedMonomial::q_pow(Rat(1)), Rat(5), -1, N),
                       poch_infinite_pow(SignedMonomial::q_pow(Rat(4)), Rat(5), -1, N));
    EngelResult r = engel_expand(prod, 6);
    REQUIRE(r.digits.size() >= 4);
    Rat last_val(-100);
    for (size_t n = 0; n + 1 < r.digits.size(); ++n) {
        QSeries diff = sub(prod, engel_partial_sum(r.digits, n, Rat(N - 5)));
        diff = diff.truncated(Rat(N - 5));
        REQUIRE(!diff.window_zero());
        Rat v = diff.valuation();
        CHECK(v > last_val);
        last_val = v;
    }
}
