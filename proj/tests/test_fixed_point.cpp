#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qident/fixed_point.hpp>
#include <qident/theta.hpp>

using namespace qident;

TEST_CASE("eval_fixed on an exact polynomial") {
    QSeries s = QSeries::constant(1);
    s.mul_binomial(+1, Rat(1)); // 1 + q
    Fixed v = eval_fixed(s, Rat(1, 2), 10);
    CHECK(v.str() == "1.5000000000");
}

TEST_CASE("eval_fixed rejects an insufficient truncation order") {
    QSeries s = QSeries::make(1, 0, {Rat(1), Rat(1), Rat(1)}, 2, false);
    CHECK_THROWS_AS((void)eval_fixed(s, Rat(1, 2), 30), error);
    CHECK_NOTHROW((void)eval_fixed(s, Rat(1, 1000000), 10));
}

TEST_CASE("log_fixed basics") {
    CHECK(log_fixed(Fixed::from_rat(Rat(1), 20), 20).is_zero());
    CHECK_THROWS_AS((void)log_fixed(Fixed::from_rat(Rat(0), 10), 10), error);
    CHECK_THROWS_AS((void)log_fixed(Fixed::from_rat(Rat(-3, 2), 10), 10), error);
    // ln 2 + ln(1/2) = 0 within 4 ulp
    Fixed l2 = log_fixed(Fixed::from_rat(Rat(2), 40), 40);
    Fixed lh = log_fixed(Fixed::from_rat(Rat(1, 2), 40), 40);
    Fixed sum = (l2 + lh).abs();
    CHECK(sum < Fixed(Int(4), 40));
    // ln 2 reference digits
    CHECK(l2.str().substr(0, 12) == "0.6931471805");
}

TEST_CASE("log of the euler product matches per-factor log summation") {
    long order = 20;
    long P = 48;
    Rat q0(1, 10000);
    QSeries euler = poch_infinite(SignedMonomial::q_pow(Rat(1)), Rat(1), order);
    Fixed whole = log_fixed(eval_fixed(euler, q0, P + 6), P);
    // oracle: sum of log(1 - q0^j) over the factors that matter at this precision
    Fixed acc = Fixed::from_rat(Rat(0), P + 6);
    for (long j = 1; j <= 13; ++j) {
        Rat factor = 1 - rat_pow(q0, j);
        acc = acc + log_fixed(Fixed::from_rat(factor, P + 6), P + 6);
    }
    Fixed diff = (whole - acc.rounded(P)).abs();
    CHECK(diff < Fixed(pow10_z(2), P)); // agree to P-2 digits
}

TEST_CASE("eval_fixed against a doubled-precision rerun") {
    QSeries s = poch_infinite(SignedMonomial::neg_q_pow(Rat(1)), Rat(2), 26);
    Rat q0(1, 10000);
    long P = 40;
    Fixed v1 = eval_fixed(s, q0, P);
    Fixed v2 = eval_fixed(s, q0, 2 * P);
    Fixed diff = (v2 - v1.rounded(2 * P)).abs();
    CHECK(diff < Fixed(pow10_z(P) , 2 * P)); // |difference| <= 10^-P
}

TEST_CASE("eval_fixed on the half-exponent grid needs an exact root") {
    QSeries s = QSeries::monomial(Rat(1), Rat(1, 2)) + QSeries::constant(1);
    Fixed v = eval_fixed(s, Rat(1, 10000), 10); // sqrt is exactly 1/100
    CHECK(v.str() == "1.0100000000");
    CHECK_THROWS_AS((void)eval_fixed(s, Rat(1, 2), 10), error);
}
