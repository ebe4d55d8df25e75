#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qident/theta.hpp>

#include "test_helpers.hpp"

using namespace qident;
using testutil::Dense;

namespace {
SignedMonomial q(long e) { return SignedMonomial::q_pow(Rat(e)); }
SignedMonomial nq(long e) { return SignedMonomial::neg_q_pow(Rat(e)); }
}  // namespace

TEST_CASE("poch_finite basic expansions") {
    // (q;q)_2 = 1 - q - q^2 + q^3
    QSeries p = poch_finite(q(1), Rat(1), 2, 10);
    CHECK(p.coeff(Rat(0)) == 1);
    CHECK(p.coeff(Rat(1)) == -1);
    CHECK(p.coeff(Rat(2)) == -1);
    CHECK(p.coeff(Rat(3)) == 1);
    CHECK(p.coeff(Rat(4)) == 0);

    CHECK(equal_through(poch_finite(SignedMonomial::zero(), Rat(1), 7, 10), QSeries::constant(1),
                        Rat(10)));

    // (-1; q^2)_3 = 2(1+q^2)(1+q^4), oracle: naive dense multiplication
    Dense d = testutil::dense_one(10);
    testutil::dense_mul_binomial(d, -1, 0);
    testutil::dense_mul_binomial(d, -1, 2);
    testutil::dense_mul_binomial(d, -1, 4);
    CHECK(equal_through(poch_finite(SignedMonomial::minus_one(), Rat(2), 3, 10),
                        testutil::dense_to_series(d), Rat(10)));
}

TEST_CASE("poch_finite splitting property") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> mdist(0, 5), edist(0, 3);
    std::uniform_int_distribution<int> sdist(0, 1);
    for (int rep = 0; rep < 40; ++rep) {
        long m = mdist(rng), n = mdist(rng), e = edist(rng);
        int sign = sdist(rng) ? 1 : -1;
        SignedMonomial a{sign, Rat(e)};
        QSeries lhs = poch_finite(a, Rat(1), m + n, 40);
        SignedMonomial shifted{sign, Rat(e + m)};
        QSeries rhs = mul(poch_finite(a, Rat(1), m, 40), poch_finite(shifted, Rat(1), n, 40));
        CHECK(equal_through(lhs, rhs, Rat(40)));
    }
}

TEST_CASE("poch_infinite pentagonal expansion") {
    QSeries p = poch_infinite(q(1), Rat(1), 12);
    Dense d = testutil::dense_one(12);
    for (long j = 1; j <= 12; ++j) testutil::dense_mul_binomial(d, +1, j);
    CHECK(equal_through(p, testutil::dense_to_series(d), Rat(12)));
    // pentagonal pattern 1 - q - q^2 + q^5 + q^7 - q^12
    CHECK(p.coeff(Rat(5)) == 1);
    CHECK(p.coeff(Rat(7)) == 1);
    CHECK(p.coeff(Rat(12)) == -1);
    CHECK(p.coeff(Rat(11)) == 0);
}

TEST_CASE("poch_infinite corner cases") {
    // (-1;q^2)_inf = 2(-q^2;q^2)_inf
    QSeries a = poch_infinite(SignedMonomial::minus_one(), Rat(2), 4);
    CHECK(a.coeff(Rat(0)) == 2);
    CHECK(a.coeff(Rat(2)) == 2);
    CHECK(a.coeff(Rat(4)) == 2);
    CHECK(equal_through(a, scalar_mul(Rat(2), poch_infinite(nq(2), Rat(2), 4)), Rat(4)));

    // first factor beyond the order
    CHECK(equal_through(poch_infinite(q(5), Rat(5), 4), QSeries::constant(1), Rat(4)));

    CHECK_THROWS_AS((void)poch_infinite(SignedMonomial::one(), Rat(1), 10), error);
}

TEST_CASE("theta_f against direct bilateral summation") {
    // f(q,q) = 1 + 2q + 2q^4 + ... (oracle: n = -2..2 by hand)
    QSeries f = theta_f(q(1), q(1), 4);
    CHECK(f.coeff(Rat(0)) == 1);
    CHECK(f.coeff(Rat(1)) == 2);
    CHECK(f.coeff(Rat(2)) == 0);
    CHECK(f.coeff(Rat(3)) == 0);
    CHECK(f.coeff(Rat(4)) == 2);

    // f(-q,-q^2) = (q;q)_inf
    CHECK(equal_through(theta_f(nq(1), nq(2), 30), poch_infinite(q(1), Rat(1), 30), Rat(30)));

    // f(1,q^5) = 2 f(q^5,q^15)
    CHECK(equal_through(theta_f(SignedMonomial::one(), q(5), 100),
                        scalar_mul(Rat(2), theta_f(q(5), q(15), 100)), Rat(100)));

    CHECK_THROWS_AS((void)theta_f(SignedMonomial::one(), SignedMonomial::one(), 10), error);
}

TEST_CASE("theta symmetry f(a,b) = f(b,a)") {
    for (int ea = 0; ea <= 4; ++ea)
        for (int eb = 0; eb <= 4; ++eb)
            for (int sa : {+1, -1})
                for (int sb : {+1, -1}) {
                    if (ea + eb == 0) continue;
                    SignedMonomial a{sa, Rat(ea)}, b{sb, Rat(eb)};
                    CHECK(equal_through(theta_f(a, b, 40), theta_f(b, a, 40), Rat(40)));
                }
}

TEST_CASE("jacobi triple product equals the bilateral sum") {
    for (int ea = 0; ea <= 6; ++ea)
        for (int eb = 0; eb <= 6; ++eb)
            for (int sa : {+1, -1})
                for (int sb : {+1, -1}) {
                    if (ea + eb == 0) continue;
                    if (sa < 0 && ea == 0) continue; // f(-1,b) = 0, product degenerate
                    if (sb < 0 && eb == 0) continue;
                    SignedMonomial a{sa, Rat(ea)}, b{sb, Rat(eb)};
                    CHECK(equal_through(theta_f(a, b, 60), jtp_product(a, b, 60), Rat(60)));
                }
}

TEST_CASE("false theta values and the split identity") {
    // Psi(-q^3,-q) = 1 + q - q^3 - q^6 + q^10 + ... (direct two-sum oracle, n <= 4)
    QSeries p = false_theta_psi(nq(3), nq(1), 10);
    CHECK(p.coeff(Rat(0)) == 1);
    CHECK(p.coeff(Rat(1)) == 1);
    CHECK(p.coeff(Rat(3)) == -1);
    CHECK(p.coeff(Rat(6)) == -1);
    CHECK(p.coeff(Rat(10)) == 1);
    CHECK(p.nonzero_terms_through(Rat(10)) == 5);

    // order below the first nonconstant term
    CHECK(equal_through(false_theta_psi(q(15), q(3), 2), QSeries::constant(1), Rat(2)));

    // Psi(q^15,q^3) = 1 - q^3 + q^15 - q^24 + q^48 - ...
    QSeries j = false_theta_psi(q(15), q(3), 50);
    CHECK(j.coeff(Rat(3)) == -1);
    CHECK(j.coeff(Rat(15)) == 1);
    CHECK(j.coeff(Rat(18)) == 0);
    CHECK(j.coeff(Rat(24)) == -1);
    CHECK(j.coeff(Rat(48)) == 1);

    // f(a,b) - Psi(a,b) = 2 * sum_{n>=1} a^{n(n-1)/2} b^{n(n+1)/2}
    for (int ea = 0; ea <= 4; ++ea)
        for (int eb = 0; eb <= 4; ++eb)
            for (int sa : {+1, -1})
                for (int sb : {+1, -1}) {
                    if (ea + eb == 0) continue;
                    SignedMonomial a{sa, Rat(ea)}, b{sb, Rat(eb)};
                    QSeries lhs = sub(theta_f(a, b, 40), false_theta_psi(a, b, 40));
                    QSeries rhs = scalar_mul(Rat(2), theta_negative_half(a, b, 40));
                    CHECK(equal_through(lhs, rhs, Rat(40)));
                }
}

TEST_CASE("classical specializations") {
    // phi(-q) = 1 - 2q + 2q^4 - ... equals the bilateral sum
    QSeries ph = classical_theta(ClassicalTheta::phi_minus, 1, 9);
    CHECK(ph.coeff(Rat(0)) == 1);
    CHECK(ph.coeff(Rat(1)) == -2);
    CHECK(ph.coeff(Rat(4)) == 2);
    CHECK(ph.coeff(Rat(9)) == -2);
    CHECK(equal_through(ph, theta_f(nq(1), nq(1), 9), Rat(9)));

    // psi(-q) product form equals f(-q,-q^3)
    CHECK(equal_through(classical_theta(ClassicalTheta::psi_minus, 1, 40),
                        theta_f(nq(1), nq(3), 40), Rat(40)));
    // psi(q) = f(q,q^3)
    CHECK(equal_through(classical_theta(ClassicalTheta::psi, 1, 40), theta_f(q(1), q(3), 40),
                        Rat(40)));
    // f(-q) = (q;q)_inf
    CHECK(equal_through(classical_theta(ClassicalTheta::f_minus, 1, 40),
                        poch_infinite(q(1), Rat(1), 40), Rat(40)));
    // variable q^2
    CHECK(equal_through(classical_theta(ClassicalTheta::phi_minus, 2, 40),
                        theta_f(nq(2), nq(2), 40), Rat(40)));
}
