#pragma once

// Factor a unit-leading series as c * prod_{n>=1} (1 - q^n)^{-e_n} by
// Moebius inversion of the logarithmic derivative, and recognize periodic
// exponent patterns as products of (q^j; q^L)_inf powers.

#include <qident/qseries.hpp>

#include <optional>
#include <vector>

namespace qident {

struct ExponentSeries {
    Rat c;              // leading constant
    std::vector<Rat> e; // e[0] unused; e[n] for 1 <= n <= N

    long length() const { return static_cast<long>(e.size()) - 1; }
    bool all_integer() const;
};

// Requires a nonzero constant term and N <= order(s); series must live on
// the integer exponent grid.
ExponentSeries prodmake(const QSeries& s, long n_max);

struct PeriodicProductForm {
    long modulus = 1;
    Rat c = 1;
    std::vector<long> s; // s[0] unused; s[j] = exponent of (q^j;q^L)_inf, j=1..L

    long max_abs() const;
    bool trivial() const;
};

// Checks each candidate modulus in ascending order against the whole
// window (which must cover at least two periods) and returns the first
// that matches with integer exponents.
std::optional<PeriodicProductForm> detect_period(const ExponentSeries& e,
                                                 std::vector<long> moduli);

QSeries product_to_series(const PeriodicProductForm& p, long order);

}  // namespace qident
