#pragma once

// q-Engel expansion: a_0 = [A], A_1 = A - a_0, then a_n = [1/A_n],
// A_{n+1} = a_n A_n - 1, where [X] keeps the terms with exponent <= 0.
// Partial sums a_0 + sum_{k<=n} 1/(a_1...a_k) approach A with strictly
// increasing valuation.

#include <qident/qseries.hpp>

#include <vector>

namespace qident {

struct EngelResult {
    std::vector<QSeries> digits; // a_0 .. a_m, Laurent polynomials
    enum class Stop {
        steps,      // requested number of digits produced
        terminated, // some A_n is exactly zero, expansion is finite
        exhausted,  // A_n vanished through its whole truncation window
    } stop = Stop::steps;
};

EngelResult engel_expand(const QSeries& a, long steps);

// a_0 + sum_{k=1..n} 1/(a_1...a_k) for each usable prefix; used by the
// reconstruction-valuation property.
QSeries engel_partial_sum(const std::vector<QSeries>& digits, size_t n, const Rat& order);

}  // namespace qident
