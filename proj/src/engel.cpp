#include <qident/engel.hpp>

namespace qident {

namespace {

// [X]: the sub-polynomial of terms with exponent <= 0, as an exact Laurent polynomial.
QSeries nonpositive_part(const QSeries& s) {
    std::vector<Rat> keep;
    long lo = s.lo_index();
    for (long i = lo; i <= std::min<long>(0, s.hi_index()); ++i)
        keep.push_back(s.coeff_index(i));
    if (lo > 0) return QSeries();
    return QSeries::make(s.scale(), lo, std::move(keep), QSeries::kExactOrder, true);
}

}  // namespace

EngelResult engel_expand(const QSeries& a, long steps) {
    if (steps < 0) fail(errc::bad_argument, "engel_expand needs steps >= 0");
    EngelResult res;
    QSeries cur = a;
    QSeries a0 = nonpositive_part(cur);
    res.digits.push_back(a0);
    cur = sub(cur, a0); // A_1
    for (long n = 1; n <= steps; ++n) {
        if (cur.window_zero()) {
            res.stop = cur.exact() ? EngelResult::Stop::terminated : EngelResult::Stop::exhausted;
            return res;
        }
        QSeries inv_cur = invert(cur);
        QSeries an = nonpositive_part(inv_cur);
        res.digits.push_back(an);
        cur = sub(mul(an, cur), QSeries::constant(1)); // A_{n+1}
    }
    res.stop = EngelResult::Stop::steps;
    return res;
}

QSeries engel_partial_sum(const std::vector<QSeries>& digits, size_t n, const Rat& order) {
    if (digits.empty()) fail(errc::bad_argument, "no digits");
    QSeries acc = digits[0];
    QSeries denom = QSeries::constant(1);
    for (size_t k = 1; k <= n && k < digits.size(); ++k) {
        denom = mul(denom, digits[k]).truncated(order + 40);
        acc = add(acc, invert(denom, order));
    }
    return acc.truncated(order);
}

}  // namespace qident
