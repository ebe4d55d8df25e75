#include <qident/prodmake.hpp>
#include <qident/theta.hpp>

#include <algorithm>

namespace qident {

bool ExponentSeries::all_integer() const {
    for (size_t n = 1; n < e.size(); ++n)
        if (!rat_is_integer(e[n])) return false;
    return true;
}

ExponentSeries prodmake(const QSeries& s, long n_max) {
    if (s.scale() != 1)
        fail(errc::fractional_grid, "prodmake needs integer exponents (scale 1)");
    if (s.window_zero() || s.lo_index() != 0)
        fail(errc::not_unit_leading, "prodmake needs a nonzero constant term");
    if (!s.known_through(Rat(n_max))) fail(errc::order_too_low, "prodmake beyond series order");
    ExponentSeries out;
    out.c = s.leading_coeff();
    out.e.assign(static_cast<size_t>(n_max) + 1, Rat(0));
    // L = q (log s)' = q s'/s;  L_m = sum_{d|m} d*e_d
    QSeries L = mul(s.derivative_qlog(), invert(s, Rat(n_max)));
    for (long m = 1; m <= n_max; ++m) {
        Rat acc = L.coeff_index(m);
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && out.e[static_cast<size_t>(d)] != 0)
                acc -= d * out.e[static_cast<size_t>(d)];
        out.e[static_cast<size_t>(m)] = acc / m;
    }
    return out;
}

long PeriodicProductForm::max_abs() const {
    long m = 0;
    for (size_t j = 1; j < s.size(); ++j) m = std::max(m, std::labs(s[j]));
    return m;
}

bool PeriodicProductForm::trivial() const { return max_abs() == 0; }

std::optional<PeriodicProductForm> detect_period(const ExponentSeries& e,
                                                 std::vector<long> moduli) {
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
    long n = e.length();
    for (long L : moduli) {
        if (L < 1) continue;
        if (n < 2 * L) continue; // demand at least two full periods of evidence
        bool ok = true;
        for (long m = 1; m <= n && ok; ++m) {
            const Rat& v = e.e[static_cast<size_t>(m)];
            if (!rat_is_integer(v)) ok = false;
            long rep = ((m - 1) % L) + 1;
            if (ok && v != e.e[static_cast<size_t>(rep)]) ok = false;
        }
        if (!ok) continue;
        PeriodicProductForm p;
        p.modulus = L;
        p.c = e.c;
        p.s.assign(static_cast<size_t>(L) + 1, 0);
        for (long j = 1; j <= L; ++j)
            p.s[static_cast<size_t>(j)] = -rat_num_ll(e.e[static_cast<size_t>(j)]);
        return p;
    }
    return std::nullopt;
}

QSeries product_to_series(const PeriodicProductForm& p, long order) {
    QSeries r = QSeries::constant(p.c).truncated(Rat(order));
    for (long j = 1; j < static_cast<long>(p.s.size()); ++j) {
        long e = p.s[static_cast<size_t>(j)];
        if (e == 0) continue;
        r = mul(r, poch_infinite_pow(SignedMonomial::q_pow(Rat(j)), Rat(p.modulus), e, order));
    }
    return r.truncated(Rat(order));
}

}  // namespace qident
