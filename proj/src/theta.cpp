#include <qident/theta.hpp>

#include <numeric>

namespace qident {

namespace {

long scale_for(const Rat& a, const Rat& b) {
    return std::lcm(rat_den_ll(a), rat_den_ll(b));
}

int sign_pow(int s, const Int& e) {
    if (s > 0) return 1;
    return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
}

}  // namespace

QSeries poch_finite(const SignedMonomial& arg, const Rat& base_exp, long n, long order) {
    if (order < 0) fail(errc::bad_argument, "poch_finite needs order >= 0");
    if (base_exp <= 0) fail(errc::bad_argument, "poch_finite needs a positive base exponent");
    if (arg.is_zero() || n == 0) return QSeries::constant(1);
    if (n < 0) fail(errc::bad_argument, "poch_finite needs n >= 0");
    // Full degree of the product; if it fits under the truncation the
    // result is an exact polynomial and we skip intermediate truncation.
    Rat degree = arg.exp * n + base_exp * (Rat(n) * (n - 1) / 2);
    bool fits = degree <= order && arg.exp >= 0;
    QSeries r = QSeries::constant(1);
    if (!fits) r = r.truncated(Rat(order));
    for (long j = 0; j < n; ++j) {
        Rat e = arg.exp + base_exp * j;
        r.mul_binomial(-arg.sign, e);
        if (!fits) r = r.truncated(Rat(order));
    }
    return r;
}

QSeries poch_infinite(const SignedMonomial& arg, const Rat& base_exp, long order) {
    if (base_exp <= 0) fail(errc::bad_argument, "poch_infinite needs a positive base exponent");
    if (arg.is_zero()) return QSeries::constant(1).truncated(Rat(order));
    if (arg.exp < 0) fail(errc::bad_argument, "poch_infinite argument exponent must be >= 0");
    if (arg.exp == 0 && arg.sign > 0)
        fail(errc::degenerate_product, "(1; q^b)_inf vanishes identically");
    QSeries r = QSeries::constant(1).truncated(Rat(order));
    Rat e = arg.exp;
    while (e <= order) {
        r.mul_binomial(-arg.sign, e);
        r = r.truncated(Rat(order));
        e += base_exp;
    }
    return r;
}

QSeries poch_infinite_pow(const SignedMonomial& arg, const Rat& base_exp, long power,
                          long order) {
    if (power == 0) return QSeries::constant(1).truncated(Rat(order));
    QSeries p = poch_infinite(arg, base_exp, order);
    QSeries r = power > 0 ? p : invert(p, Rat(order));
    QSeries acc = r;
    for (long i = 1; i < std::labs(power); ++i) acc = mul(acc, r);
    return acc;
}

QSeries theta_f(const SignedMonomial& a, const SignedMonomial& b, long order) {
    if (a.is_zero() || b.is_zero()) fail(errc::bad_argument, "theta arguments must be nonzero");
    if (a.exp + b.exp <= 0)
        fail(errc::non_convergent_theta, "f(a,b) needs exp(a)+exp(b) > 0");
    long k = scale_for(a.exp, b.exp);
    long lo = 0, hi = 0;
    std::vector<Rat> c;
    auto place = [&](const Rat& e, int s) {
        long idx = rat_num_ll(Rat(e * k));
        if (c.empty()) {
            lo = hi = idx;
            c.push_back(Rat(0));
        } else if (idx < lo) {
            c.insert(c.begin(), static_cast<size_t>(lo - idx), Rat(0));
            lo = idx;
        } else if (idx > hi) {
            c.insert(c.end(), static_cast<size_t>(idx - hi), Rat(0));
            hi = idx;
        }
        c[static_cast<size_t>(idx - lo)] += s;
    };
    for (int dir : {+1, -1}) {
        long n = dir > 0 ? 0 : -1;
        while (true) {
            Int tri_a(n), tri_b(n);
            tri_a = Int(n) * (n + 1) / 2;
            tri_b = Int(n) * (n - 1) / 2;
            Rat e = a.exp * Rat(tri_a) + b.exp * Rat(tri_b);
            if (e > order) break;
            place(e, sign_pow(a.sign, tri_a) * sign_pow(b.sign, tri_b));
            n += dir;
        }
    }
    return QSeries::make(k, lo, std::move(c), order * k + (k - 1), false);
}

namespace {

// prod_{j>=0} (1 - x*B^j) with a possibly negative monomial base B; the
// factor sign alternates with j when B < 0.
QSeries poch_inf_signed(const SignedMonomial& x, const SignedMonomial& base, long order) {
    if (base.exp <= 0) fail(errc::bad_argument, "signed product needs a growing base");
    if (x.exp == 0 && x.sign > 0)
        fail(errc::degenerate_product, "(1; base)_inf vanishes identically");
    if (x.exp < 0) fail(errc::bad_argument, "argument exponent must be >= 0");
    QSeries r = QSeries::constant(1).truncated(Rat(order));
    Rat e = x.exp;
    int s = x.sign;
    while (e <= order) {
        r.mul_binomial(-s, e);
        r = r.truncated(Rat(order));
        e += base.exp;
        s *= base.sign;
    }
    return r;
}

}  // namespace

QSeries jtp_product(const SignedMonomial& a, const SignedMonomial& b, long order) {
    if (a.is_zero() || b.is_zero()) fail(errc::bad_argument, "theta arguments must be nonzero");
    Rat ab_exp = a.exp + b.exp;
    if (ab_exp <= 0) fail(errc::non_convergent_theta, "triple product needs exp(a)+exp(b) > 0");
    SignedMonomial na{-a.sign, a.exp}, nb{-b.sign, b.exp}, ab{a.sign * b.sign, ab_exp};
    QSeries r = poch_inf_signed(na, ab, order);
    r = mul(r, poch_inf_signed(nb, ab, order));
    r = mul(r, poch_inf_signed(ab, ab, order));
    return r;
}

QSeries theta_negative_half(const SignedMonomial& a, const SignedMonomial& b, long order) {
    if (a.is_zero() || b.is_zero()) fail(errc::bad_argument, "theta arguments must be nonzero");
    if (a.exp + b.exp <= 0) fail(errc::non_convergent_theta, "needs exp(a)+exp(b) > 0");
    long k = scale_for(a.exp, b.exp);
    QSeries acc = QSeries::zero_through(order, k);
    long n = 1;
    while (true) {
        Int tri_a = Int(n) * (n - 1) / 2;
        Int tri_b = Int(n) * (n + 1) / 2;
        Rat e = a.exp * Rat(tri_a) + b.exp * Rat(tri_b);
        if (e > order) break;
        int s = sign_pow(a.sign, tri_a) * sign_pow(b.sign, tri_b);
        acc = add(acc, QSeries::monomial(Rat(s), e));
        ++n;
    }
    return acc.truncated(Rat(order));
}

QSeries false_theta_psi(const SignedMonomial& a, const SignedMonomial& b, long order) {
    if (a.is_zero() || b.is_zero()) fail(errc::bad_argument, "theta arguments must be nonzero");
    if (a.exp + b.exp <= 0) fail(errc::non_convergent_theta, "Psi(a,b) needs exp(a)+exp(b) > 0");
    long k = scale_for(a.exp, b.exp);
    QSeries acc = QSeries::zero_through(order, k);
    long n = 0;
    while (true) {
        Int tri_a = Int(n) * (n + 1) / 2;
        Int tri_b = Int(n) * (n - 1) / 2;
        Rat e = a.exp * Rat(tri_a) + b.exp * Rat(tri_b);
        if (e > order && n > 0) break;
        if (e <= order) {
            int s = sign_pow(a.sign, tri_a) * sign_pow(b.sign, tri_b);
            acc = add(acc, QSeries::monomial(Rat(s), e));
        }
        ++n;
    }
    return sub(acc, theta_negative_half(a, b, order)).truncated(Rat(order));
}

QSeries classical_theta(ClassicalTheta kind, long k, long order) {
    if (k <= 0) fail(errc::bad_argument, "classical_theta needs k >= 1");
    auto q = [&](long e) { return SignedMonomial::q_pow(Rat(e)); };
    auto nq = [&](long e) { return SignedMonomial::neg_q_pow(Rat(e)); };
    QSeries r;
    switch (kind) {
        case ClassicalTheta::f_minus:
            r = poch_infinite(q(k), Rat(k), order);
            break;
        case ClassicalTheta::phi:
            r = theta_f(q(k), q(k), order);
            break;
        case ClassicalTheta::phi_minus:
            r = mul(poch_infinite(q(k), Rat(k), order),
                    invert(poch_infinite(nq(k), Rat(k), order), Rat(order)));
            break;
        case ClassicalTheta::psi:
            r = theta_f(q(k), q(3 * k), order);
            break;
        case ClassicalTheta::psi_minus:
            r = mul(poch_infinite(q(2 * k), Rat(2 * k), order),
                    invert(poch_infinite(nq(k), Rat(2 * k), order), Rat(order)));
            break;
    }
    return r.truncated(Rat(order));
}

const char* classical_theta_name(ClassicalTheta kind) {
    switch (kind) {
        case ClassicalTheta::f_minus: return "f(-q)";
        case ClassicalTheta::phi: return "phi(q)";
        case ClassicalTheta::phi_minus: return "phi(-q)";
        case ClassicalTheta::psi: return "psi(q)";
        case ClassicalTheta::psi_minus: return "psi(-q)";
    }
    return "?";
}

}  // namespace qident
