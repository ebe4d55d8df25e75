#pragma once

// Truncated Laurent series in q over exact rationals.
//
// Exponents live on the grid (1/scale)*Z; a series stores the coefficient
// window [lo, hi] in grid units together with an exactness bound `order`:
// every coefficient with exponent index <= order is correct, nothing is
// claimed above it.  Series built from finitely many binomial factors are
// marked `exact` instead (all coefficients outside the window are truly
// zero).  Values are immutable after construction; every operation returns
// a fresh series with the tightest order the inputs support.

#include <qident/error.hpp>
#include <qident/rational.hpp>

#include <string>
#include <vector>

namespace qident {

// Argument monomial for Pochhammer/theta builders: sign * q^exp, with
// sign 0 denoting the literal constant 0.
struct SignedMonomial {
    int sign = 0;
    Rat exp = 0;

    bool is_zero() const { return sign == 0; }

    static SignedMonomial zero() { return {0, Rat(0)}; }
    static SignedMonomial one() { return {1, Rat(0)}; }
    static SignedMonomial minus_one() { return {-1, Rat(0)}; }
    static SignedMonomial q_pow(Rat e) { return {1, std::move(e)}; }
    static SignedMonomial neg_q_pow(Rat e) { return {-1, std::move(e)}; }
};

std::string to_string(const SignedMonomial& m);

class QSeries {
public:
    // Orders at or above this sentinel mean "exact at all exponents".
    static constexpr long kExactOrder = 1L << 48;

    // Exact zero polynomial.
    QSeries() : scale_(1), lo_(0), order_(kExactOrder), exact_(true) {}

    static QSeries zero_through(long order_q, long scale = 1);
    static QSeries constant(Rat c);
    static QSeries monomial(Rat coeff, const Rat& exponent);

    // Raw constructor; trims and canonicalizes.
    static QSeries make(long scale, long lo, std::vector<Rat> coeffs, long order_idx,
                        bool exact);

    long scale() const { return scale_; }
    long lo_index() const { return lo_; }
    long hi_index() const { return lo_ + static_cast<long>(c_.size()) - 1; }
    long order_index() const { return exact_ ? kExactOrder : order_; }
    bool exact() const { return exact_; }

    // True when no nonzero coefficient is stored (zero polynomial or a
    // series that vanishes through its whole order window).
    bool window_zero() const { return c_.empty(); }
    bool is_exact_zero() const { return exact_ && c_.empty(); }

    Rat order_exponent() const;             // exactness bound as a q-exponent
    bool known_through(const Rat& e) const; // is coeff(e) trustworthy?

    Rat valuation() const; // exponent of lowest nonzero term; throws on zero window
    const Rat& leading_coeff() const;

    // Coefficient of q^e; 0 inside the known range, throws beyond it.
    Rat coeff(const Rat& e) const;
    Rat coeff_index(long idx_at_this_scale) const;

    long nonzero_terms_through(const Rat& cutoff) const;

    const std::vector<Rat>& window() const { return c_; }

    QSeries truncated(const Rat& order_q) const;
    QSeries truncated_index(long order_idx) const;
    QSeries rescaled(long new_scale) const;   // refine grid to a multiple
    QSeries substitute_power(long k) const;   // q -> q^k
    QSeries derivative_qlog() const;               // q d/dq

    // In-place multiply by (1 + sign*q^e) / exact divide by it (e > 0 for division).
    void mul_binomial(int sign, const Rat& e);
    void div_binomial(int sign, const Rat& e);

    friend QSeries add(const QSeries& a, const QSeries& b);
    friend QSeries sub(const QSeries& a, const QSeries& b);
    friend QSeries mul(const QSeries& a, const QSeries& b);
    friend QSeries neg(const QSeries& a);
    friend QSeries scalar_mul(const Rat& c, const QSeries& a);
    friend QSeries invert(const QSeries& s, const Rat& order_q);
    friend QSeries invert(const QSeries& s);

    friend bool equal_through(const QSeries& a, const QSeries& b, const Rat& order_q);
    // First exponent (<= order_q) where the two differ, or nullopt-style flag.
    friend bool first_difference(const QSeries& a, const QSeries& b, const Rat& order_q, Rat* where);

private:
    long scale_;
    long lo_;
    std::vector<Rat> c_;
    long order_; // grid units; only meaningful when !exact_
    bool exact_;

    void normalize();
    long eff_order() const { return exact_ ? kExactOrder : order_; }
    // Lower bound on the valuation usable in order bookkeeping.
    long lo_bound() const {
        if (!c_.empty()) return lo_;
        return exact_ ? kExactOrder : order_ + 1;
    }
    friend struct QSeriesOps;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rat& c, const QSeries& a);
QSeries operator-(const QSeries& a);

std::string to_string(const QSeries& s, long max_terms = 16);

}  // namespace qident
