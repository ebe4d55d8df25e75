#include <qident/qseries.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qident {

namespace {

long clamp_order(long o) { return std::min(o, QSeries::kExactOrder); }

// Exponent of q as a grid index at scale k; throws if not representable.
long to_index(const Rat& e, long k) {
    Rat scaled = e * k;
    if (!rat_is_integer(scaled))
        fail(errc::fractional_grid,
             "exponent " + rat_str(e) + " not on the q^(1/" + std::to_string(k) + ") grid");
    return rat_num_ll(scaled);
}

}  // namespace

void QSeries::normalize() {
    size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b > 0 || e < c_.size()) {
        c_ = std::vector<Rat>(c_.begin() + b, c_.begin() + e);
        lo_ += static_cast<long>(b);
    }
    if (c_.empty()) lo_ = 0;
    if (!exact_ && !c_.empty() && hi_index() > order_) {
        c_.resize(static_cast<size_t>(std::max<long>(0, order_ - lo_ + 1)));
        normalize();
        return;
    }
    // Fold the grid down when all indices share a factor with the scale.
    if (scale_ > 1) {
        long g = scale_;
        for (size_t i = 0; i < c_.size() && g > 1; ++i)
            if (c_[i] != 0) g = std::gcd(g, lo_ + static_cast<long>(i));
        if (c_.empty()) g = scale_;
        if (g > 1) {
            std::vector<Rat> nc;
            if (!c_.empty()) {
                nc.resize(static_cast<size_t>((hi_index() - lo_) / g) + 1);
                for (size_t i = 0; i < c_.size(); ++i)
                    if (c_[i] != 0) nc[static_cast<size_t>((static_cast<long>(i))) / g] = c_[i];
            }
            c_ = std::move(nc);
            lo_ /= g;
            scale_ /= g;
            if (!exact_) {
                // floor division keeps the claim conservative for negative orders too
                long o = order_;
                order_ = (o >= 0) ? o / g : -((-o + g - 1) / g);
            }
        }
    }
    if (exact_) order_ = kExactOrder;
}

QSeries QSeries::zero_through(long order_q, long scale) {
    QSeries s;
    s.scale_ = scale;
    s.exact_ = false;
    s.order_ = clamp_order(order_q * scale + (scale - 1));
    return s;
}

QSeries QSeries::constant(Rat c) {
    QSeries s;
    if (c != 0) {
        s.c_.push_back(std::move(c));
        s.lo_ = 0;
    }
    return s;
}

QSeries QSeries::monomial(Rat coeff, const Rat& exponent) {
    if (coeff == 0) return QSeries();
    QSeries s;
    s.scale_ = rat_den_ll(exponent);
    s.lo_ = to_index(exponent, s.scale_);
    s.c_.push_back(std::move(coeff));
    s.normalize();
    return s;
}

QSeries QSeries::make(long scale, long lo, std::vector<Rat> coeffs, long order_idx,
                      bool exact) {
    QSeries s;
    s.scale_ = scale;
    s.lo_ = lo;
    s.c_ = std::move(coeffs);
    s.order_ = clamp_order(order_idx);
    s.exact_ = exact || order_idx >= kExactOrder;
    s.normalize();
    return s;
}

Rat QSeries::order_exponent() const {
    if (exact_) fail(errc::bad_argument, "exact series has no finite order");
    return Rat(order_) / scale_;
}

bool QSeries::known_through(const Rat& e) const {
    if (exact_) return true;
    return e * scale_ <= order_;
}

Rat QSeries::valuation() const {
    if (c_.empty()) fail(errc::bad_argument, "valuation of zero window");
    return Rat(lo_) / scale_;
}

const Rat& QSeries::leading_coeff() const {
    if (c_.empty()) fail(errc::bad_argument, "leading coefficient of zero window");
    return c_.front();
}

Rat QSeries::coeff(const Rat& e) const {
    if (!known_through(e))
        fail(errc::bad_argument, "coefficient of q^" + rat_str(e) + " beyond series order");
    Rat scaled = e * scale_;
    if (!rat_is_integer(scaled)) return Rat(0);
    return coeff_index(rat_num_ll(scaled));
}

Rat QSeries::coeff_index(long idx) const {
    if (idx < lo_ || idx > hi_index()) return Rat(0);
    return c_[static_cast<size_t>(idx - lo_)];
}

long QSeries::nonzero_terms_through(const Rat& cutoff) const {
    long n = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (Rat(lo_ + static_cast<long>(i)) <= cutoff * scale_) ++n;
    }
    return n;
}

QSeries QSeries::truncated(const Rat& order_q) const {
    Rat scaled = order_q * scale_;
    long idx;
    if (rat_is_integer(scaled)) {
        idx = rat_num_ll(scaled);
    } else {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        idx = mpz_get_si(fl.get_mpz_t());
    }
    return truncated_index(idx);
}

QSeries QSeries::truncated_index(long order_idx) const {
    QSeries s = *this;
    if (order_idx >= s.eff_order()) return s;
    s.exact_ = false;
    s.order_ = order_idx;
    s.normalize();
    return s;
}

QSeries QSeries::rescaled(long new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale % scale_ != 0) fail(errc::bad_argument, "rescale target must be a multiple");
    long f = new_scale / scale_;
    QSeries s;
    s.scale_ = new_scale;
    s.exact_ = exact_;
    s.lo_ = lo_ * f;
    if (!c_.empty()) {
        s.c_.resize(static_cast<size_t>(hi_index() * f - s.lo_) + 1);
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) s.c_[i * static_cast<size_t>(f)] = c_[i];
    }
    s.order_ = exact_ ? kExactOrder : clamp_order(order_ * f + (f - 1));
    // no normalize: would immediately fold the grid back down
    return s;
}

QSeries QSeries::substitute_power(long k) const {
    if (k <= 0) fail(errc::bad_argument, "substitute_power needs k >= 1");
    QSeries s;
    s.scale_ = scale_;
    s.exact_ = exact_;
    s.lo_ = lo_ * k;
    if (!c_.empty()) {
        s.c_.resize(static_cast<size_t>((hi_index() - lo_) * k) + 1);
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) s.c_[i * static_cast<size_t>(k)] = c_[i];
    }
    s.order_ = exact_ ? kExactOrder : clamp_order(order_ * k + (k - 1));
    s.normalize();
    return s;
}

QSeries QSeries::derivative_qlog() const {
    QSeries s = *this;
    for (size_t i = 0; i < s.c_.size(); ++i)
        s.c_[i] *= rat_frac(s.lo_ + static_cast<long>(i), s.scale_);
    s.normalize();
    return s;
}

void QSeries::mul_binomial(int sign, const Rat& e) {
    if (sign == 0) fail(errc::bad_argument, "binomial factor needs sign +-1");
    long k = std::lcm(scale_, rat_den_ll(e));
    if (k != scale_) *this = rescaled(k);
    long d = to_index(e, scale_);
    if (d == 0) { // (1 + sign) constant factor
        Rat f = Rat(1) + sign;
        for (auto& c : c_) c *= f;
        normalize();
        return;
    }
    long new_order = exact_ ? kExactOrder : clamp_order(order_ + std::min<long>(0, d));
    if (c_.empty()) {
        order_ = new_order;
        normalize();
        return;
    }
    long nlo = std::min(lo_, lo_ + d);
    long nhi = std::max(hi_index(), hi_index() + d);
    std::vector<Rat> nc(static_cast<size_t>(nhi - nlo) + 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long base = lo_ + static_cast<long>(i);
        nc[static_cast<size_t>(base - nlo)] += c_[i];
        if (sign > 0)
            nc[static_cast<size_t>(base + d - nlo)] += c_[i];
        else
            nc[static_cast<size_t>(base + d - nlo)] -= c_[i];
    }
    lo_ = nlo;
    c_ = std::move(nc);
    order_ = new_order;
    if (new_order != kExactOrder) exact_ = false;
    normalize();
}

void QSeries::div_binomial(int sign, const Rat& e) {
    if (sign == 0) fail(errc::bad_argument, "binomial divisor needs sign +-1");
    long k = std::lcm(scale_, rat_den_ll(e));
    if (k != scale_) *this = rescaled(k);
    long d = to_index(e, scale_);
    if (d <= 0) fail(errc::bad_argument, "binomial divisor exponent must be positive");
    if (c_.empty()) return;
    // 1/(1 + s*q^d): c'_i = c_i - s*c'_{i-d}; an exact polynomial input
    // generally becomes an honest truncated series, so a target order is
    // required in that case (callers use invert() for that); here we keep
    // the stored order for truncated inputs and extend exact ones to it.
    long target = exact_ ? kExactOrder : order_;
    if (target == kExactOrder)
        fail(errc::bad_argument, "div_binomial on exact polynomial needs truncation first");
    std::vector<Rat> out(static_cast<size_t>(target - lo_) + 1);
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (long idx = lo_; idx <= target; ++idx) {
        if (idx - d < lo_) continue;
        Rat& cur = out[static_cast<size_t>(idx - lo_)];
        const Rat& prev = out[static_cast<size_t>(idx - d - lo_)];
        if (sign > 0)
            cur -= prev;
        else
            cur += prev;
    }
    c_ = std::move(out);
    exact_ = false;
    order_ = target;
    normalize();
}

struct QSeriesOps {
    static void align(QSeries& a, QSeries& b) {
        long k = std::lcm(a.scale_, b.scale_);
        if (a.scale_ != k) a = a.rescaled(k);
        if (b.scale_ != k) b = b.rescaled(k);
    }
};

QSeries add(const QSeries& a0, const QSeries& b0) {
    QSeries a = a0, b = b0;
    QSeriesOps::align(a, b);
    QSeries r;
    r.scale_ = a.scale_;
    r.exact_ = a.exact_ && b.exact_;
    r.order_ = std::min(a.eff_order(), b.eff_order());
    if (a.c_.empty() && b.c_.empty()) {
        r.normalize();
        return r;
    }
    long lo = a.c_.empty() ? b.lo_ : (b.c_.empty() ? a.lo_ : std::min(a.lo_, b.lo_));
    long hi = a.c_.empty() ? b.hi_index()
                                : (b.c_.empty() ? a.hi_index() : std::max(a.hi_index(), b.hi_index()));
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo) + 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<size_t>(a.lo_ - lo) + i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[static_cast<size_t>(b.lo_ - lo) + i] += b.c_[i];
    r.normalize();
    return r;
}

QSeries neg(const QSeries& a) {
    QSeries r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries scalar_mul(const Rat& c, const QSeries& a) {
    if (c == 0) {
        if (a.exact_) return QSeries();
        QSeries z;
        z.scale_ = a.scale_;
        z.exact_ = false;
        z.order_ = a.order_;
        return z;
    }
    QSeries r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

QSeries mul(const QSeries& a0, const QSeries& b0) {
    if (a0.is_exact_zero() || b0.is_exact_zero()) return QSeries();
    QSeries a = a0, b = b0;
    QSeriesOps::align(a, b);
    QSeries r;
    r.scale_ = a.scale_;
    r.exact_ = a.exact_ && b.exact_;
    long order = std::min(clamp_order(a.eff_order() + b.lo_bound()),
                               clamp_order(b.eff_order() + a.lo_bound()));
    r.order_ = clamp_order(order);
    if (r.order_ >= QSeries::kExactOrder) r.exact_ = true;
    if (a.c_.empty() || b.c_.empty()) {
        r.exact_ = r.exact_ && a.exact_ && b.exact_;
        r.normalize();
        return r;
    }
    long lo = a.lo_ + b.lo_;
    long hi = a.hi_index() + b.hi_index();
    if (!r.exact_) hi = std::min(hi, r.order_);
    if (hi < lo) {
        r.normalize();
        return r;
    }
    r.lo_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo) + 1, Rat(0));
    // schoolbook convolution; windows here are a few hundred entries
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        long ia = a.lo_ + static_cast<long>(i);
        if (ia + b.lo_ > hi) break;
        size_t jmax = std::min(b.c_.size(), static_cast<size_t>(hi - ia - b.lo_) + 1);
        for (size_t j = 0; j < jmax; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[static_cast<size_t>(ia + b.lo_ + static_cast<long>(j) - lo)] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

QSeries invert(const QSeries& s, const Rat& order_q) {
    if (s.window_zero()) fail(errc::not_invertible, "inverting a series with zero window");
    long target = std::min(clamp_order(to_index(order_q * s.scale_, 1)),
                                clamp_order(s.eff_order() - 2 * s.lo_));
    long v = s.lo_;
    const Rat& c0 = s.c_.front();
    long len = target + v + 1; // coefficients r_0 .. r_{len-1} of the unit part
    if (len < 1) len = 1;
    std::vector<Rat> t(static_cast<size_t>(len), Rat(0));
    for (size_t i = 0; i < s.c_.size() && i < t.size(); ++i) t[i] = s.c_[i] / c0;
    std::vector<Rat> r(static_cast<size_t>(len), Rat(0));
    r[0] = 1;
    for (long m = 1; m < len; ++m) {
        Rat acc(0);
        for (long j = 1; j <= m; ++j) {
            if (t[static_cast<size_t>(j)] == 0) continue;
            if (r[static_cast<size_t>(m - j)] == 0) continue;
            acc += t[static_cast<size_t>(j)] * r[static_cast<size_t>(m - j)];
        }
        r[static_cast<size_t>(m)] = -acc;
    }
    for (auto& x : r) x /= c0;
    return QSeries::make(s.scale_, -v, std::move(r), target, false);
}

QSeries invert(const QSeries& s) {
    if (s.window_zero()) fail(errc::not_invertible, "inverting a series with zero window");
    if (s.exact_ && s.c_.size() == 1) { // exact monomial has an exact inverse
        QSeries r;
        r.scale_ = s.scale_;
        r.lo_ = -s.lo_;
        r.c_.push_back(Rat(1) / s.c_.front());
        r.normalize();
        return r;
    }
    if (s.exact_) fail(errc::bad_argument, "inverting an exact polynomial needs a target order");
    return invert(s, rat_frac(s.order_ - 2 * s.lo_, s.scale_));
}

bool first_difference(const QSeries& a0, const QSeries& b0, const Rat& order_q, Rat* where) {
    QSeries a = a0, b = b0;
    QSeriesOps::align(a, b);
    if (!a.known_through(order_q) || !b.known_through(order_q))
        fail(errc::order_too_low, "comparison beyond the known order of an operand");
    long k = a.scale_;
    long top = rat_num_ll(Rat(order_q * k)); // grid index bound (order_q*k integral or floor)
    {
        Rat scaled = order_q * k;
        if (!rat_is_integer(scaled)) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            top = mpz_get_si(fl.get_mpz_t());
        }
    }
    long lo = std::min(a.lo_bound(), b.lo_bound());
    if (lo > top) return false;
    for (long i = lo; i <= top; ++i) {
        if (a.coeff_index(i) != b.coeff_index(i)) {
            if (where) *where = rat_frac(i, k);
            return true;
        }
    }
    return false;
}

bool equal_through(const QSeries& a, const QSeries& b, const Rat& order_q) {
    return !first_difference(a, b, order_q, nullptr);
}

QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
QSeries operator*(const Rat& c, const QSeries& a) { return scalar_mul(c, a); }
QSeries operator-(const QSeries& a) { return neg(a); }

std::string to_string(const SignedMonomial& m) {
    if (m.sign == 0) return "0";
    std::string s = m.sign < 0 ? "-" : "";
    if (m.exp == 0) return s + "1";
    if (m.exp == 1) return s + "q";
    return s + "q^(" + rat_str(m.exp) + ")";
}

std::string to_string(const QSeries& s, long max_terms) {
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (size_t i = 0; i < s.window().size(); ++i) {
        Rat c = s.window()[i];
        if (c == 0) continue;
        if (shown >= max_terms) {
            os << " + ...";
            break;
        }
        Rat e(s.lo_index() + static_cast<long>(i), s.scale());
        bool negc = c < 0;
        if (first) {
            if (negc) os << "-";
        } else {
            os << (negc ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || e == 0) os << rat_str(a);
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << (rat_is_integer(e) ? rat_str(e) : "(" + rat_str(e) + ")");
        }
        first = false;
        ++shown;
    }
    if (first) os << "0";
    if (!s.exact()) os << " + O(q^" << rat_str(rat_frac(s.order_index() + 1, s.scale())) << ")";
    return os.str();
}

}  // namespace qident
