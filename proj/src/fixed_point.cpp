#include <qident/fixed_point.hpp>

#include <map>
#include <mutex>

namespace qident {

void Fixed::align(Fixed& a, Fixed& b) {
    if (a.digits_ == b.digits_) return;
    if (a.digits_ < b.digits_) {
        a.mant_ *= pow10_z(b.digits_ - a.digits_);
        a.digits_ = b.digits_;
    } else {
        b.mant_ *= pow10_z(a.digits_ - b.digits_);
        b.digits_ = a.digits_;
    }
}

Fixed Fixed::from_rat(const Rat& v, long digits) {
    Int num = v.get_num() * pow10_z(digits);
    return Fixed(round_quotient(num, v.get_den()), digits);
}

Rat Fixed::to_rat() const {
    Rat r(mant_, pow10_z(digits_));
    r.canonicalize();
    return r;
}

std::string Fixed::str() const {
    Int a = ::abs(mant_);
    Int scale = pow10_z(digits_);
    Int ip = a / scale;
    Int fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits_) - frac.size(), '0');
    std::string s = (sgn() < 0 ? "-" : "") + ip.get_str();
    if (digits_ > 0) s += "." + frac;
    return s;
}

Fixed Fixed::rounded(long digits) const {
    if (digits >= digits_) {
        return Fixed(mant_ * pow10_z(digits - digits_), digits);
    }
    return Fixed(round_quotient(mant_, pow10_z(digits_ - digits)), digits);
}

Fixed operator+(const Fixed& a0, const Fixed& b0) {
    Fixed a = a0, b = b0;
    Fixed::align(a, b);
    return Fixed(a.mant_ + b.mant_, a.digits_);
}

Fixed operator-(const Fixed& a0, const Fixed& b0) {
    Fixed a = a0, b = b0;
    Fixed::align(a, b);
    return Fixed(a.mant_ - b.mant_, a.digits_);
}

Fixed operator-(const Fixed& a) { return Fixed(-a.mant_, a.digits_); }

Fixed operator*(const Int& k, const Fixed& a) { return Fixed(k * a.mant_, a.digits_); }

Fixed operator*(const Fixed& a, const Fixed& b) {
    long d = std::max(a.digits_, b.digits_);
    Int prod = a.mant_ * b.mant_;
    long drop = a.digits_ + b.digits_ - d;
    return Fixed(round_quotient(prod, pow10_z(drop)), d);
}

bool operator<(const Fixed& a0, const Fixed& b0) {
    Fixed a = a0, b = b0;
    Fixed::align(a, b);
    return a.mant_ < b.mant_;
}

bool operator==(const Fixed& a0, const Fixed& b0) {
    Fixed a = a0, b = b0;
    Fixed::align(a, b);
    return a.mant_ == b.mant_;
}

Fixed Fixed::abs() const { return Fixed(::abs(mant_), digits_); }

Fixed eval_fixed(const QSeries& s, const Rat& q0, long digits) {
    if (::abs(q0) >= 1) fail(errc::bad_argument, "eval_fixed needs |q0| < 1");
    Rat base = q0;
    if (s.scale() > 1) {
        // need an exact scale-th root of q0 (e.g. 10^-4 at scale 2)
        Rat root = q0;
        bool found = false;
        if (q0 > 0) {
            Int rn, rd;
            if (mpz_root(rn.get_mpz_t(), q0.get_num_mpz_t(), static_cast<unsigned long>(s.scale())) &&
                mpz_root(rd.get_mpz_t(), q0.get_den_mpz_t(), static_cast<unsigned long>(s.scale()))) {
                root = Rat(rn, rd);
                root.canonicalize();
                found = true;
            }
        }
        if (!found)
            fail(errc::fractional_grid,
                 "series on a q^(1/" + std::to_string(s.scale()) + ") grid needs an exact root of q0");
        base = root;
    }
    if (!s.exact()) {
        // geometric tail estimate with the largest stored coefficient
        Rat cmax(0);
        for (const auto& c : s.window())
            if (::abs(c) > cmax) cmax = ::abs(c);
        if (cmax == 0) cmax = 1;
        Rat absq = ::abs(base);
        Rat tail = cmax * rat_pow(absq, s.order_index() + 1) / (1 - absq);
        if (tail * pow10_z(digits + 2) >= 1)
            fail(errc::tail_too_large, "truncation order too low for the requested precision");
    }
    // exact rational evaluation of the stored window, then one rounding
    Rat acc(0);
    Rat qpow = rat_pow(base, s.lo_index());
    const auto& w = s.window();
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) acc += w[i] * qpow;
        qpow *= base;
    }
    return Fixed::from_rat(acc, digits);
}

namespace {

// ln 2 at the given precision, cached (atanh(1/3) series, exact rationals).
const Rat& ln2_rat(long digits) {
    static std::map<long, Rat> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
    Rat y(1, 3);
    Rat y2 = y * y;
    Rat term = y;
    Rat acc(0);
    Rat eps(1, pow10_z(digits + 6));
    long k = 0;
    while (term > eps) {
        acc += term / (2 * k + 1);
        term *= y2;
        ++k;
    }
    return cache.emplace(digits, 2 * acc).first->second;
}

}  // namespace

Fixed log_fixed(const Fixed& v, long digits) {
    if (v.sgn() <= 0) fail(errc::log_domain, "log of a non-positive value");
    long work = digits + 10;
    Rat x = v.to_rat();
    long two_shift = 0;
    while (x > Rat(3, 2)) {
        x /= 2;
        ++two_shift;
    }
    while (x < Rat(2, 3)) {
        x *= 2;
        --two_shift;
    }
    // ln x = 2 atanh((x-1)/(x+1)), |y| <= 1/5 after reduction
    Rat y = (x - 1) / (x + 1);
    Rat y2 = y * y;
    Rat term = y;
    Rat acc(0);
    Rat eps(1, pow10_z(work + 4));
    long k = 0;
    while (::abs(term) > eps) {
        acc += term / (2 * k + 1);
        term *= y2;
        ++k;
    }
    Rat total = 2 * acc;
    if (two_shift != 0) total += two_shift * ln2_rat(work);
    return Fixed::from_rat(total, digits);
}

}  // namespace qident
