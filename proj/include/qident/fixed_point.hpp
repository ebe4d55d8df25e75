#pragma once

// Exact decimal fixed point: value = mantissa / 10^digits.  Used by the
// numeric relation-hunting stage; everything else in the library stays
// rational.  Worst-case rounding error per documented operation is stated
// in units of 10^-digits (one ulp unless noted).

#include <qident/qseries.hpp>

#include <string>

namespace qident {

class Fixed {
public:
    Fixed() : mant_(0), digits_(0) {}
    Fixed(Int mantissa, long digits) : mant_(std::move(mantissa)), digits_(digits) {}

    // Nearest fixed-point value; error <= 1/2 ulp.
    static Fixed from_rat(const Rat& v, long digits);

    const Int& mantissa() const { return mant_; }
    long digits() const { return digits_; }
    bool is_zero() const { return mant_ == 0; }
    int sgn() const { return mpz_sgn(mant_.get_mpz_t()); }

    Rat to_rat() const;
    std::string str() const; // fixed notation with all digits

    Fixed rounded(long digits) const; // error <= 1/2 ulp of the new precision

    friend Fixed operator+(const Fixed& a, const Fixed& b); // exact at max precision
    friend Fixed operator-(const Fixed& a, const Fixed& b); // exact
    friend Fixed operator-(const Fixed& a);
    friend Fixed operator*(const Int& k, const Fixed& a);   // exact
    friend Fixed operator*(const Fixed& a, const Fixed& b); // error <= 1/2 ulp
    friend bool operator<(const Fixed& a, const Fixed& b);
    friend bool operator==(const Fixed& a, const Fixed& b);

    Fixed abs() const;

private:
    Int mant_;
    long digits_;
    static void align(Fixed& a, Fixed& b);
};

// Sum of the truncated series at q = q0 (|q0| < 1), rounded to `digits`
// decimals.  Requires every exponent to evaluate rationally (integer grid,
// or q0 with an exact k-th root such as 10^-4 at scale 2).  Refuses when a
// window-based geometric tail estimate cannot push the neglected tail
// below 10^-(digits+2); the estimate uses the largest stored |coefficient|
// as a stand-in for the tail's, so callers keep responsibility for wildly
// growing tails.
Fixed eval_fixed(const QSeries& s, const Rat& q0, long digits);

// Natural log to +-2*10^-digits, computed at 10 guard digits via
// argument reduction to [2/3, 3/2] and the atanh series, one final rounding.
Fixed log_fixed(const Fixed& v, long digits);

}  // namespace qident
