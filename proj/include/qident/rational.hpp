#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

namespace qident {

using Int = mpz_class;
using Rat = mpq_class;

inline long rat_num_ll(const Rat& r) { return mpz_get_si(r.get_num_mpz_t()); }
inline long rat_den_ll(const Rat& r) { return mpz_get_si(r.get_den_mpz_t()); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// mpq_class(num, den) does not reduce; this does.
inline Rat rat_frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int pow10_z(long p) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (invert) acc = Rat(1) / acc;
    return acc;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Round to nearest, ties away from zero.
inline Int round_quotient(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) ++q;
    return q;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qident
