#pragma once

// q-Pochhammer, Ramanujan theta, false theta and the classical
// specializations f(-q), phi(+-q), psi(+-q), all as exact truncated series.

#include <qident/qseries.hpp>

namespace qident {

// prod_{j=0}^{n-1} (1 - arg*q^{base_exp*j}), truncated to q^order.
// arg = 0 gives the constant 1.  Finite products that fit under the
// truncation come back marked exact.
QSeries poch_finite(const SignedMonomial& arg, const Rat& base_exp, long n, long order);

// prod_{j>=0} (1 - arg*q^{base_exp*j}) to q^order.  Requires a positive
// argument exponent, or arg = -1 (handled as the constant factor 2 on the
// j = 0 term).  arg = +1 at exponent 0 is the zero product and is rejected.
QSeries poch_infinite(const SignedMonomial& arg, const Rat& base_exp, long order);

// (arg; q^base)_inf ^ power, power may be negative.
QSeries poch_infinite_pow(const SignedMonomial& arg, const Rat& base_exp, long power,
                          long order);

// f(a,b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}, needs exp(a)+exp(b) > 0.
QSeries theta_f(const SignedMonomial& a, const SignedMonomial& b, long order);

// Jacobi triple product form (-a, -b, ab; ab)_inf.
QSeries jtp_product(const SignedMonomial& a, const SignedMonomial& b, long order);

// Psi(a,b) = sum_{n>=0} a^{n(n+1)/2} b^{n(n-1)/2} - sum_{n>=1} a^{n(n-1)/2} b^{n(n+1)/2}.
QSeries false_theta_psi(const SignedMonomial& a, const SignedMonomial& b, long order);

// The discarded half: sum_{n>=1} a^{n(n-1)/2} b^{n(n+1)/2}; f = Psi + 2*this.
QSeries theta_negative_half(const SignedMonomial& a, const SignedMonomial& b, long order);

enum class ClassicalTheta { f_minus, phi, phi_minus, psi, psi_minus };

// The named specialization in the variable q^k.
QSeries classical_theta(ClassicalTheta kind, long k, long order);
const char* classical_theta_name(ClassicalTheta kind);

}  // namespace qident
