#pragma once

// Exact LLL lattice reduction (integer Gram-Schmidt bookkeeping, delta = 99/100)
// plus the log-lattice integer-relation hunt: embed (log S, log(q^j;q^L)_inf)
// as a knapsack lattice, reduce, and scan the short vectors for a relation
// with small coefficients.  Numeric hits are advisory; callers re-verify
// symbolically before recording anything.

#include <qident/fixed_point.hpp>
#include <qident/qseries.hpp>

#include <optional>
#include <vector>

namespace qident {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// LLL-reduce the rows of `basis` (must be linearly independent over Q).
IntMat lll_reduce(IntMat basis);

struct LogLattice {
    std::vector<Fixed> values; // log S, then log(q^j; q^L)_inf for j = 1..L
    Rat q0;
    long modulus = 0;
    long precision = 0;
};

struct IntegerRelation {
    std::vector<long> b;  // b[0]*values[0] + ... + b[L]*values[L] ~ 0
    Fixed residual;
};

struct RelationOptions {
    long coeff_bound = 10;   // reject relations with max |b_j| >= bound
    long slack_digits = 5;   // lattice scaling 10^(P - slack)
    long accept_margin = 8;  // residual < 10^-(P - margin) accepts
};

// Returns a gcd-normalized relation with b[0] > 0, or nullopt when every
// candidate short vector violates the coefficient bound or has a clearly
// nonzero residual.  Residuals between the accept and reject thresholds
// raise insufficient-precision.
std::optional<IntegerRelation> find_relation(const LogLattice& lat, const RelationOptions& opt = {});

// Same, but warm-started: `reduced_tail` is the already-reduced lattice of
// the product logs alone (rows j = 1..L), as produced by reduce_product_rows.
std::optional<IntegerRelation> find_relation_warm(const LogLattice& lat, const IntMat& reduced_tail,
                                                  const RelationOptions& opt = {});

IntMat reduce_product_rows(const LogLattice& lat, const RelationOptions& opt = {});

// log(q^j; q^L)_inf at q0 for j = 1..L, each to `digits` fixed-point digits.
std::vector<Fixed> product_log_values(long modulus, const Rat& q0, long digits);

// Assemble the lattice for a concrete series value: values[0] = log S(q0).
LogLattice build_log_lattice(const QSeries& s, long modulus, const Rat& q0, long digits);

}  // namespace qident
