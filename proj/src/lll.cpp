#include <qident/lll.hpp>
#include <qident/theta.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qident {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Integer-arithmetic LLL state: d[i] are the Gram determinants, lam[i][j]
// the scaled Gram-Schmidt coefficients (mu_ij = lam_ij / d_j).
struct LllState {
    IntMat b;
    std::vector<Int> d;   // d[0] = 1, d[i] for i = 1..n
    IntMat lam;           // lam[i][j], 1 <= j < i <= n (1-based storage)
    size_t n;

    explicit LllState(IntMat basis) : b(std::move(basis)), n(b.size()) {
        d.assign(n + 1, Int(1));
        lam.assign(n + 1, IntVec(n + 1, Int(0)));
        for (size_t i = 1; i <= n; ++i) {
            for (size_t j = 1; j <= i; ++j) {
                Int u = dot(b[i - 1], b[j - 1]);
                for (size_t l = 1; l < j; ++l) u = (d[l] * u - lam[i][l] * lam[j][l]) / d[l - 1];
                if (j < i)
                    lam[i][j] = u;
                else {
                    d[i] = u;
                    if (d[i] == 0) fail(errc::degenerate_basis, "rows are linearly dependent");
                }
            }
        }
    }

    void size_reduce(size_t k, size_t l) {
        if (2 * abs(lam[k][l]) <= d[l]) return;
        Int q = round_quotient(lam[k][l], d[l]);
        for (size_t i = 0; i < b[k - 1].size(); ++i) b[k - 1][i] -= q * b[l - 1][i];
        lam[k][l] -= q * d[l];
        for (size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }

    void swap_rows(size_t k) {
        std::swap(b[k - 1], b[k - 2]);
        for (size_t j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lamv = lam[k][k - 1];
        Int bb = (d[k - 2] * d[k] + lamv * lamv) / d[k - 1];
        for (size_t i = k + 1; i <= n; ++i) {
            Int t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - lamv * t) / d[k - 1];
            lam[i][k - 1] = (bb * t + lamv * lam[i][k]) / d[k];
        }
        d[k - 1] = bb;
    }

    void run() {
        if (n <= 1) return;
        size_t k = 2;
        while (k <= n) {
            size_reduce(k, k - 1);
            // Lovasz condition at delta = 99/100:
            // d[k]*d[k-2] + lam^2 >= delta * d[k-1]^2
            Int lhs = 100 * (d[k] * d[k - 2] + lam[k][k - 1] * lam[k][k - 1]);
            Int rhs = 99 * d[k - 1] * d[k - 1];
            if (lhs < rhs) {
                swap_rows(k);
                k = std::max<size_t>(2, k - 1);
            } else {
                for (size_t l = k - 2; l >= 1; --l) size_reduce(k, l);
                ++k;
            }
        }
    }
};

}  // namespace

IntMat lll_reduce(IntMat basis) {
    if (basis.empty()) return basis;
    LllState st(std::move(basis));
    st.run();
    return st.b;
}

std::vector<Fixed> product_log_values(long modulus, const Rat& q0, long digits) {
    // cache across sweep instances; keyed by (L, q0, digits)
    static std::map<std::tuple<long, Rat, long>, std::vector<Fixed>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({modulus, q0, digits});
        if (it != cache.end()) return it->second;
    }
    // order with q0^(N+1) below the guard precision
    long order = modulus;
    {
        Rat absq = ::abs(q0);
        Rat t = absq;
        while (t * pow10_z(digits + 4) >= 1) {
            t *= absq;
            ++order;
        }
        order = std::max(order + 2, modulus + 1);
    }
    std::vector<Fixed> vals;
    vals.reserve(static_cast<size_t>(modulus));
    for (long j = 1; j <= modulus; ++j) {
        QSeries p = poch_infinite(SignedMonomial::q_pow(Rat(j)), Rat(modulus), order);
        vals.push_back(log_fixed(eval_fixed(p, q0, digits + 6), digits));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_tuple(modulus, q0, digits), std::move(vals)).first->second;
}

LogLattice build_log_lattice(const QSeries& s, long modulus, const Rat& q0, long digits) {
    LogLattice lat;
    lat.q0 = q0;
    lat.modulus = modulus;
    lat.precision = digits;
    lat.values.push_back(log_fixed(eval_fixed(s, q0, digits + 6), digits));
    auto prods = product_log_values(modulus, q0, digits);
    lat.values.insert(lat.values.end(), prods.begin(), prods.end());
    return lat;
}

namespace {

Int scaled_entry(const Fixed& v, long precision, long slack) {
    // value * 10^(P - slack), rounded: mantissa / 10^slack
    Fixed r = v.rounded(precision);
    return round_quotient(r.mantissa(), pow10_z(slack));
}

std::optional<IntegerRelation> scan_reduced(const IntMat& reduced, const LogLattice& lat,
                                            const RelationOptions& opt) {
    size_t m = lat.values.size();
    // precision guard: 10^P must dominate bound^(L+2)
    {
        Int guard = int_pow(Int(opt.coeff_bound), static_cast<unsigned long>(m + 1));
        if (pow10_z(lat.precision) <= guard)
            fail(errc::insufficient_precision, "coefficient bound too large for this precision");
    }
    Fixed accept(Int(1), 0), reject(Int(1), 0);
    accept = Fixed(pow10_z(opt.accept_margin), lat.precision);
    reject = Fixed(pow10_z(std::max(opt.accept_margin, lat.precision / 2)), lat.precision);
    std::optional<IntegerRelation> best;
    bool saw_ambiguous = false;
    for (const auto& row : reduced) {
        bool in_bounds = true;
        bool nonzero = false;
        for (size_t i = 0; i < m; ++i) {
            if (abs(row[i]) >= opt.coeff_bound) in_bounds = false;
            if (row[i] != 0) nonzero = true;
        }
        if (!in_bounds || !nonzero) continue;
        if (row[0] == 0) continue; // relation must involve the series value
        Fixed resid = Fixed(Int(0), lat.precision);
        for (size_t i = 0; i < m; ++i)
            if (row[i] != 0) resid = resid + row[i] * lat.values[i];
        resid = resid.abs();
        if (resid < accept) {
            IntegerRelation rel;
            rel.b.resize(m);
            Int g = 0;
            for (size_t i = 0; i < m; ++i) g = gcd(g, row[i]);
            int flip = sgn(row[0]) < 0 ? -1 : 1;
            for (size_t i = 0; i < m; ++i)
                rel.b[i] = mpz_get_si(Int(flip * row[i] / g).get_mpz_t());
            rel.residual = resid;
            if (!best) best = rel;
        } else if (resid < reject) {
            saw_ambiguous = true;
        }
    }
    if (!best && saw_ambiguous)
        fail(errc::insufficient_precision, "residual test inconclusive at this precision");
    return best;
}

}  // namespace

IntMat reduce_product_rows(const LogLattice& lat, const RelationOptions& opt) {
    size_t m = lat.values.size();
    IntMat basis;
    for (size_t j = 1; j < m; ++j) {
        IntVec row(m + 1, Int(0));
        row[j] = 1;
        row[m] = scaled_entry(lat.values[j], lat.precision, opt.slack_digits);
        basis.push_back(std::move(row));
    }
    return lll_reduce(std::move(basis));
}

std::optional<IntegerRelation> find_relation_warm(const LogLattice& lat, const IntMat& reduced_tail,
                                                  const RelationOptions& opt) {
    size_t m = lat.values.size();
    IntMat basis;
    IntVec head(m + 1, Int(0));
    head[0] = 1;
    head[m] = scaled_entry(lat.values[0], lat.precision, opt.slack_digits);
    basis.push_back(std::move(head));
    for (const auto& row : reduced_tail) basis.push_back(row);
    IntMat reduced = lll_reduce(std::move(basis));
    return scan_reduced(reduced, lat, opt);
}

std::optional<IntegerRelation> find_relation(const LogLattice& lat, const RelationOptions& opt) {
    size_t m = lat.values.size();
    IntMat basis(m, IntVec(m + 1, Int(0)));
    for (size_t i = 0; i < m; ++i) {
        basis[i][i] = 1;
        basis[i][m] = scaled_entry(lat.values[i], lat.precision, opt.slack_digits);
    }
    IntMat reduced = lll_reduce(std::move(basis));
    return scan_reduced(reduced, lat, opt);
}

}  // namespace qident
