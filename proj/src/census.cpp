#include "irrpoly/census.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irrpoly {

Int degree_space_size(int d, int n) {
    if (d < 0 || n < 1) throw std::invalid_argument("degree_space_size: need d >= 0, n >= 1");
    return binomial(long(d) + n, (unsigned long)(n));
}

QPoly poly_exact_count(int d, int n) {
    if (d < 1)
        throw std::invalid_argument(
            "poly_exact_count: d must be >= 1 (degree-0 classes are projectivized away)");
    if (n < 1) throw std::invalid_argument("poly_exact_count: n must be >= 1");
    Int lower = degree_space_size(d - 1, n);
    Int width = binomial(long(d) + n - 1, (unsigned long)(n - 1));  // B(d,n) - B(d-1,n)
    if (!lower.fits_slong_p() || !width.fits_slong_p())
        throw std::invalid_argument("poly_exact_count: exponent range too large");
    return QPoly::q_power(lower.get_si()) * QPoly::geometric(width.get_si());
}

CountContext::CountContext(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CountContext: n must be >= 1");
}

const QPoly& CountContext::irr_count(int d) {
    if (d < 1) throw std::invalid_argument("irr_count: d must be >= 1");
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    QPoly r = irrpoly::poly_exact_count(d, n_);
    if (d > 1) {
        for (const Partition& lambda : enumerate_partitions(d, 2)) r -= stratum_count(lambda);
    }
    return memo_.emplace(d, std::move(r)).first->second;
}

QPoly CountContext::stratum_count(const Partition& lambda) {
    QPoly s = QPoly::constant(1);
    for (const auto& [j, m] : lambda.multiplicities())
        s *= multiset_binomial(irr_count(j), (unsigned long)(m));
    return s;
}

QPoly CountContext::poly_exact_count(int d) const { return irrpoly::poly_exact_count(d, n_); }

QPoly irr_count(int d, int n) {
    CountContext ctx(n);
    return ctx.irr_count(d);
}

QPoly stratum_count(const Partition& lambda, int n) {
    CountContext ctx(n);
    return ctx.stratum_count(lambda);
}

QPoly necklace_count(int d) {
    if (d < 1) throw std::invalid_argument("necklace_count: d must be >= 1");
    QPoly r;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        int mu = mobius((unsigned long)(e));
        if (mu == 0) continue;
        r += QPoly::q_power(d / e, Rat(mu, d));
    }
    return r;
}

EulerContext::EulerContext(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("EulerContext: n must be >= 1");
}

Int EulerContext::irr_euler(int d) {
    if (d < 1) throw std::invalid_argument("irr_euler: d must be >= 1");
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    // chi of the normalized degree-d space: C(d+n-1, n-1)
    Int r = binomial(long(d) + n_ - 1, (unsigned long)(n_ - 1));
    if (d > 1) {
        for (const Partition& lambda : enumerate_partitions(d, 2)) {
            Int s(1);
            for (const auto& [j, m] : lambda.multiplicities())
                s *= multiset_binomial(irr_euler(j), (unsigned long)(m));
            r -= s;
        }
    }
    memo_.emplace(d, r);
    return r;
}

Int euler_char(int d, int n) {
    EulerContext ctx(n);
    return ctx.irr_euler(d);
}

std::vector<EulerRow> euler_table(int d_max, int n_max) {
    if (d_max < 1 || n_max < 1) throw std::invalid_argument("euler_table: need d_max, n_max >= 1");
    std::vector<EulerRow> rows(size_t(d_max) * size_t(n_max));
    // independent context per column; deterministic regardless of schedule
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int n = 1; n <= n_max; ++n) {
        EulerContext ctx(n);
        for (int d = 1; d <= d_max; ++d)
            rows[size_t(d - 1) * size_t(n_max) + size_t(n - 1)] = {d, n, ctx.irr_euler(d)};
    }
    return rows;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

} // namespace

std::vector<CarlitzRow> carlitz_table(int q, int n, int d_max) {
    if (!is_prime(q)) throw std::invalid_argument("carlitz_table: q must be prime");
    if (n < 2)
        throw std::invalid_argument(
            "carlitz_table: n must be >= 2 (the ratio limit requires more than one variable)");
    if (d_max < 1) throw std::invalid_argument("carlitz_table: d_max must be >= 1");
    CountContext ctx(n);
    std::vector<CarlitzRow> rows;
    rows.reserve(size_t(d_max));
    for (int d = 1; d <= d_max; ++d) {
        Int num = ctx.irr_count(d).eval_int(q);
        Int exp = degree_space_size(d, n) - 1;
        Int den;
        mpz_pow_ui(den.get_mpz_t(), Int(q).get_mpz_t(), exp.get_ui());
        Rat ratio(num, den);
        ratio.canonicalize();
        rows.push_back({d, ratio});
    }
    return rows;
}

HydeResult hyde_stabilization(int d, int K, int n_max) {
    if (d < 1 || K < 0) throw std::invalid_argument("hyde_stabilization: need d >= 1, K >= 0");
    HydeResult res;
    res.d = d;
    res.window = K;
    res.n_max = n_max;
    int start = std::max(1, d);
    if (n_max < start + 2) return res;  // not enough room for three agreements
    std::vector<std::vector<Rat>> coeffs;  // indexed by n - start
    for (int n = start; n <= n_max; ++n) {
        QPoly p = irr_count(d, n);
        std::vector<Rat> row;
        row.reserve(size_t(K) + 1);
        for (long e = 0; e <= K; ++e) row.push_back(p.coefficient(e));
        coeffs.push_back(std::move(row));
        size_t i = coeffs.size();
        if (i >= 3 && coeffs[i - 1] == coeffs[i - 2] && coeffs[i - 2] == coeffs[i - 3]) {
            res.found = true;
            res.n0 = n - 2;
            res.coefficients = coeffs[i - 3];
            return res;
        }
    }
    return res;
}

} // namespace irrpoly
