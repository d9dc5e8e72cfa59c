#include "irrpoly/brute.hpp"

#include "irrpoly/census.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irrpoly {

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw std::invalid_argument("MonomialBasis: need n >= 1, d >= 0");
    std::vector<int> cur(size_t(n), 0);
    std::function<void(int, int)> gen = [&](int var, int rem) {
        if (var == n) {
            exps_.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[size_t(var)] = e;
            gen(var + 1, rem - e);
        }
        cur[size_t(var)] = 0;
    };
    gen(0, d);
    std::sort(exps_.begin(), exps_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    });
    deg_.reserve(exps_.size());
    for (const auto& e : exps_) deg_.push_back(std::accumulate(e.begin(), e.end(), 0));
    start_.assign(size_t(d) + 2, 0);
    for (int deg = 0; deg <= d + 1; ++deg) {
        int i = 0;
        while (i < count() && deg_[size_t(i)] < deg) ++i;
        start_[size_t(deg)] = i;
    }

    long radix = 1;
    for (int i = 0; i < n; ++i) {
        radix *= (d + 1);
        if (radix > (1l << 24)) throw BruteBudgetError("MonomialBasis: radix table too large");
    }
    code_to_index_.assign(size_t(radix), -1);
    for (int i = 0; i < count(); ++i) code_to_index_[size_t(radix_code(exps_[size_t(i)]))] = i;
}

long MonomialBasis::radix_code(const std::vector<int>& e) const {
    long c = 0;
    for (int i = n_ - 1; i >= 0; --i) c = c * (d_ + 1) + e[size_t(i)];
    return c;
}

int MonomialBasis::product_index(int a, int b) const {
    if (deg_[size_t(a)] + deg_[size_t(b)] > d_)
        throw std::invalid_argument("MonomialBasis::product_index: degree overflow");
    std::vector<int> e(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) e[size_t(i)] = exps_[size_t(a)][size_t(i)] + exps_[size_t(b)][size_t(i)];
    return code_to_index_[size_t(radix_code(e))];
}

BruteContext::BruteContext(int d, int n, int p, std::uint64_t state_cap)
    : d_(d), n_(n), p_(p), state_cap_(state_cap), basis_(n, d) {
    if (d < 1) throw std::invalid_argument("BruteContext: d must be >= 1");
    if (p != 2 && p != 3 && p != 5)
        throw std::invalid_argument("BruteContext: prime field must be one of {2, 3, 5}");
    state_count(d);  // enforce the budget up front
    for (int x = 1; x < p; ++x) {
        int inv = 1;
        for (int k = 0; k < p - 2; ++k) inv = inv * x % p;
        inverse_[size_t(x)] = std::uint8_t(inv);
    }
}

std::uint64_t BruteContext::state_count(int deg) const {
    Int states;
    mpz_ui_pow_ui(states.get_mpz_t(), (unsigned long)(p_),
                  (unsigned long)(degree_space_size(deg, n_).get_ui()));
    if (states > Int(state_cap_))
        throw BruteBudgetError("brute-force state space p^B(d,n) = " + states.get_str() +
                               " exceeds the cap " + std::to_string(state_cap_) +
                               " (raise the cap to proceed)");
    return states.get_ui();
}

int BruteContext::degree(const Coeffs& f) const {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)]) return basis_.degree_of(i);
    return -1;
}

bool BruteContext::is_canonical(const Coeffs& f) const {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)]) return f[size_t(i)] == 1;
    return false;
}

void BruteContext::normalize(Coeffs& f) const {
    int lead = -1;
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[size_t(i)]) {
            lead = i;
            break;
        }
    if (lead < 0) throw std::invalid_argument("BruteContext::normalize: zero polynomial");
    std::uint8_t c = f[size_t(lead)];
    if (c == 1) return;
    int inv = inverse_[size_t(c)];
    for (auto& v : f) v = std::uint8_t(v * inv % p_);
}

Coeffs BruteContext::multiply(const Coeffs& f, const Coeffs& g) const {
    Coeffs r(size_t(basis_.count()), 0);
    for (int i = 0; i < int(f.size()); ++i) {
        if (!f[size_t(i)]) continue;
        for (int j = 0; j < int(g.size()); ++j) {
            if (!g[size_t(j)]) continue;
            int k = basis_.product_index(i, j);
            r[size_t(k)] = std::uint8_t((r[size_t(k)] + f[size_t(i)] * g[size_t(j)]) % p_);
        }
    }
    return r;
}

std::uint64_t BruteContext::encode(const Coeffs& f) const {
    std::uint64_t v = 0;
    for (int i = int(f.size()) - 1; i >= 0; --i) v = v * std::uint64_t(p_) + f[size_t(i)];
    return v;
}

Int BruteContext::expected_normalized_count(int deg) const {
    Int hi, lo;
    mpz_ui_pow_ui(hi.get_mpz_t(), (unsigned long)(p_),
                  (unsigned long)(degree_space_size(deg, n_).get_ui()));
    mpz_ui_pow_ui(lo.get_mpz_t(), (unsigned long)(p_),
                  (unsigned long)(degree_space_size(deg - 1, n_).get_ui()));
    return (hi - lo) / (p_ - 1);
}

const std::vector<Coeffs>& BruteContext::normalized(int deg) {
    if (deg < 1 || deg > d_) throw std::invalid_argument("normalized: degree out of range");
    auto it = normalized_.find(deg);
    if (it != normalized_.end()) return it->second;

    std::vector<Coeffs> out;
    int lo = basis_.degree_start(deg), hi = basis_.degree_start(deg + 1);
    for (int lead = lo; lead < hi; ++lead) {
        Coeffs f(size_t(basis_.count()), 0);
        f[size_t(lead)] = 1;
        // odometer over all coefficients below the leading monomial
        for (;;) {
            out.push_back(f);
            int i = 0;
            while (i < lead) {
                if (++f[size_t(i)] < p_) break;
                f[size_t(i)] = 0;
                ++i;
            }
            if (i == lead) break;
        }
    }
    if (Int((unsigned long)(out.size())) != expected_normalized_count(deg))
        throw CensusConsistencyError("normalized enumeration count mismatch at degree " +
                                     std::to_string(deg));
    return normalized_.emplace(deg, std::move(out)).first->second;
}

std::vector<std::uint64_t> BruteContext::reducible_marks(int deg, bool parallel) {
    std::uint64_t states = state_count(deg);
    std::vector<std::uint64_t> bits((states + 63) / 64, 0);
    for (int a = 1; a <= deg / 2; ++a) {
        int b = deg - a;
        // outer loop over the larger list for parallel grain
        const auto& fa = normalized(a).size() >= normalized(b).size() ? normalized(a)
                                                                      : normalized(b);
        const auto& fb = normalized(a).size() >= normalized(b).size() ? normalized(b)
                                                                      : normalized(a);
        // product of two canonical polynomials is canonical: monic leading
        // terms multiply to the monic leading term
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
            for (long i = 0; i < long(fa.size()); ++i) {
                size_t jlo = (a == b) ? size_t(i) : 0;
                for (size_t j = jlo; j < fb.size(); ++j) {
                    std::uint64_t s = encode(multiply(fa[size_t(i)], fb[j]));
                    std::uint64_t word = s >> 6, bit = 1ull << (s & 63);
#ifdef _OPENMP
#pragma omp atomic update
#endif
                    bits[word] |= bit;
                }
            }
        } else {
            for (size_t i = 0; i < fa.size(); ++i) {
                size_t jlo = (a == b) ? i : 0;
                for (size_t j = jlo; j < fb.size(); ++j) {
                    std::uint64_t s = encode(multiply(fa[i], fb[j]));
                    bits[s >> 6] |= 1ull << (s & 63);
                }
            }
        }
    }
    return bits;
}

const BruteContext::SieveResult& BruteContext::sieve(int deg, bool parallel) {
    auto it = sieve_.find(deg);
    if (it != sieve_.end()) return it->second;
    auto bits_it = marks_.find(deg);
    if (bits_it == marks_.end())
        bits_it = marks_.emplace(deg, reducible_marks(deg, parallel)).first;
    Int reducible = 0;
    for (std::uint64_t w : bits_it->second) reducible += (unsigned long)(__builtin_popcountll(w));
    SieveResult r;
    r.total = expected_normalized_count(deg);
    r.reducible = reducible;
    r.irreducible = r.total - reducible;
    return sieve_.emplace(deg, std::move(r)).first->second;
}

const std::vector<Coeffs>& BruteContext::irreducible(int deg, bool parallel) {
    auto it = irreducible_.find(deg);
    if (it != irreducible_.end()) return it->second;
    sieve(deg, parallel);  // ensures marks_ holds the bitset
    const auto& bits = marks_.at(deg);
    std::vector<Coeffs> out;
    for (const Coeffs& f : normalized(deg)) {
        std::uint64_t s = encode(f);
        if (!(bits[s >> 6] >> (s & 63) & 1)) out.push_back(f);
    }
    const SieveResult& sv = sieve(deg, parallel);
    if (Int((unsigned long)(out.size())) != sv.irreducible)
        throw CensusConsistencyError("irreducible list size disagrees with sieve count");
    return irreducible_.emplace(deg, std::move(out)).first->second;
}

BruteContext::Census BruteContext::census(bool parallel) {
    Census out;
    const SieveResult& top = sieve(d_, parallel);
    out.total = top.total;
    out.irreducible = top.irreducible;

    std::uint64_t states = state_count(d_);
    std::vector<std::uint8_t> covered(states, 0);
    Int covered_total = 0;

    for (const Partition& lambda : enumerate_partitions(d_, 0)) {
        if (lambda.size() == 1) {
            out.rows.emplace_back(lambda, top.irreducible);
            continue;
        }
        // multisets of irreducibles realizing the factor degrees of lambda
        const std::map<int, int> mult = lambda.multiplicities();
        const std::vector<std::pair<int, int>> items(mult.begin(), mult.end());
        Int count = 0;
        Coeffs one(size_t(basis_.count()), 0);
        one[0] = 1;
        std::function<void(size_t, size_t, int, const Coeffs&)> gen =
            [&](size_t item, size_t min_idx, int picked, const Coeffs& acc) {
                if (item == items.size()) {
                    std::uint64_t s = encode(acc);
                    if (covered[s]++)
                        throw CensusConsistencyError(
                            "duplicate factorization product for partition " + lambda.to_string());
                    ++count;
                    return;
                }
                auto [j, m] = items[item];
                const auto& irr = irreducible(j, parallel);
                if (picked == m) {
                    gen(item + 1, 0, 0, acc);
                    return;
                }
                for (size_t i = min_idx; i < irr.size(); ++i)
                    gen(item, i, picked + 1, multiply(acc, irr[i]));
            };
        gen(0, 0, 0, one);
        covered_total += count;
        out.rows.emplace_back(lambda, count);
    }

    if (covered_total != top.reducible)
        throw CensusConsistencyError("census products cover " + covered_total.get_str() +
                                     " states but the sieve marked " + top.reducible.get_str());
    Int sum = 0;
    for (const auto& [lambda, c] : out.rows) sum += c;
    if (sum != out.total)
        throw CensusConsistencyError("census rows sum to " + sum.get_str() +
                                     ", expected the enumeration total " + out.total.get_str());
    return out;
}

std::vector<std::array<int, 3>> default_validation_tuples() {
    return {{2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 3, 2}};
}

CrossValidationReport cross_validate(const std::vector<std::array<int, 3>>& dnp, bool parallel,
                                     std::uint64_t state_cap) {
    auto t0 = std::chrono::steady_clock::now();
    CrossValidationReport report;
    for (const auto& [d, n, p] : dnp) {
        CrossValidationRow row;
        row.d = d;
        row.n = n;
        row.p = p;
        BruteContext ctx(d, n, p, state_cap);
        BruteContext::Census census = ctx.census(parallel);
        CountContext sym(n);
        row.sieve_count = census.irreducible;
        row.symbolic_count = sym.irr_count(d).eval_int(p);
        row.count_match = row.sieve_count == row.symbolic_count;
        row.pass = row.count_match;
        for (const auto& [lambda, c] : census.rows) {
            CrossValidationRow::PartRow pr{lambda, c, sym.stratum_count(lambda).eval_int(p), false};
            pr.match = pr.census_count == pr.symbolic_count;
            if (!pr.match) row.pass = false;
            row.parts.push_back(std::move(pr));
        }
        if (!row.pass) report.all_pass = false;
        report.rows.push_back(std::move(row));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace irrpoly
