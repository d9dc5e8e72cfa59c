#include "irrpoly/graded.hpp"

#include <stdexcept>

namespace irrpoly {

std::string to_string(SymConvention conv) {
    return conv == SymConvention::koszul ? "koszul" : "naive";
}

SymConvention parse_convention(const std::string& text) {
    if (text == "koszul") return SymConvention::koszul;
    if (text == "naive") return SymConvention::naive;
    throw std::invalid_argument("unknown convention '" + text + "' (use koszul or naive)");
}

Series sym_power(const Series& V, int m, SymConvention conv) {
    if (m < 0) throw std::invalid_argument("sym_power: m must be >= 0");
    if (!V.nonnegative()) throw std::invalid_argument("sym_power: dimension series must be >= 0");
    int T = V.trunc();
    // polynomial in z with Series coefficients; S[j] multiplies z^j
    std::vector<Series> S(size_t(m) + 1, Series(T));
    S[0] = Series::unit(T);
    for (int k = 0; k <= T; ++k) {
        const Int& a = V.at(k);
        if (a == 0) continue;
        bool bounded = (conv == SymConvention::koszul) && (k % 2 == 1);
        // factor expansion: sum_j fac(j) z^j t^{kj}
        std::vector<Series> next(size_t(m) + 1, Series(T));
        for (int zj = 0; zj <= m; ++zj) {
            if (!S[size_t(zj)].lowest_degree().has_value()) continue;
            for (int j = 0; zj + j <= m; ++j) {
                if (k > 0 && k * j > T) break;
                if (bounded && Int(j) > a) break;
                Int fac = bounded ? binomial(a, (unsigned long)(j))
                                  : binomial(Int(a + j - 1), (unsigned long)(j));
                if (fac == 0) continue;
                const Series& src = S[size_t(zj)];
                Series& dst = next[size_t(zj + j)];
                int kj = k * j;
                for (int t = 0; t + kj <= T; ++t) {
                    const Int& c = src.at(t);
                    if (c != 0) dst.set(t + kj, dst.at(t + kj) + c * fac);
                }
            }
        }
        S = std::move(next);
    }
    return S[size_t(m)];
}

Int invariant_dim_oracle(const Series& V, int m, int degree, SymConvention conv) {
    if (m < 0 || degree < 0)
        throw std::invalid_argument("invariant_dim_oracle: m and degree must be >= 0");
    if (degree > V.trunc())
        throw std::out_of_range("invariant_dim_oracle: degree exceeds series truncation");
    if (!V.nonnegative())
        throw std::invalid_argument("invariant_dim_oracle: dimension series must be >= 0");
    // one entry per individual generator, degrees ascending
    std::vector<int> gens;
    for (int k = 0; k <= std::min(degree, V.trunc()); ++k) {
        const Int& a = V.at(k);
        if (a == 0) continue;
        if (!a.fits_ulong_p() || gens.size() + a.get_ui() > 200000)
            throw std::invalid_argument("invariant_dim_oracle: generator count out of budget");
        for (unsigned long i = 0; i < a.get_ui(); ++i) gens.push_back(k);
    }
    std::function<Int(size_t, int, int)> rec = [&](size_t i, int rem_m, int rem_deg) -> Int {
        if (rem_m == 0) return rem_deg == 0 ? 1 : 0;
        if (i == gens.size()) return 0;
        if (gens[i] > 0 && long(gens[i]) * rem_m > rem_deg) return 0;  // degrees ascend
        Int total = 0;
        int emax = rem_m;
        if (conv == SymConvention::koszul && gens[i] % 2 == 1) emax = 1;
        for (int e = 0; e <= emax && e * gens[i] <= rem_deg; ++e)
            total += rec(i + 1, rem_m - e, rem_deg - e * gens[i]);
        return total;
    };
    return rec(0, m, degree);
}

RationalForm reference_closed_form(int d) {
    switch (d) {
        case 1: return {2, {2}};
        case 2: return {5, {2, 4}};
        case 3: return {10, {2, 6}};
        default: throw std::invalid_argument("reference_closed_form: tabulated only for d <= 3");
    }
}

Series stable_irr_series(int d, int T, SymConvention conv) {
    if (T < 0) throw std::invalid_argument("stable_irr_series: T must be >= 0");
    switch (d) {
        case 1:
            return reference_closed_form(1).expand(T);
        case 2: {
            Series p1 = stable_irr_series(1, T, conv);
            return sym_power(p1, 2, conv).shifted(1).truncated(T);
        }
        case 3: {
            Series p1 = stable_irr_series(1, T, conv);
            Series p2 = stable_irr_series(2, T, conv);
            Series product = p2.mul(p1);                       // T_{1+2} dims
            Series sym3 = sym_power(p1, 3, conv);              // T_{1+1+1} dims
            Series coker = cokernel_subtract(product, sym3, 1);
            return coker.shifted(1).truncated(T);
        }
        default:
            throw std::invalid_argument(
                "stable_irr_series: stable series known only for d <= 3 "
                "(d=4 data is available through the spectral window)");
    }
}

Series stable_stratum_series(const Partition& lambda, int T, SymConvention conv,
                             const std::map<int, Series>* extra) {
    Series result = Series::unit(T);
    for (const auto& [j, m] : lambda.multiplicities()) {
        Series base(0);
        if (j <= 3) {
            base = stable_irr_series(j, T, conv);
        } else if (extra && extra->count(j)) {
            base = extra->at(j).trunc() >= T ? extra->at(j).truncated(T) : extra->at(j);
        } else {
            throw std::invalid_argument("stable_stratum_series: no stable series for part " +
                                        std::to_string(j) + " (supply one explicitly)");
        }
        result = result.mul(sym_power(base, m, conv));
    }
    return result;
}

SeriesComparison compare_series(const Series& a, const Series& b) {
    SeriesComparison cmp;
    cmp.compared_through = std::min(a.trunc(), b.trunc());
    for (int k = 0; k <= cmp.compared_through; ++k) {
        if (a.at(k) != b.at(k)) {
            cmp.first_divergence = k;
            break;
        }
    }
    return cmp;
}

} // namespace irrpoly
