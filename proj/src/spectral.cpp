#include "irrpoly/spectral.hpp"

#include "irrpoly/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace irrpoly {

std::vector<DifferentialRule> known_differential_rules(int d) {
    using Kind = DifferentialRule::Kind;
    switch (d) {
        case 2:
            return {};
        case 3:
            return {{1, 0, std::nullopt, Kind::known_injective,
                     "connecting map factors through the product stratum via a split "
                     "transfer injection"}};
        case 4:
            return {{1, 0, std::nullopt, Kind::known_injective,
                     "split-transfer argument applied to the fourfold stratum column"},
                    {1, 1, std::make_pair(9, 9), Kind::known_zero,
                     "precomposition with the surjective column-0 differential vanishes, "
                     "so the induced map is zero"}};
        default:
            throw std::invalid_argument("known_differential_rules: shipped only for 2 <= d <= 4");
    }
}

Int E1Window::entry_dim(int p, int total_degree) const {
    Int sum = 0;
    for (const auto& [lambda, dim] : entry_breakdown(p, total_degree)) sum += dim;
    return sum;
}

std::vector<std::pair<Partition, Int>> E1Window::entry_breakdown(int p, int total_degree) const {
    for (const Column& col : columns) {
        if (col.p != p) continue;
        std::vector<std::pair<Partition, Int>> out;
        for (const Stratum& s : col.strata) out.emplace_back(s.lambda, s.dims.at(total_degree));
        return out;
    }
    throw std::out_of_range("E1Window: no column p=" + std::to_string(p));
}

E1Window e1_window(int d, int max_total_degree, SymConvention conv) {
    if (d < 2 || d > 4)
        throw std::invalid_argument(
            "e1_window: supported for 2 <= d <= 4 (stable input series unknown beyond)");
    if (max_total_degree < 0) throw std::invalid_argument("e1_window: window must be >= 0");
    E1Window w;
    w.d = d;
    w.max_total_degree = max_total_degree;
    w.conv = conv;
    for (int p = 0; p <= d - 2; ++p) {
        E1Window::Column col;
        col.p = p;
        for (const Partition& lambda : enumerate_partitions(d, 2)) {
            if (lambda.size() != d - p) continue;
            col.strata.push_back({lambda, stable_stratum_series(lambda, max_total_degree, conv)});
        }
        w.columns.push_back(std::move(col));
    }
    return w;
}

Int ResolvedWindow::e1_total(int t) const {
    Int s = 0;
    for (const auto& col : e1) s += col[size_t(t)];
    return s;
}

Int ResolvedWindow::einf_total(int t) const {
    Int s = 0;
    for (const auto& col : einf) s += col[size_t(t)];
    return s;
}

ResolvedWindow resolve_window(const E1Window& window, const std::vector<DifferentialRule>& rules) {
    const int d = window.d;
    const int T = window.max_total_degree;
    const int ncols = d - 1;  // p = 0..d-2
    ResolvedWindow res;
    res.d = d;
    res.max_total_degree = T;
    res.e1.assign(size_t(ncols), std::vector<Int>(size_t(T) + 1, Int(0)));
    for (const auto& col : window.columns)
        for (int t = 0; t <= T; ++t) res.e1[size_t(col.p)][size_t(t)] = window.entry_dim(col.p, t);
    res.einf = res.e1;

    auto find_rule = [&](int page, int p, int t) -> const DifferentialRule* {
        for (const DifferentialRule& r : rules)
            if (r.covers(page, p, t)) return &r;
        return nullptr;
    };

    // convergence at page d-1: process differentials on pages 1..d-2
    for (int page = 1; page <= d - 2; ++page) {
        auto snapshot = res.einf;
        struct Pending {
            int p, t;
            Int rank;
        };
        std::vector<Pending> pending;
        for (int p = 0; p + page <= ncols - 1; ++p) {
            // sources above T-1 only influence degrees outside the window
            for (int t = 0; t <= T - 1; ++t) {
                const Int& src = snapshot[size_t(p)][size_t(t)];
                const Int& tgt = snapshot[size_t(p + page)][size_t(t + 1)];
                if (src == 0) continue;
                const DifferentialRule* rule = find_rule(page, p, t);
                if (tgt < src && rule && rule->kind == DifferentialRule::Kind::known_injective)
                    throw std::runtime_error(
                        "resolve_window: injectivity rule forces negative dimension at page " +
                        std::to_string(page) + ", column " + std::to_string(p + page) +
                        ", total degree " + std::to_string(t + 1));
                if (tgt == 0) continue;  // the differential vanishes with its target
                if (!rule) {
                    res.uncovered.push_back({page, p, t, std::min(src, tgt)});
                    continue;
                }
                if (rule->kind == DifferentialRule::Kind::known_zero) continue;
                pending.push_back({p, t, src});
            }
        }
        for (const Pending& pd : pending) {
            res.einf[size_t(pd.p)][size_t(pd.t)] -= pd.rank;
            res.einf[size_t(pd.p + page)][size_t(pd.t + 1)] -= pd.rank;
            if (res.einf[size_t(pd.p)][size_t(pd.t)] < 0 ||
                res.einf[size_t(pd.p + page)][size_t(pd.t + 1)] < 0)
                throw std::runtime_error(
                    "resolve_window: rule set forces negative dimension at total degree " +
                    std::to_string(pd.t + 1));
            res.ranks.push_back({page, pd.p, pd.t, pd.rank});
        }
    }
    return res;
}

std::vector<std::pair<int, Int>> reference_betti(int d, int max_degree) {
    std::vector<std::pair<int, Int>> ref;
    if (d == 2 || d == 3) {
        Series s = reference_closed_form(d).expand(max_degree);
        for (int i = 0; i <= max_degree; ++i) ref.emplace_back(i, s.at(i));
    } else if (d == 4) {
        for (int i = 0; i <= std::min(max_degree, 11); ++i) ref.emplace_back(i, i == 11 ? 1 : 0);
    } else {
        throw std::invalid_argument("reference_betti: tabulated only for 2 <= d <= 4");
    }
    return ref;
}

BettiWindow stable_betti_window(int d, int max_degree, SymConvention conv,
                                const std::vector<DifferentialRule>& rules) {
    if (d < 2 || d > 4)
        throw std::invalid_argument("stable_betti_window: supported for d in {2, 3, 4}");
    if (max_degree < 0) throw std::invalid_argument("stable_betti_window: max_degree must be >= 0");

    // b_i is read off the reducible locus at degree i-1 (connecting shift)
    E1Window window = e1_window(d, std::max(0, max_degree), conv);
    ResolvedWindow res = resolve_window(window, rules);

    BettiWindow out;
    out.d = d;
    out.max_degree = max_degree;
    out.conv = conv;
    out.b.assign(size_t(max_degree) + 1, BettiValue{});

    std::vector<Int> kill(size_t(max_degree) + 1, Int(0));  // per-degree uncovered capacity
    for (const auto& u : res.uncovered) {
        if (u.t <= max_degree) kill[size_t(u.t)] += u.capacity;
        if (u.t + 1 <= max_degree) kill[size_t(u.t + 1)] += u.capacity;
        out.uncovered_notes.push_back("no rule for page-" + std::to_string(u.page) +
                                      " differential from column " + std::to_string(u.p) +
                                      " at total degree " + std::to_string(u.t) +
                                      " (capacity " + u.capacity.get_str() + ")");
    }

    for (int i = 0; i <= max_degree; ++i) {
        if (i == 0) continue;  // nothing in negative reducible degrees
        int t = i - 1;
        Int upper = res.einf_total(t);
        Int lower = upper - kill[size_t(t)];
        if (lower < 0) lower = 0;
        out.b[size_t(i)] = {lower, upper};
        if (lower != upper) out.all_exact = false;
    }

    for (const auto& [i, ref] : reference_betti(d, max_degree)) {
        if (i > max_degree) continue;
        const BettiValue& v = out.b[size_t(i)];
        if (v.exact() && v.upper != ref) {
            out.divergent_degrees.push_back(i);
            std::string note = "degree " + std::to_string(i) + ": computed " + v.upper.get_str() +
                               ", reference " + ref.get_str() + "; contributions at reducible degree " +
                               std::to_string(i - 1) + ":";
            for (const auto& col : window.columns)
                for (const auto& [lambda, dim] : window.entry_breakdown(col.p, i - 1))
                    note += " " + lambda.to_string() + "->" + dim.get_str();
            out.divergence_notes.push_back(note);
        }
    }
    return out;
}

BoundsReport bounds_report(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("bounds_report: need d >= 1, n >= 1");
    BoundsReport r;
    r.d = d;
    r.n = n;

    r.low_stability_applicable = n > 1;
    r.low_stability_limit = 2 * (binomial(long(d) + n - 1, (unsigned long)(n - 1)) - n - 1);

    r.high_stability_applicable = d > 1 && n > 1;
    if (d > 1)
        r.high_stability_threshold =
            make_rat(2 * long(n), long(d) - 1) - make_rat(long(d - 2) * long(d - 3), 2) - 1;

    r.red_vanishing_applicable = n > 1;
    r.red_vanishing_threshold = 2 * (degree_space_size(d - 1, n) + n) - 1;
    r.max_nonsingleton_stratum_dim = degree_space_size(d - 1, n) + n - 1;

    r.irr_vanishing_applicable = d > 1 && n > 1;
    r.irr_vanishing_through = 2 * d;
    return r;
}

Int stratum_dimension(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("stratum_dimension: n must be >= 1");
    Int dim = 0;
    for (const auto& [j, m] : lambda.multiplicities())
        dim += Int(m) * (binomial(long(j) + n, (unsigned long)(n)) - 1);
    return dim;
}

DimBoundReport dim_bound_check(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("dim_bound_check: need d >= 1, n >= 1");
    DimBoundReport rep;
    rep.d = d;
    rep.n = n;
    rep.bound = degree_space_size(d - 1, n) + n - 1;
    for (const Partition& lambda : enumerate_partitions(d, 2)) {
        Int dim = stratum_dimension(lambda, n);
        bool at_bound = dim == rep.bound;
        if (dim > rep.bound) rep.all_within = false;
        rep.rows.push_back({lambda, dim, at_bound});
    }
    return rep;
}

namespace {

// Lowest stable degree per part size: expanded series for parts <= 3,
// recursively implied bound above that.
std::vector<int> lowest_degree_table(int d_max, SymConvention conv) {
    std::vector<int> low(size_t(d_max) + 1, 0);
    for (int j = 1; j <= std::min(3, d_max); ++j) {
        auto l = stable_irr_series(j, 3 * j + 6, conv).lowest_degree();
        if (!l) throw std::logic_error("lowest_degree_table: stable series vanished");
        low[size_t(j)] = *l;
    }
    for (int j = 4; j <= d_max; ++j) {
        int best = -1;
        for_each_partition(j, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            int v = 0;
            for (int part : parts) v += low[size_t(part)];
            if (best < 0 || v < best) best = v;
        });
        low[size_t(j)] = best + 1;
    }
    return low;
}

} // namespace

VanishingAuditReport vanishing_audit(int d_max, SymConvention conv) {
    if (d_max < 2 || d_max > 6)
        throw std::invalid_argument("vanishing_audit: supported for 2 <= d_max <= 6");
    VanishingAuditReport rep;
    rep.d_max = d_max;
    rep.conv = conv;
    std::vector<int> low = lowest_degree_table(d_max, conv);

    for (int d = 2; d <= d_max; ++d) {
        int red_lowest = -1;
        for (const Partition& lambda : enumerate_partitions(d, 2)) {
            int r_lambda = r_of_partition(lambda);
            bool from_series = lambda.parts().front() <= 3;
            int lowest = 0;
            if (from_series) {
                auto l = stable_stratum_series(lambda, 3 * d + 8, conv).lowest_degree();
                if (!l)
                    throw std::logic_error("vanishing_audit: stratum series vanished in window");
                lowest = *l;
            } else {
                for (int part : lambda.parts()) lowest += low[size_t(part)];
            }
            bool ok = lowest >= r_lambda;
            if (!ok) rep.all_ok = false;
            if (red_lowest < 0 || lowest < red_lowest) red_lowest = lowest;
            rep.rows.push_back({d, lambda, r_lambda, lowest, from_series, ok});
        }
        VanishingAuditReport::Summary s;
        s.d = d;
        s.red_lowest = red_lowest;
        s.irr_lowest = red_lowest + 1;
        s.vanish_through = s.irr_lowest - 1;
        s.covers_2d = s.vanish_through >= 2 * d;
        s.known_first_nonzero = -1;
        if (d <= 3) {
            auto first = stable_irr_series(d, 3 * d + 8, conv).lowest_degree();
            if (first) s.known_first_nonzero = *first;
        }
        if (!s.covers_2d) rep.all_ok = false;
        rep.summaries.push_back(s);
    }
    return rep;
}

} // namespace irrpoly
