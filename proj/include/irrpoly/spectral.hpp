#ifndef IRRPOLY_SPECTRAL_HPP
#define IRRPOLY_SPECTRAL_HPP

#include "irrpoly/graded.hpp"
#include "irrpoly/partition.hpp"
#include "irrpoly/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace irrpoly {

/// Declared knowledge about a differential. Rules are inputs, never inferred:
/// the resolver applies exactly what it is told and otherwise degrades to
/// intervals.
struct DifferentialRule {
    enum class Kind { known_injective, known_zero };

    int page = 1;
    int source_column = 0;
    /// Inclusive source total-degree range; empty = all degrees.
    std::optional<std::pair<int, int>> degree_range;
    Kind kind = Kind::known_zero;
    std::string justification;

    bool covers(int pg, int p, int t) const {
        if (pg != page || p != source_column) return false;
        if (!degree_range) return true;
        return degree_range->first <= t && t <= degree_range->second;
    }
};

/// The rule set shipped with the tool for d <= 4 (empty for d = 2).
std::vector<DifferentialRule> known_differential_rules(int d);

/// First-page window of the stratification spectral sequence in the stable
/// range: column p holds the strata with |lambda| = d - p, 0 <= p <= d-2.
struct E1Window {
    struct Stratum {
        Partition lambda;
        Series dims;
    };
    struct Column {
        int p;
        std::vector<Stratum> strata;  // canonical partition order
    };

    int d = 0;
    int max_total_degree = 0;
    SymConvention conv = SymConvention::koszul;
    std::vector<Column> columns;

    Int entry_dim(int p, int total_degree) const;
    std::vector<std::pair<Partition, Int>> entry_breakdown(int p, int total_degree) const;
};

/// Requires 2 <= d <= 4 (stable input series are known only for parts <= 3).
E1Window e1_window(int d, int max_total_degree, SymConvention conv);

/// Page-by-page rank bookkeeping over a window, driven entirely by rules.
struct ResolvedWindow {
    struct AppliedRank {
        int page, p, t;
        Int rank;
    };
    struct Uncovered {
        int page, p, t;
        Int capacity;  // min(source dim, target dim) when encountered
    };

    int d = 0;
    int max_total_degree = 0;
    std::vector<std::vector<Int>> e1;    // [p][t]
    std::vector<std::vector<Int>> einf;  // [p][t] after applying declared rules
    std::vector<AppliedRank> ranks;
    std::vector<Uncovered> uncovered;

    Int e1_total(int t) const;
    Int einf_total(int t) const;
};

ResolvedWindow resolve_window(const E1Window& window, const std::vector<DifferentialRule>& rules);

struct BettiValue {
    Int lower = 0, upper = 0;
    bool exact() const { return lower == upper; }
};

/// Stable Betti window with reference comparison. When every differential in
/// range is covered by a rule the values are points; otherwise intervals.
struct BettiWindow {
    int d = 0;
    int max_degree = 0;
    SymConvention conv = SymConvention::koszul;
    std::vector<BettiValue> b;  // degrees 0..max_degree
    bool all_exact = true;
    std::vector<std::string> uncovered_notes;
    std::vector<int> divergent_degrees;  // computed (exact) differs from reference data
    std::vector<std::string> divergence_notes;
};

/// Requires d in {2, 3, 4}.
BettiWindow stable_betti_window(int d, int max_degree, SymConvention conv,
                                const std::vector<DifferentialRule>& rules);

/// Reference stable Betti numbers kept for comparison reports; for d = 4 only
/// degrees <= 11 are tabulated.  Returns degree -> value.
std::vector<std::pair<int, Int>> reference_betti(int d, int max_degree);

/// Every explicit threshold formula, exact.
struct BoundsReport {
    int d = 0, n = 0;

    bool low_stability_applicable = false;  // needs n > 1
    Int low_stability_limit;                // H_i has rank (i even ? 1 : 0) for i <= limit

    bool high_stability_applicable = false;  // needs d, n > 1
    Rat high_stability_threshold;            // compact-support iso under n -> n+1 for i < threshold

    bool red_vanishing_applicable = false;  // needs n > 1
    Int red_vanishing_threshold;            // H^i_c of the reducible locus = 0 for i >= threshold
    Int max_nonsingleton_stratum_dim;       // C(d+n-1,n)+n-1, attained at 1+(d-1)

    bool irr_vanishing_applicable = false;  // needs d, n > 1
    int irr_vanishing_through = 0;          // H^k_c = 0 for k <= 2d
};

BoundsReport bounds_report(int d, int n);

/// Rank of the stable H_i within the low-stability range.
inline int stable_homology_rank(int i) { return i % 2 == 0 ? 1 : 0; }

/// Complex dimension of the stratum: sum_j m_j(lambda) [C(j+n,n) - 1].
Int stratum_dimension(const Partition& lambda, int n);

struct DimBoundReport {
    int d = 0, n = 0;
    Int bound;  // C(d+n-1,n)+n-1
    struct Row {
        Partition lambda;
        Int dim;
        bool at_bound;
    };
    std::vector<Row> rows;  // non-singleton partitions, canonical order
    bool all_within = true;
};

DimBoundReport dim_bound_check(int d, int n);

/// Confirms, for 2 <= d <= d_max, that every stable stratum series vanishes
/// below r(lambda), and derives the implied vanishing range of the stable
/// irreducible cohomology. Strata with a part > 3 use the recursively implied
/// lower bound instead of an expanded series (marked from_series = false).
struct VanishingAuditReport {
    int d_max = 0;
    SymConvention conv = SymConvention::koszul;
    struct Row {
        int d;
        Partition lambda;
        int r_lambda;
        int lowest;        // exact lowest degree, or a lower bound
        bool from_series;  // true: expanded series; false: recursive bound
        bool ok;           // lowest >= r(lambda)
    };
    struct Summary {
        int d;
        int red_lowest;          // lower bound on the lowest reducible-locus degree
        int irr_lowest;          // red_lowest + 1
        int vanish_through;      // stable b_k = 0 for k <= vanish_through
        bool covers_2d;          // vanish_through >= 2d
        int known_first_nonzero; // exact first nonzero stable degree, -1 if unknown
    };
    std::vector<Row> rows;
    std::vector<Summary> summaries;
    bool all_ok = true;
};

VanishingAuditReport vanishing_audit(int d_max, SymConvention conv);

} // namespace irrpoly

#endif
