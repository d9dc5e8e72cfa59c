#ifndef IRRPOLY_GRADED_HPP
#define IRRPOLY_GRADED_HPP

#include "irrpoly/partition.hpp"
#include "irrpoly/series.hpp"

#include <map>
#include <optional>
#include <string>

namespace irrpoly {

/// Sign convention for the symmetric-group action on tensor powers of a
/// graded space: koszul picks up signs for odd-degree classes, naive does not.
/// The two agree on input concentrated in even degrees.
enum class SymConvention { koszul, naive };

std::string to_string(SymConvention conv);
SymConvention parse_convention(const std::string& text);

/// Dimension series of the m-th symmetric power of a graded space with
/// dimension series V: coefficient of z^m in
///   naive:  prod_k (1 - z t^k)^{-a_k}
///   koszul: prod_{k even} (1 - z t^k)^{-a_k} * prod_{k odd} (1 + z t^k)^{a_k}
/// V must have nonnegative coefficients.
Series sym_power(const Series& V, int m, SymConvention conv);

/// Independent check of sym_power: exhaustively counts length-m monomials of
/// the given total degree in the free graded-commutative algebra on a_k
/// generators per degree k (squarefree in odd generators under koszul).
Int invariant_dim_oracle(const Series& V, int m, int degree, SymConvention conv);

/// Pointwise target_k - source_{k-shift}, valid only when the caller asserts
/// the underlying map is injective; any negative coefficient is a hard error
/// naming the first failing degree.
inline Series cokernel_subtract(const Series& target, const Series& source, int shift_of_source) {
    return subtract_dims(target, source, shift_of_source);
}

/// Stable dimension series of the irreducible locus, known in closed/pipeline
/// form for d <= 3:
///   d=1: t^2/(1-t^2)
///   d=2: shift(sym_2(P1), 1)
///   d=3: shift([P2 (x) P1] - shift(sym_3(P1), 1), 1)   (injective-transfer cokernel)
Series stable_irr_series(int d, int T, SymConvention conv);

/// Tabulated closed forms kept as reference data for comparison reports.
/// The d=3 entry is the traditionally printed form; the pipeline above is the
/// computed value and the two disagree from degree 12 on (see compare_series).
RationalForm reference_closed_form(int d);

/// (x)_j sym_{m_j}(stable_irr_series(j)); parts above 3 require caller-supplied
/// series in `extra` (degree -> series), else an unsupported-input error.
Series stable_stratum_series(const Partition& lambda, int T, SymConvention conv,
                             const std::map<int, Series>* extra = nullptr);

struct SeriesComparison {
    std::optional<int> first_divergence;  // least degree where the two differ
    int compared_through = -1;            // degrees 0..compared_through checked
};
SeriesComparison compare_series(const Series& a, const Series& b);

} // namespace irrpoly

#endif
