#ifndef IRRPOLY_BRUTE_HPP
#define IRRPOLY_BRUTE_HPP

#include "irrpoly/numbers.hpp"
#include "irrpoly/partition.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrpoly {

struct BruteBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Signals a unique-factorization bookkeeping failure in the census
/// (duplicate product, or totals that do not add up).
struct CensusConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monomials x^e with |e| <= d in n variables, ascending graded-lex order
/// (total degree first, then lexicographic on the exponent vector).
class MonomialBasis {
  public:
    MonomialBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int count() const { return int(exps_.size()); }  // B(d, n)
    int degree_of(int idx) const { return deg_[size_t(idx)]; }
    /// First index of the given degree block; degree_start(d+1) == count().
    int degree_start(int deg) const { return start_[size_t(deg)]; }
    int product_index(int a, int b) const;
    const std::vector<std::vector<int>>& exponents() const { return exps_; }

  private:
    int n_, d_;
    std::vector<std::vector<int>> exps_;
    std::vector<int> deg_;
    std::vector<int> start_;
    std::vector<int> code_to_index_;
    long radix_code(const std::vector<int>& e) const;
};

/// Dense coefficient table over F_p, indexed by the monomial basis.
using Coeffs = std::vector<std::uint8_t>;

/// Ground-truth enumeration for one (d, n, p). Prime fields only (2, 3, 5).
/// Memoizes the normalized lists and per-degree sieves; one context per
/// thread of use (the marking kernel itself is parallel internally).
class BruteContext {
  public:
    static constexpr std::uint64_t kDefaultStateCap = 1ull << 24;

    BruteContext(int d, int n, int p, std::uint64_t state_cap = kDefaultStateCap);

    int d() const { return d_; }
    int n() const { return n_; }
    int p() const { return p_; }
    const MonomialBasis& basis() const { return basis_; }

    int degree(const Coeffs& f) const;  // -1 for the zero polynomial
    bool is_canonical(const Coeffs& f) const;
    void normalize(Coeffs& f) const;  // scale so the graded-lex-largest term is monic
    Coeffs multiply(const Coeffs& f, const Coeffs& g) const;
    std::uint64_t encode(const Coeffs& f) const;

    /// Exact count the enumerator must produce: (p^B(deg) - p^B(deg-1))/(p-1).
    Int expected_normalized_count(int deg) const;
    /// All canonical representatives of exact degree deg, deterministic order.
    const std::vector<Coeffs>& normalized(int deg);

    /// Bitset over the degree-deg state space marking every normalized
    /// product f*g with deg f + deg g = deg, f, g nonconstant. The parallel
    /// variant uses idempotent atomic marking; results are identical to the
    /// serial reference for every schedule.
    std::vector<std::uint64_t> reducible_marks(int deg, bool parallel);

    struct SieveResult {
        Int total = 0;
        Int reducible = 0;
        Int irreducible = 0;
    };
    const SieveResult& sieve(int deg, bool parallel = true);
    /// Irreducible polynomials of degree deg (materialized; deg < d use only).
    const std::vector<Coeffs>& irreducible(int deg, bool parallel = true);

    struct Census {
        Int total = 0;
        Int irreducible = 0;
        std::vector<std::pair<Partition, Int>> rows;  // canonical order, singleton included
    };
    /// Factorization-type census of degree d; verifies that the multiset
    /// products are pairwise distinct and exhaust the sieve-marked reducibles.
    Census census(bool parallel = true);

  private:
    int d_, n_, p_;
    std::uint64_t state_cap_;
    MonomialBasis basis_;
    std::array<std::uint8_t, 8> inverse_{};
    std::map<int, std::vector<Coeffs>> normalized_;
    std::map<int, SieveResult> sieve_;
    std::map<int, std::vector<Coeffs>> irreducible_;
    std::map<int, std::vector<std::uint64_t>> marks_;

    std::uint64_t state_count(int deg) const;  // p^B(deg,n), cap-checked
};

struct CrossValidationRow {
    int d = 0, n = 0, p = 0;
    Int sieve_count, symbolic_count;
    bool count_match = false;
    struct PartRow {
        Partition lambda;
        Int census_count, symbolic_count;
        bool match;
    };
    std::vector<PartRow> parts;
    bool pass = false;
};

struct CrossValidationReport {
    std::vector<CrossValidationRow> rows;
    bool all_pass = true;
    double seconds = 0.0;
};

/// For each (d, n, p): sieve count vs irr_count(d,n)(p), census rows vs
/// stratum counts. Any mismatch flips pass/all_pass (CLI exits nonzero).
CrossValidationReport cross_validate(const std::vector<std::array<int, 3>>& dnp,
                                     bool parallel = true,
                                     std::uint64_t state_cap = BruteContext::kDefaultStateCap);

/// The default verification tuples: (2,2,2), (3,2,2), (2,2,3), (2,3,2).
std::vector<std::array<int, 3>> default_validation_tuples();

} // namespace irrpoly

#endif
