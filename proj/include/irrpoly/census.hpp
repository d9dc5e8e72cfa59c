#ifndef IRRPOLY_CENSUS_HPP
#define IRRPOLY_CENSUS_HPP

#include "irrpoly/partition.hpp"
#include "irrpoly/qpoly.hpp"

#include <map>
#include <vector>

namespace irrpoly {

/// B(d, n) = C(d+n, n); B(0, n) = 1.
Int degree_space_size(int d, int n);

/// Point count of the space of normalized degree-d polynomials in n variables:
/// (q^{B(d,n)} - q^{B(d-1,n)}) / (q-1) = q^{B(d-1,n)} (1 + q + ... + q^{C(d+n-1,n-1)-1}).
QPoly poly_exact_count(int d, int n);

/// Counting recursion for one fixed n; memoizes irr counts per degree.
/// Single-writer cache: one context per thread of use.
class CountContext {
  public:
    explicit CountContext(int n);

    int n() const { return n_; }
    const QPoly& irr_count(int d);
    QPoly stratum_count(const Partition& lambda);
    QPoly poly_exact_count(int d) const;

  private:
    int n_;
    std::map<int, QPoly> memo_;
};

QPoly irr_count(int d, int n);
QPoly stratum_count(const Partition& lambda, int n);

/// One-variable count by Moebius inversion: (1/d) sum_{e|d} mu(e) q^{d/e}.
/// Independent oracle for irr_count(d, 1).
QPoly necklace_count(int d);

/// Same stratification recursion over integers (compactly supported Euler
/// characteristics): chi of the normalized degree-d space is C(d+n-1, n-1),
/// symmetric powers contribute multiset coefficients.
class EulerContext {
  public:
    explicit EulerContext(int n);
    Int irr_euler(int d);

  private:
    int n_;
    std::map<int, Int> memo_;
};

Int euler_char(int d, int n);

struct EulerRow {
    int d, n;
    Int chi;
};
/// Full (d, n) grid, 1 <= d <= d_max, 1 <= n <= n_max; rows ordered by (d, n).
/// Columns of the grid are computed in parallel with independent contexts.
std::vector<EulerRow> euler_table(int d_max, int n_max);

struct CarlitzRow {
    int d;
    Rat ratio;  // irr_count(d,n)(q) / q^{B(d,n)-1}
};
/// Requires q prime and n >= 2 (the ratio limit needs more than one variable).
std::vector<CarlitzRow> carlitz_table(int q, int n, int d_max);

struct HydeResult {
    int d = 0;
    int window = 0;  // coefficients of q^0..q^window are tracked
    int n_max = 0;
    bool found = false;
    int n0 = -1;                 // least n with three consecutive agreements
    std::vector<Rat> coefficients;  // q^0..q^window at stabilization (empty if !found)
};
/// Scans n = max(1, d)..n_max for the least n0 such that the coefficients of
/// q^0..q^K of irr_count(d, n) agree for n0, n0+1, n0+2. Never silent: the
/// result says explicitly when no stabilization was found within n_max.
HydeResult hyde_stabilization(int d, int K, int n_max);

} // namespace irrpoly

#endif
