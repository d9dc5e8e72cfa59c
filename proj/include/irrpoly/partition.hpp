#ifndef IRRPOLY_PARTITION_HPP
#define IRRPOLY_PARTITION_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace irrpoly {

/// An integer partition: non-increasing positive parts with a fixed total.
class Partition {
  public:
    /// Parts may be given in any order; they are sorted non-increasing.
    explicit Partition(std::vector<int> parts);

    static Partition singleton(int d) { return Partition({d}); }

    int total() const { return total_; }                    // d
    int size() const { return int(parts_.size()); }         // |lambda|
    const std::vector<int>& parts() const { return parts_; }

    /// j -> m_j, ascending in j; absent parts omitted.
    std::map<int, int> multiplicities() const;
    int multiplicity(int j) const;

    std::string to_string() const;                          // "2+1+1", parts descending
    static Partition parse(const std::string& text);        // inverse of to_string

    /// Canonical order: graded by |lambda|, then lexicographic on the parts
    /// read in ascending order (so for d=4, 1+3 precedes 2+2).
    static bool canonical_less(const Partition& a, const Partition& b);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  private:
    std::vector<int> parts_;  // non-increasing, each >= 1
    int total_;
};

/// All partitions of d with at least min_parts parts, in canonical order.
std::vector<Partition> enumerate_partitions(int d, int min_parts);

/// Visit every partition of d (parts non-increasing); no ordering guarantee.
void for_each_partition(int d, const std::function<void(const std::vector<int>&)>& fn);

/// Partition count p(d) via the pentagonal-number recurrence (test oracle
/// for the enumerator; kept here so callers can cross-check lengths cheaply).
unsigned long partition_count(int d);

/// True iff lambda refines mu: mu's parts can each be split into pieces whose
/// combined multiset is exactly lambda's parts. Both must partition the same d.
bool refines(const Partition& lambda, const Partition& mu);

/// r(1) = 2; r(d) = 1 + min{ r(lambda) : lambda |- d, |lambda| >= 2 }.
int r_of_degree(int d);

/// r(lambda) = sum_j m_j(lambda) r(j); lambda must have >= 2 parts.
int r_of_partition(const Partition& lambda);

} // namespace irrpoly

#endif
