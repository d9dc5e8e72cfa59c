#include "irrpoly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace irrpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Partition: needs at least one part");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

int Partition::multiplicity(int j) const {
    return int(std::count(parts_.begin(), parts_.end(), j));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("Partition::parse: no parts in '" + text + "'");
    return Partition(parts);
}

bool Partition::canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // parts are stored descending; ascending order is the reverse
    return std::lexicographical_compare(a.parts_.rbegin(), a.parts_.rend(),
                                        b.parts_.rbegin(), b.parts_.rend());
}

void for_each_partition(int d, const std::function<void(const std::vector<int>&)>& fn) {
    if (d < 1) throw std::invalid_argument("for_each_partition: d must be >= 1");
    std::vector<int> cur;
    // descending-part DFS
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            fn(cur);
            return;
        }
        for (int first = std::min(rem, max_part); first >= 1; --first) {
            cur.push_back(first);
            rec(rem - first, first);
            cur.pop_back();
        }
    };
    rec(d, d);
}

std::vector<Partition> enumerate_partitions(int d, int min_parts) {
    if (d < 1) throw std::invalid_argument("enumerate_partitions: d must be >= 1");
    if (min_parts < 0) throw std::invalid_argument("enumerate_partitions: min_parts must be >= 0");
    std::vector<Partition> out;
    for_each_partition(d, [&](const std::vector<int>& parts) {
        if (int(parts.size()) >= min_parts) out.push_back(Partition(parts));
    });
    std::sort(out.begin(), out.end(), Partition::canonical_less);
    return out;
}

unsigned long partition_count(int d) {
    if (d < 0) throw std::invalid_argument("partition_count: d must be >= 0");
    std::vector<unsigned long> p(size_t(d) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= d; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            long g1 = long(k) * (3 * k - 1) / 2;
            long g2 = long(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) s += sign * long(p[size_t(m - g1)]);
            if (g2 <= m) s += sign * long(p[size_t(m - g2)]);
        }
        p[size_t(m)] = (unsigned long)(s);
    }
    return p[size_t(d)];
}

namespace {

// Multiset of remaining lambda-parts as (value, count), descending by value.
using PartBag = std::vector<std::pair<int, int>>;

PartBag to_bag(const std::vector<int>& parts) {
    PartBag bag;
    for (int p : parts) {
        if (!bag.empty() && bag.back().first == p)
            ++bag.back().second;
        else
            bag.emplace_back(p, 1);
    }
    return bag;
}

struct RefineSearch {
    const std::vector<int>& mu_parts;
    std::map<std::pair<size_t, PartBag>, bool> memo;  // per-call, single-threaded

    bool match(size_t mu_idx, PartBag& bag) {
        if (mu_idx == mu_parts.size()) return true;  // bag is empty iff totals matched
        auto key = std::make_pair(mu_idx, bag);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = pick(mu_idx, bag, 0, mu_parts[mu_idx]);
        memo.emplace(std::move(key), ok);
        return ok;
    }

    // Choose a sub-multiset of bag summing to `remaining`, starting at slot `slot`.
    bool pick(size_t mu_idx, PartBag& bag, size_t slot, int remaining) {
        if (remaining == 0) return match(mu_idx + 1, bag);
        if (slot == bag.size()) return false;
        auto [value, count] = bag[slot];
        int take_max = std::min(count, remaining / value);
        for (int take = take_max; take >= 0; --take) {
            bag[slot].second = count - take;
            if (pick(mu_idx, bag, slot + 1, remaining - take * value)) {
                bag[slot].second = count;
                return true;
            }
        }
        bag[slot].second = count;
        return false;
    }
};

} // namespace

bool refines(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw std::invalid_argument("refines: partitions must have equal totals");
    if (lambda.size() < mu.size()) return false;
    PartBag bag = to_bag(lambda.parts());
    RefineSearch search{mu.parts(), {}};
    return search.match(0, bag);
}

namespace {

// r(1..d_max) computed bottom-up; local to each call, safe for concurrent use.
std::vector<int> r_table(int d_max) {
    std::vector<int> r(size_t(d_max) + 1, 0);
    r[1] = 2;
    for (int d = 2; d <= d_max; ++d) {
        int best = -1;
        for_each_partition(d, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            int v = 0;
            for (int j : parts) v += r[size_t(j)];
            if (best < 0 || v < best) best = v;
        });
        r[size_t(d)] = 1 + best;
    }
    return r;
}

} // namespace

int r_of_degree(int d) {
    if (d < 1) throw std::invalid_argument("r_of_degree: d must be >= 1");
    return r_table(d)[size_t(d)];
}

int r_of_partition(const Partition& lambda) {
    if (lambda.size() < 2)
        throw std::invalid_argument("r_of_partition: partition must have at least 2 parts");
    auto r = r_table(lambda.parts().front());
    int v = 0;
    for (int j : lambda.parts()) v += r[size_t(j)];
    return v;
}

} // namespace irrpoly
