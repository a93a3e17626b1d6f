#pragma once

#include <compare>
#include <map>
#include <vector>

#include "treegen/bigint.hpp"

namespace treegen {

// value -> multiplicity, multiplicities always >= 1
template <typename T>
using Multiset = std::map<T, int>;

template <typename T>
int multiset_size(const Multiset<T>& m) {
    int n = 0;
    for (const auto& [v, mult] : m) n += mult;
    return n;
}

// Zero outside Pascal's triangle (k < 0, n < 0 or k > n).
BigInt binomial(long long n, long long k);

// Number of k-multisets drawn from n items; multichoose(0,0) == 1.
BigInt multichoose(long long n, long long k);

// A partition of a nonnegative integer, stored as (part, multiplicity)
// pairs with parts strictly decreasing. The empty partition is the
// unique partition of zero.
class Partition {
public:
    Partition() = default;
    static Partition of(std::vector<int> parts);

    int total() const { return total_; }
    bool empty() const { return parts_.empty(); }
    // (part, multiplicity), parts strictly decreasing
    const std::vector<std::pair<int, int>>& parts() const { return parts_; }

    std::vector<int> parts_desc() const;     // e.g. {3,3,1}
    std::vector<int> distinct_parts() const; // descending
    Multiset<int> to_multiset() const;
    int multiplicity(int part) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::pair<int, int>> parts_;
    int total_ = 0;
};

// Compares greatest parts, then their multiplicities, then recurses on
// the remainders; both partitions must partition the same total.
std::strong_ordering cmp_partition(const Partition& p, const Partition& q);

// All partitions of n, ascending by cmp_partition. partitions(0) yields
// exactly the empty partition.
std::vector<Partition> partitions(int n);

}  // namespace treegen
