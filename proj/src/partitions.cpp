#include "treegen/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace treegen {

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multichoose(long long n, long long k) {
    if (n < 0 || k < 0) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    return binomial(n + k - 1, k);
}

Partition Partition::of(std::vector<int> parts) {
    for (int p : parts)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition r;
    for (int p : parts) {
        if (!r.parts_.empty() && r.parts_.back().first == p)
            ++r.parts_.back().second;
        else
            r.parts_.emplace_back(p, 1);
        r.total_ += p;
    }
    return r;
}

std::vector<int> Partition::parts_desc() const {
    std::vector<int> out;
    for (const auto& [p, m] : parts_) out.insert(out.end(), m, p);
    return out;
}

std::vector<int> Partition::distinct_parts() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const auto& [p, m] : parts_) out.push_back(p);
    return out;
}

Multiset<int> Partition::to_multiset() const {
    Multiset<int> out;
    for (const auto& [p, m] : parts_) out[p] = m;
    return out;
}

int Partition::multiplicity(int part) const {
    for (const auto& [p, m] : parts_)
        if (p == part) return m;
    return 0;
}

std::strong_ordering cmp_partition(const Partition& p, const Partition& q) {
    if (p.total() != q.total())
        throw std::invalid_argument("cmp_partition: totals differ");
    const auto& a = p.parts();
    const auto& b = q.parts();
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first)
            return a[i].first <=> b[i].first;
        if (a[i].second != b[i].second)
            return a[i].second <=> b[i].second;
    }
    // Equal totals cannot exhaust one side first: any leftover parts
    // would make the totals differ.
    return a.size() <=> b.size();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::of(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return cmp_partition(a, b) == std::strong_ordering::less;
    });
    return out;
}

}  // namespace treegen
