#include "treegen/counting.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "treegen/partitions.hpp"

namespace treegen {

namespace {

std::mutex g_memo_mutex;
std::vector<std::vector<BigInt>> g_ways;  // g_ways[k][n]

void grow_ways(int k, int n) {
    if (static_cast<int>(g_ways.size()) <= k) g_ways.resize(k + 1);
    for (int i = 0; i <= k; ++i) {
        auto& row = g_ways[i];
        int have = static_cast<int>(row.size());
        if (have > n) continue;
        row.resize(n + 1);
        for (int j = have; j <= n; ++j) {
            if (i == 0)
                row[j] = j == 0 ? 0 : 1;
            else
                row[j] = (j == 0 ? BigInt(0) : row[j - 1]) + g_ways[i - 1][j];
        }
    }
}

// Like glue_ways but with one way to place nothing even on zero
// positions, so middle-only decorations of fully occupied backbones
// count as the single bare-sides arrangement.
BigInt pair_ways(int x, int y, int z) {
    if (x != y) return multichoose(z, x) * multichoose(z, y);
    BigInt g = multichoose(z, x);
    return g * (g - 1) / 2 + g;
}

}  // namespace

BigInt placement_ways(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("placement_ways: negative argument");
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    grow_ways(k, n);
    return g_ways[k][n];
}

BigInt glue_ways(int x, int y, int z) {
    if (x != y) return placement_ways(x, z) * placement_ways(y, z);
    BigInt g = placement_ways(x, z);
    return g * (g - 1) / 2 + g;
}

int side_slots(int backbone, int radius) {
    int raw = backbone - 2 * radius;
    return raw > 0 ? raw / 2 : 0;
}

BigInt count_equal_radius(int k, int r, int backbone) {
    if (k < 1 || r < 1) throw std::invalid_argument("count_equal_radius: k, r must be >= 1");
    if (backbone < 3) throw std::invalid_argument("count_equal_radius: backbone must be >= 3");
    const int z = side_slots(backbone, r);
    const bool middle = backbone % 2 == 1 && r <= backbone / 2;
    BigInt total = 0;
    for (int j = 0; j <= (middle ? k : 0); ++j)
        for (int i = 0; i <= (k - j) / 2; ++i) total += pair_ways(k - j - i, i, z);
    return total;
}

BigInt count_direct(int k, int backbone) { return count_equal_radius(k, 1, backbone); }

BigInt combine_cardinality(const SymCount& s, const SymCount& t) {
    return 2 * s.alpha * t.alpha + s.sigma * t.alpha + s.alpha * t.sigma + s.sigma * t.sigma;
}

SymCount combine_sigma(const SymCount& s, const SymCount& t) {
    SymCount r;
    r.sigma = s.sigma * t.sigma;
    r.alpha = combine_cardinality(s, t) - r.sigma;
    return r;
}

BigInt sigma_equal_radius(int k, int r, int backbone) {
    if (k < 1 || r < 1) throw std::invalid_argument("sigma_equal_radius: k, r must be >= 1");
    if (k % 2 == 1) return 0;
    return placement_ways(k / 2, side_slots(backbone, r));
}

SymCount side_layer_sym(int count, int radius, int backbone) {
    const int z = side_slots(backbone, radius);
    BigInt total = 0;
    for (int i = 0; i <= count / 2; ++i) total += pair_ways(count - i, i, z);
    SymCount out;
    out.sigma = count % 2 == 0 ? multichoose(z, count / 2) : 0;
    out.alpha = total - out.sigma;
    return out;
}

bool middle_filter(const std::vector<int>& radii, int backbone) {
    for (int r : radii)
        if (r > backbone / 2) return false;
    return true;
}

BigInt count_linear_total(int k, int backbone) {
    if (k < 0) throw std::invalid_argument("count_linear_total: k must be >= 0");
    if (backbone < 3) throw std::invalid_argument("count_linear_total: backbone must be >= 3");
    const int jmax = backbone % 2 == 1 ? k : 0;
    BigInt total = 0;
    for (int j = 0; j <= jmax; ++j) {
        BigInt valid_middles = 0;
        for (const Partition& mid : partitions(j))
            if (middle_filter(mid.distinct_parts(), backbone)) valid_middles += 1;
        if (valid_middles == 0) continue;
        BigInt side_sum = 0;
        for (const Partition& sides : partitions(k - j)) {
            SymCount acc{1, 0};
            for (auto it = sides.parts().rbegin(); it != sides.parts().rend(); ++it)
                acc = combine_sigma(acc, side_layer_sym(it->second, it->first, backbone));
            side_sum += acc.total();
        }
        total += valid_middles * side_sum;
    }
    return total;
}

}  // namespace treegen
