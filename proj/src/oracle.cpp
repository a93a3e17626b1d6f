#include "treegen/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace treegen {

namespace {

std::vector<Tree> grow_free(const std::vector<Tree>& smaller) {
    std::map<std::string, Tree> dedup;
    for (const Tree& t : smaller) {
        for (int v = 0; v < t.order(); ++v) {
            auto edges = t.edges();
            edges.emplace_back(v, t.order());
            Tree grown(t.order() + 1, std::move(edges));
            dedup.emplace(canonical_free(grown).code, grown);
        }
    }
    std::vector<Tree> out;
    out.reserve(dedup.size());
    for (auto& [code, t] : dedup) out.push_back(std::move(t));
    return out;
}

std::vector<Tree> free_reps(int n) {
    if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
    std::vector<Tree> level{Tree(1, {})};
    for (int m = 2; m <= n; ++m) level = grow_free(level);
    return level;
}

}  // namespace

std::vector<Tree> oracle_free_tree_reps(int n) { return free_reps(n); }

std::vector<CanonicalForm> oracle_free_trees(int n) {
    std::vector<CanonicalForm> out;
    for (const Tree& t : free_reps(n)) out.push_back(canonical_free(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalForm> oracle_rooted_trees(int n) {
    if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
    // rooted variant: root fixed at vertex 0 throughout the growth
    std::map<std::string, Tree> level;
    level.emplace(canonical_rooted(rooted_at(Tree(1, {}), 0)).code, Tree(1, {}));
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Tree> next;
        for (const auto& [code, t] : level) {
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.order());
                Tree grown(t.order() + 1, std::move(edges));
                next.emplace(canonical_rooted(rooted_at(grown, 0)).code, grown);
            }
        }
        level = std::move(next);
    }
    std::vector<CanonicalForm> out;
    out.reserve(level.size());
    for (const auto& [code, t] : level) out.push_back({code});
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, long long> oracle_by_diameter(int n) {
    if (n < 1) throw std::invalid_argument("oracle_by_diameter: n must be >= 1");
    std::map<int, long long> out;
    for (const Tree& t : free_reps(n)) ++out[diameter(t)];
    return out;
}

std::vector<CanonicalForm> prufer_free_trees(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("prufer_free_trees: n must be in 1..8");
    std::set<std::string> codes;
    if (n == 1) {
        codes.insert(canonical_free(Tree(1, {})).code);
    } else if (n == 2) {
        codes.insert(canonical_free(linear_tree(2)).code);
    } else {
        std::vector<int> seq(n - 2, 0);
        while (true) {
            // decode seq into a labeled tree
            std::vector<int> degree(n, 1);
            for (int a : seq) ++degree[a];
            std::vector<std::pair<int, int>> edges;
            std::set<int> leaves;
            for (int v = 0; v < n; ++v)
                if (degree[v] == 1) leaves.insert(v);
            for (int a : seq) {
                int leaf = *leaves.begin();
                leaves.erase(leaves.begin());
                edges.emplace_back(leaf, a);
                if (--degree[a] == 1) leaves.insert(a);
            }
            int u = *leaves.begin();
            int v = *std::next(leaves.begin());
            edges.emplace_back(u, v);
            codes.insert(canonical_free(Tree(n, std::move(edges))).code);

            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
            if (i < 0) break;
            ++seq[i];
        }
    }
    std::vector<CanonicalForm> out;
    for (const auto& c : codes) out.push_back({c});
    return out;
}

std::map<int, CountTableEntry> count_table(int n_max) {
    if (n_max < 1) throw std::invalid_argument("count_table: n_max must be >= 1");
    std::map<int, CountTableEntry> out;
    std::vector<Tree> level{Tree(1, {})};
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) level = grow_free(level);
        CountTableEntry& e = out[n];
        e.free_trees = static_cast<long long>(level.size());
        e.rooted_trees = static_cast<long long>(oracle_rooted_trees(n).size());
        for (const Tree& t : level) ++e.per_diameter[diameter(t)];
    }
    return out;
}

std::vector<BigInt> rooted_counts(int n_max) {
    if (n_max < 1) throw std::invalid_argument("rooted_counts: n_max must be >= 1");
    std::vector<BigInt> r(n_max + 1, 0);
    r[1] = 1;
    for (int n = 1; n < n_max; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) {
            BigInt dsum = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) dsum += d * r[d];
            acc += dsum * r[n + 1 - k];
        }
        r[n + 1] = acc / n;
    }
    return r;
}

}  // namespace treegen
