#pragma once

#include <map>
#include <vector>

#include "treegen/bigint.hpp"
#include "treegen/tree.hpp"

namespace treegen {

// Brute-force ground truth, built by a construction deliberately
// different from the generator: grow every tree of order n-1 by one leaf
// at every vertex and deduplicate by canonical form.

// Canonical codes of all unlabeled trees of order n, sorted.
std::vector<CanonicalForm> oracle_free_trees(int n);

// One labeled representative per isomorphism class, sorted by code.
std::vector<Tree> oracle_free_tree_reps(int n);

// Canonical codes of all rooted trees of order n, sorted.
std::vector<CanonicalForm> oracle_rooted_trees(int n);

// Free trees of order n counted per edge-diameter.
std::map<int, long long> oracle_by_diameter(int n);

// Secondary check: decode every length-(n-2) sequence over n labels into
// a labeled tree and deduplicate; exponential, capped at n <= 8.
std::vector<CanonicalForm> prufer_free_trees(int n);

// Secondary check for rooted counts via the divisor-sum convolution.
std::vector<BigInt> rooted_counts(int n_max);  // index i -> count of order i

// Aggregated ground truth per order.
struct CountTableEntry {
    BigInt free_trees = 0;
    BigInt rooted_trees = 0;
    std::map<int, long long> per_diameter;  // edge-diameter -> count
};

// Entries for every order 1..n_max; per-diameter counts sum to free_trees.
std::map<int, CountTableEntry> count_table(int n_max);

}  // namespace treegen
