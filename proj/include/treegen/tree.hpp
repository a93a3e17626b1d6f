#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace treegen {

// Totally ordered code; equal codes iff isomorphic inputs (root-preserving
// isomorphism for rooted trees).
struct CanonicalForm {
    std::string code;
    auto operator<=>(const CanonicalForm&) const = default;
};

// Undirected unlabeled tree over vertices 0..order-1. The constructor
// rejects anything that is not a tree: wrong edge count, self-loops,
// duplicate edges, disconnected graphs.
class Tree {
public:
    Tree(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Tree&) const = default;

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
};

// Rooted tree with children oriented away from the root and cached height.
struct HalfTree {
    int order = 0;
    int root = 0;
    std::vector<std::vector<int>> children;  // children[v], size == order
    int height = 0;
};

Tree linear_tree(int n);          // the path on n vertices; n >= 1
HalfTree rooted_path(int s);      // bare half-backbone: path rooted at one end

// Max root-to-leaf distance in edges, recomputed from the structure.
int height(const HalfTree& h);

// Throws if the underlying graph is not a tree or the cached height is stale.
void validate_halftree(const HalfTree& h);

// Length in edges of a longest path, via a double breadth-first sweep.
int diameter(const Tree& t);

// The one or two middle vertices of a longest path.
std::vector<int> tree_center(const Tree& t);

CanonicalForm canonical_rooted(const HalfTree& h);
CanonicalForm canonical_free(const Tree& t);

// True iff t is bicentral and splitting at the central edge yields two
// root-preserving-isomorphic halves. Centered trees are never symmetric
// in this sense (the middle vertex is reflection-fixed).
bool is_symmetric(const Tree& t);

// Splits a bicentral tree at its central edge; throws for centered trees.
std::pair<HalfTree, HalfTree> split_at_central_edge(const Tree& t);

// Joins the roots of two rooted trees by a new edge.
Tree fuse_halves(const HalfTree& a, const HalfTree& b);

Tree to_tree(const HalfTree& h);
HalfTree rooted_at(const Tree& t, int root);

}  // namespace treegen
