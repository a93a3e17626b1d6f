#include "treegen/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace treegen {

Tree::Tree(int order, std::vector<std::pair<int, int>> edges) : order_(order) {
    if (order < 1) throw std::invalid_argument("Tree: order must be >= 1");
    if (static_cast<int>(edges.size()) != order - 1)
        throw std::invalid_argument("Tree: edge count must equal order - 1");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Tree: self-loop");
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("Tree: vertex out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Tree: duplicate edge");
    edges_ = std::move(edges);

    // connectivity from vertex 0
    auto adj = adjacency();
    std::vector<char> seen(order_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != order_) throw std::invalid_argument("Tree: not connected");
}

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(order_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

Tree linear_tree(int n) {
    if (n < 1) throw std::invalid_argument("linear_tree: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

HalfTree rooted_path(int s) {
    if (s < 1) throw std::invalid_argument("rooted_path: order must be >= 1");
    HalfTree h;
    h.order = s;
    h.root = 0;
    h.children.resize(s);
    for (int i = 0; i + 1 < s; ++i) h.children[i].push_back(i + 1);
    h.height = s - 1;
    return h;
}

namespace {

// (farthest vertex, distance, parent array) of a BFS from src
struct BfsResult {
    int far;
    int dist;
    std::vector<int> parent;
};

BfsResult bfs_far(const std::vector<std::vector<int>>& adj, int src) {
    std::vector<int> dist(adj.size(), -1), parent(adj.size(), -1);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    int far = src;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] > dist[far]) far = v;
        for (int w : adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                q.push(w);
            }
    }
    return {far, dist[far], std::move(parent)};
}

int depth_from(const HalfTree& h, int v) {
    int best = 0;
    for (int c : h.children[v]) best = std::max(best, 1 + depth_from(h, c));
    return best;
}

}  // namespace

int height(const HalfTree& h) {
    if (h.order < 1 || static_cast<int>(h.children.size()) != h.order)
        throw std::invalid_argument("height: malformed half-tree");
    return depth_from(h, h.root);
}

void validate_halftree(const HalfTree& h) {
    to_tree(h);  // checks the underlying graph
    if (height(h) != h.height)
        throw std::invalid_argument("validate_halftree: cached height is stale");
}

int diameter(const Tree& t) {
    if (t.order() == 1) return 0;
    auto adj = t.adjacency();
    auto a = bfs_far(adj, 0);
    auto b = bfs_far(adj, a.far);
    return b.dist;
}

std::vector<int> tree_center(const Tree& t) {
    if (t.order() == 1) return {0};
    auto adj = t.adjacency();
    auto a = bfs_far(adj, 0);
    auto b = bfs_far(adj, a.far);
    std::vector<int> path;
    for (int v = b.far; v != -1; v = b.parent[v]) path.push_back(v);
    int len = static_cast<int>(path.size());  // vertices on a longest path
    if (len % 2 == 1) return {path[len / 2]};
    return {path[len / 2 - 1], path[len / 2]};
}

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& children, int v) {
    std::vector<std::string> codes;
    codes.reserve(children[v].size());
    for (int c : children[v]) codes.push_back(rooted_code(children, c));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& s : codes) out += s;
    out += ")";
    return out;
}

}  // namespace

CanonicalForm canonical_rooted(const HalfTree& h) {
    return {rooted_code(h.children, h.root)};
}

HalfTree rooted_at(const Tree& t, int root) {
    auto adj = t.adjacency();
    HalfTree h;
    h.order = t.order();
    h.root = root;
    h.children.resize(t.order());
    std::vector<int> stack{root};
    std::vector<char> seen(t.order(), 0);
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                h.children[v].push_back(w);
                stack.push_back(w);
            }
    }
    h.height = height(h);
    return h;
}

namespace {

// Half rooted at `root`, not crossing into `blocked`.
HalfTree half_side(const Tree& t, int root, int blocked) {
    auto adj = t.adjacency();
    std::vector<int> label(t.order(), -1);
    std::vector<int> order;
    label[blocked] = -2;
    std::vector<int> stack{root};
    label[root] = 0;
    order.push_back(root);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (label[w] == -1) {
                label[w] = static_cast<int>(order.size());
                order.push_back(w);
                stack.push_back(w);
            }
    }
    HalfTree h;
    h.order = static_cast<int>(order.size());
    h.root = 0;
    h.children.resize(h.order);
    for (int v : order)
        for (int w : adj[v])
            if (w != blocked && label[w] > label[v]) h.children[label[v]].push_back(label[w]);
    h.height = height(h);
    return h;
}

}  // namespace

std::pair<HalfTree, HalfTree> split_at_central_edge(const Tree& t) {
    auto c = tree_center(t);
    if (c.size() != 2)
        throw std::invalid_argument("split_at_central_edge: tree is not bicentral");
    return {half_side(t, c[0], c[1]), half_side(t, c[1], c[0])};
}

CanonicalForm canonical_free(const Tree& t) {
    auto c = tree_center(t);
    if (c.size() == 1) return {"C" + canonical_rooted(rooted_at(t, c[0])).code};
    auto a = rooted_code(half_side(t, c[0], c[1]).children, 0);
    auto b = rooted_code(half_side(t, c[1], c[0]).children, 0);
    if (b < a) std::swap(a, b);
    return {"B" + a + b};
}

bool is_symmetric(const Tree& t) {
    auto c = tree_center(t);
    if (c.size() != 2) return false;
    auto [a, b] = split_at_central_edge(t);
    return canonical_rooted(a) == canonical_rooted(b);
}

Tree to_tree(const HalfTree& h) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < h.order; ++v)
        for (int c : h.children[v]) edges.emplace_back(v, c);
    return Tree(h.order, std::move(edges));
}

Tree fuse_halves(const HalfTree& a, const HalfTree& b) {
    int n = a.order + b.order;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < a.order; ++v)
        for (int c : a.children[v]) edges.emplace_back(v, c);
    for (int v = 0; v < b.order; ++v)
        for (int c : b.children[v]) edges.emplace_back(a.order + v, a.order + c);
    edges.emplace_back(a.root, a.order + b.root);
    return Tree(n, std::move(edges));
}

}  // namespace treegen
