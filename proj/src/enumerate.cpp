#include "treegen/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace treegen {

namespace {

Placement bare_placement(int spine) {
    Placement pl;
    pl.backbone_order = spine;
    return pl;
}

Placement merge_placements(const Placement& a, const Placement& b) {
    assert(a.backbone_order == b.backbone_order);
    Placement out = a;
    for (const auto& [d, ids] : b.slots) {
        auto& dst = out.slots[d];
        dst.insert(dst.end(), ids.begin(), ids.end());
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

std::vector<int> side_ids(const GeneratedSet& g) {
    std::vector<int> out;
    for (const auto& m : g.members) {
        for (const auto& [d, ids] : m.left.slots) out.insert(out.end(), ids.begin(), ids.end());
        for (const auto& [d, ids] : m.right.slots) out.insert(out.end(), ids.begin(), ids.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> middle_ids(const GeneratedSet& g) {
    std::vector<int> out;
    for (const auto& m : g.members) out.insert(out.end(), m.middle.begin(), m.middle.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

void retally(GeneratedSet& g) {
    g.sym = SymCount{};
    for (const auto& m : g.members)
        if (m.mirror_symmetric)
            g.sym.sigma += 1;
        else
            g.sym.alpha += 1;
}

GeneratedSet identity_set(int backbone) {
    GeneratedSet g;
    g.backbone_order = backbone;
    DecoratedBackbone d;
    d.backbone_order = backbone;
    d.left = bare_placement(backbone / 2);
    d.right = bare_placement(backbone / 2);
    d.mirror_symmetric = true;
    g.members.push_back(std::move(d));
    g.sym = SymCount{1, 0};
    return g;
}

// Overlay without terminal re-validation.
GeneratedSet overlay_combine(const GeneratedSet& s, const GeneratedSet& t) {
    if (s.backbone_order != t.backbone_order)
        throw std::invalid_argument("combine: backbone mismatch");
    if (intersects(side_ids(s), side_ids(t)) || intersects(middle_ids(s), middle_ids(t)))
        throw std::invalid_argument("combine: appendix classes not disjoint");
    GeneratedSet out;
    out.backbone_order = s.backbone_order;
    for (const auto& a : s.members)
        for (const auto& b : t.members) {
            std::vector<int> mid = a.middle;
            mid.insert(mid.end(), b.middle.begin(), b.middle.end());
            std::sort(mid.begin(), mid.end());
            DecoratedBackbone aligned;
            aligned.backbone_order = out.backbone_order;
            aligned.left = merge_placements(a.left, b.left);
            aligned.right = merge_placements(a.right, b.right);
            aligned.middle = mid;
            aligned.mirror_symmetric = a.mirror_symmetric && b.mirror_symmetric;
            out.members.push_back(std::move(aligned));
            if (!a.mirror_symmetric && !b.mirror_symmetric) {
                DecoratedBackbone crossed;
                crossed.backbone_order = out.backbone_order;
                crossed.left = merge_placements(a.left, b.right);
                crossed.right = merge_placements(a.right, b.left);
                crossed.middle = std::move(mid);
                crossed.mirror_symmetric = false;
                out.members.push_back(std::move(crossed));
            }
        }
    retally(out);
    return out;
}

GeneratedSet validate_sides(const GeneratedSet& g, const HalfTreeCatalog& cat) {
    GeneratedSet out;
    out.backbone_order = g.backbone_order;
    for (const auto& m : g.members)
        if (placement_valid(m.left, cat) && placement_valid(m.right, cat)) out.members.push_back(m);
    retally(out);
    return out;
}

// id may sit on the middle only if it does not outrank the decorated side.
bool middle_le_side(int id, const Placement& side, const HalfTreeCatalog& cat) {
    const int side_order = placement_order(side, cat);
    const int a_order = cat.order_of(id);
    if (a_order != side_order) return a_order < side_order;
    auto tid = cat.find(realize(side, cat));
    if (!tid) throw std::logic_error("combine: decorated side not listed");
    return id <= *tid;
}

GeneratedSet validate_middle(const GeneratedSet& g, const HalfTreeCatalog& cat) {
    GeneratedSet out;
    out.backbone_order = g.backbone_order;
    const int m = g.backbone_order / 2;
    for (const auto& member : g.members) {
        bool ok = true;
        for (int id : member.middle)
            if (cat.radius_of(id) == m &&
                !(middle_le_side(id, member.left, cat) && middle_le_side(id, member.right, cat))) {
                ok = false;
                break;
            }
        if (ok) out.members.push_back(member);
    }
    retally(out);
    return out;
}

GeneratedSet middle_only_set(int backbone, std::vector<int> ids) {
    GeneratedSet g = identity_set(backbone);
    g.members[0].middle = std::move(ids);
    return g;
}

GeneratedSet element_layer(int id, int mult, int spine, int backbone,
                           const HalfTreeCatalog& cat) {
    GeneratedSet out;
    out.backbone_order = backbone;
    for (int i = 0; i <= mult / 2; ++i) {
        auto left = place_copies(mult - i, id, spine, cat);
        if (left.empty()) continue;
        std::vector<Placement> right;
        if (i == 0)
            right.push_back(bare_placement(spine));
        else
            right = place_copies(i, id, spine, cat);
        auto fused = fuse(left, right, mult - i == i, cat);
        for (auto& m : fused.members) {
            m.backbone_order = backbone;  // odd backbones keep their middle vertex
            out.members.push_back(std::move(m));
        }
    }
    retally(out);
    return out;
}

std::optional<GeneratedSet> fold_layers(const AppendixSet& aset, int spine, int backbone,
                                        const HalfTreeCatalog& cat, TraceSink* trace) {
    GeneratedSet acc = identity_set(backbone);
    for (const auto& [id, mult] : aset.elements()) {
        GeneratedSet layer = element_layer(id, mult, spine, backbone, cat);
        if (layer.members.empty()) return std::nullopt;
        if (trace) trace->on_set(layer);
        GeneratedSet raw = overlay_combine(acc, layer);
        if (trace) trace->on_combine(acc.sym, layer.sym, raw);
        acc = std::move(raw);
    }
    return acc;
}

std::vector<int> flatten_ids(const AppendixSet& aset) {
    std::vector<int> out;
    for (const auto& [id, mult] : aset.elements()) out.insert(out.end(), mult, id);
    std::sort(out.begin(), out.end());
    return out;
}

int max_radius(const std::vector<int>& ids, const HalfTreeCatalog& cat) {
    int r = 0;
    for (int id : ids) r = std::max(r, cat.radius_of(id));
    return r;
}

}  // namespace

std::vector<HalfTree> DecoratedBackbone::middle_halves(const HalfTreeCatalog& cat) const {
    std::vector<HalfTree> out;
    out.reserve(middle.size());
    for (int id : middle) out.push_back(cat.item(id));
    return out;
}

Tree DecoratedBackbone::realize(const HalfTreeCatalog& cat) const {
    HalfTree l = left_half(cat);
    HalfTree r = right_half(cat);
    std::vector<std::pair<int, int>> edges;
    int order;
    if (backbone_order % 2 == 0) {
        if (!middle.empty())
            throw std::logic_error("DecoratedBackbone: even backbone with middle appendices");
        order = l.order + r.order;
        for (int v = 0; v < l.order; ++v)
            for (int c : l.children[v]) edges.emplace_back(v, c);
        for (int v = 0; v < r.order; ++v)
            for (int c : r.children[v]) edges.emplace_back(l.order + v, l.order + c);
        edges.emplace_back(l.root, l.order + r.root);
    } else {
        for (int v = 0; v < l.order; ++v)
            for (int c : l.children[v]) edges.emplace_back(1 + v, 1 + c);
        int off = 1 + l.order;
        for (int v = 0; v < r.order; ++v)
            for (int c : r.children[v]) edges.emplace_back(off + v, off + c);
        edges.emplace_back(0, 1 + l.root);
        edges.emplace_back(0, off + r.root);
        off += r.order;
        for (int id : middle) {
            const HalfTree& a = cat.item(id);
            for (int v = 0; v < a.order; ++v)
                for (int c : a.children[v]) edges.emplace_back(off + v, off + c);
            edges.emplace_back(0, off + a.root);
            off += a.order;
        }
        order = off;
    }
    return Tree(order, std::move(edges));
}

std::vector<Tree> GeneratedSet::trees(const HalfTreeCatalog& cat) const {
    std::vector<Tree> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.realize(cat));
    return out;
}

GeneratedSet fuse(std::span<const Placement> left, std::span<const Placement> right,
                  bool same_inputs, const HalfTreeCatalog& cat) {
    GeneratedSet out;
    if (left.empty() || right.empty()) return out;
    const int spine = left.front().backbone_order;
    for (const auto& pl : left)
        if (pl.backbone_order != spine) throw std::invalid_argument("fuse: height mismatch");
    for (const auto& pl : right)
        if (pl.backbone_order != spine) throw std::invalid_argument("fuse: height mismatch");
    out.backbone_order = 2 * spine;

    std::vector<std::string> lcodes(left.size()), rcodes(right.size());
    for (size_t i = 0; i < left.size(); ++i) lcodes[i] = canonical_rooted(realize(left[i], cat)).code;
    if (same_inputs) {
        if (left.size() != right.size())
            throw std::invalid_argument("fuse: same_inputs with different set sizes");
        rcodes = lcodes;
    } else {
        for (size_t j = 0; j < right.size(); ++j)
            rcodes[j] = canonical_rooted(realize(right[j], cat)).code;
    }

    auto push = [&](const Placement& a, const Placement& b, bool sym) {
        DecoratedBackbone d;
        d.backbone_order = out.backbone_order;
        d.left = a;
        d.right = b;
        d.mirror_symmetric = sym;
        out.members.push_back(std::move(d));
    };
    if (same_inputs) {
        for (size_t i = 0; i < left.size(); ++i)
            for (size_t j = i; j < right.size(); ++j) push(left[i], right[j], lcodes[i] == rcodes[j]);
    } else {
        for (size_t i = 0; i < left.size(); ++i)
            for (size_t j = 0; j < right.size(); ++j) push(left[i], right[j], lcodes[i] == rcodes[j]);
    }
    retally(out);
    return out;
}

GeneratedSet combine(const GeneratedSet& s, const GeneratedSet& t, const HalfTreeCatalog& cat) {
    GeneratedSet raw = overlay_combine(s, t);
    return validate_middle(validate_sides(raw, cat), cat);
}

Tree attach_middle(int backbone_order, const AppendixSet& aset, HalfTreeCatalog& cat) {
    if (backbone_order < 3 || backbone_order % 2 == 0)
        throw std::invalid_argument("attach_middle: backbone order must be odd and >= 3");
    std::vector<int> ids = flatten_ids(aset);
    if (max_radius(ids, cat) > backbone_order / 2)
        throw std::invalid_argument("attach_middle: appendix too long for the middle vertex");
    GeneratedSet g = middle_only_set(backbone_order, std::move(ids));
    return g.members[0].realize(cat);
}

int step_of(const Tree& t, int n) {
    if (t.order() != n) throw std::invalid_argument("step_of: order mismatch");
    return n - (diameter(t) + 1);
}

void enumerate_trees(int n, HalfTreeCatalog& cat,
                     const std::function<void(int, const Tree&)>& emit, TraceSink* trace) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
    if (n == 1) {
        emit(0, Tree(1, {}));
        return;
    }
    if (n == 2) {
        emit(0, linear_tree(2));
        return;
    }
    cat.ensure_order(std::max(1, n - 3));
    for (int k = 0; k <= n - 3; ++k) {
        const int b = n - k;
        if (b % 2 == 0) {
            const int spine = b / 2;
            for (const Partition& part : partitions(k)) {
                bool feasible = true;
                for (const auto& [p, mult] : part.parts())
                    if (cat.min_radius(p) > spine - 1) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                for (const AppendixSet& aset : enumerate_appendix_sets(part, cat)) {
                    auto folded = fold_layers(aset, spine, b, cat, trace);
                    if (!folded) continue;
                    GeneratedSet final_set = validate_sides(*folded, cat);
                    if (trace) trace->on_set(final_set);
                    for (const auto& m : final_set.members) emit(k, m.realize(cat));
                }
            }
        } else {
            const int m = b / 2;
            for (int j = 0; j <= k; ++j) {
                const int side_load = k - j;
                GeneratedSet fh;
                fh.backbone_order = b;
                for (const Partition& q : partitions(side_load)) {
                    bool feasible = true;
                    for (const auto& [p, mult] : q.parts())
                        if (cat.min_radius(p) > m - 1) {
                            feasible = false;
                            break;
                        }
                    if (!feasible) continue;
                    for (const AppendixSet& bset : enumerate_appendix_sets(q, cat)) {
                        auto folded = fold_layers(bset, m, b, cat, trace);
                        if (!folded) continue;
                        GeneratedSet validated = validate_sides(*folded, cat);
                        if (trace) trace->on_set(validated);
                        for (auto& mem : validated.members) fh.members.push_back(std::move(mem));
                    }
                }
                retally(fh);
                if (fh.members.empty()) continue;
                if (trace) trace->on_set(fh);
                for (const Partition& jj : partitions(j)) {
                    for (const AppendixSet& cset : enumerate_appendix_sets(jj, cat)) {
                        std::vector<int> ids = flatten_ids(cset);
                        if (max_radius(ids, cat) > m) continue;
                        GeneratedSet mid = middle_only_set(b, std::move(ids));
                        GeneratedSet raw = overlay_combine(mid, fh);
                        if (trace) trace->on_combine(mid.sym, fh.sym, raw);
                        GeneratedSet final_set = validate_middle(raw, cat);
                        if (trace) trace->on_set(final_set);
                        for (const auto& mem : final_set.members) emit(k, mem.realize(cat));
                    }
                }
            }
        }
    }
}

std::vector<Tree> list_trees(int n, HalfTreeCatalog& cat) {
    std::vector<Tree> out;
    enumerate_trees(n, cat, [&](int, const Tree& t) { out.push_back(t); });
    return out;
}

std::vector<Tree> list_trees(int n) {
    HalfTreeCatalog cat;
    return list_trees(n, cat);
}

std::vector<Tree> list_trees_step(int n, int k, HalfTreeCatalog& cat) {
    std::vector<Tree> out;
    enumerate_trees(n, cat, [&](int step, const Tree& t) {
        if (step == k) out.push_back(t);
    });
    return out;
}

GeneratedSet generate_equal_radius(int k, int r, int backbone, HalfTreeCatalog& cat) {
    if (k < 1 || r < 1) throw std::invalid_argument("generate_equal_radius: k, r must be >= 1");
    if (backbone < 3) throw std::invalid_argument("generate_equal_radius: backbone must be >= 3");
    cat.ensure_order(r);
    const int id = cat.range(r).first;  // the rooted path leads its order
    GeneratedSet out;
    out.backbone_order = backbone;
    if (backbone % 2 == 0) {
        GeneratedSet layer = element_layer(id, k, backbone / 2, backbone, cat);
        out = validate_sides(layer, cat);
    } else {
        const int m = backbone / 2;
        for (int j = 0; j <= k; ++j) {
            if (j > 0 && r > m) break;
            const int side_load = k - j;
            GeneratedSet sides = side_load == 0
                                     ? identity_set(backbone)
                                     : element_layer(id, side_load, m, backbone, cat);
            sides = validate_sides(sides, cat);
            if (sides.members.empty()) continue;
            GeneratedSet mid = middle_only_set(backbone, std::vector<int>(j, id));
            GeneratedSet final_set = validate_middle(overlay_combine(mid, sides), cat);
            for (auto& mem : final_set.members) out.members.push_back(std::move(mem));
        }
        retally(out);
    }
    return out;
}

GeneratedSet generate_equal_radius_sides(int k, int r, int backbone, HalfTreeCatalog& cat) {
    if (k < 1 || r < 1) throw std::invalid_argument("generate_equal_radius_sides: k, r must be >= 1");
    if (backbone < 3) throw std::invalid_argument("generate_equal_radius_sides: backbone must be >= 3");
    cat.ensure_order(r);
    const int id = cat.range(r).first;
    return validate_sides(element_layer(id, k, backbone / 2, backbone, cat), cat);
}

GeneratedSet generate_linear_total(int k, int backbone, HalfTreeCatalog& cat) {
    if (k < 0) throw std::invalid_argument("generate_linear_total: k must be >= 0");
    if (backbone < 3) throw std::invalid_argument("generate_linear_total: backbone must be >= 3");
    cat.ensure_order(std::max(1, k));
    auto path_id = [&](int order) { return cat.range(order).first; };
    auto linear_fold = [&](const Partition& part, int spine) -> std::optional<GeneratedSet> {
        GeneratedSet acc = identity_set(backbone);
        for (auto it = part.parts().rbegin(); it != part.parts().rend(); ++it) {
            GeneratedSet layer = element_layer(path_id(it->first), it->second, spine, backbone, cat);
            if (layer.members.empty()) return std::nullopt;
            acc = overlay_combine(acc, layer);
        }
        return acc;
    };
    GeneratedSet out;
    out.backbone_order = backbone;
    if (backbone % 2 == 0) {
        for (const Partition& part : partitions(k)) {
            auto folded = linear_fold(part, backbone / 2);
            if (!folded) continue;
            GeneratedSet v = validate_sides(*folded, cat);
            for (auto& mem : v.members) out.members.push_back(std::move(mem));
        }
    } else {
        const int m = backbone / 2;
        for (int j = 0; j <= k; ++j) {
            GeneratedSet fh;
            fh.backbone_order = backbone;
            for (const Partition& q : partitions(k - j)) {
                auto folded = linear_fold(q, m);
                if (!folded) continue;
                GeneratedSet v = validate_sides(*folded, cat);
                for (auto& mem : v.members) fh.members.push_back(std::move(mem));
            }
            retally(fh);
            if (fh.members.empty()) continue;
            for (const Partition& jj : partitions(j)) {
                if (!middle_filter(jj.distinct_parts(), backbone)) continue;
                std::vector<int> ids;
                for (const auto& [p, mult] : jj.parts()) ids.insert(ids.end(), mult, path_id(p));
                std::sort(ids.begin(), ids.end());
                GeneratedSet mid = middle_only_set(backbone, std::move(ids));
                GeneratedSet final_set = validate_middle(overlay_combine(mid, fh), cat);
                for (auto& mem : final_set.members) out.members.push_back(std::move(mem));
            }
        }
    }
    retally(out);
    return out;
}

}  // namespace treegen
