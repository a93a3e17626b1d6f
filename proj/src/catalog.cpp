#include "treegen/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace treegen {

namespace {

std::mutex g_prime_mutex;
std::vector<std::uint64_t> g_primes;

// copies the first `count` primes into `out` under the cache lock
void take_primes(size_t count, std::vector<std::uint64_t>& out) {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    static std::uint64_t limit = 1 << 16;
    while (g_primes.size() < count) {
        g_primes.clear();
        std::vector<char> composite(limit + 1, 0);
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            g_primes.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
        }
        if (g_primes.size() < count) limit *= 2;
    }
    out.assign(g_primes.begin(), g_primes.begin() + count);
}

void multisets_rec(int lo, int hi, int count, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        multisets_rec(v, hi, count - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> slot_multisets(int lo, int hi, int count) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (count == 0) {
        out.emplace_back();
        return out;
    }
    if (lo > hi) return out;
    multisets_rec(lo, hi, count, cur, out);
    return out;
}

std::vector<std::pair<int, int>> AppendixSet::elements() const {
    Multiset<int> counts;
    for (const auto& g : groups)
        for (int id : g.ids) ++counts[id];
    return {counts.begin(), counts.end()};
}

std::pair<int, int> HalfTreeCatalog::range(int order) const {
    if (order < 1 || order > max_order())
        throw std::invalid_argument("catalog: order not listed");
    return ranges_[order - 1];
}

std::span<const HalfTree> HalfTreeCatalog::of_order(int order) const {
    auto [lo, hi] = range(order);
    return {items_.data() + lo, static_cast<size_t>(hi - lo)};
}

int HalfTreeCatalog::min_radius(int order) const {
    if (order < 1 || order > max_order())
        throw std::invalid_argument("catalog: order not listed");
    return min_radius_[order - 1];
}

std::optional<int> HalfTreeCatalog::find(const HalfTree& h) const {
    auto it = by_code_.find(canonical_rooted(h).code);
    if (it == by_code_.end()) return std::nullopt;
    return it->second;
}

int HalfTreeCatalog::index_of(const HalfTree& h) const {
    auto id = find(h);
    if (!id) throw std::invalid_argument("catalog: half-tree not listed");
    return *id;
}

std::strong_ordering HalfTreeCatalog::cmp(const HalfTree& a, const HalfTree& b) const {
    if (a.order != b.order) return a.order <=> b.order;
    auto ca = canonical_rooted(a);
    auto cb = canonical_rooted(b);
    if (ca == cb) return std::strong_ordering::equal;
    auto ia = by_code_.find(ca.code);
    auto ib = by_code_.find(cb.code);
    if (ia == by_code_.end() || ib == by_code_.end())
        throw std::invalid_argument("catalog: comparing unlisted half-trees");
    return ia->second <=> ib->second;
}

void HalfTreeCatalog::emit(HalfTree h) {
    auto code = canonical_rooted(h).code;
    auto [it, fresh] = by_code_.emplace(std::move(code), static_cast<int>(items_.size()));
    if (!fresh) throw std::logic_error("catalog: duplicate half-tree emission");
    items_.push_back(std::move(h));
}

void HalfTreeCatalog::ensure_order(int n) {
    if (n < 1) throw std::invalid_argument("catalog: order must be >= 1");
    for (int m = max_order() + 1; m <= n; ++m) list_order(m);
}

void HalfTreeCatalog::list_order(int n) {
    const int begin = static_cast<int>(items_.size());
    if (n == 1) {
        HalfTree single;
        single.order = 1;
        single.root = 0;
        single.children.resize(1);
        single.height = 0;
        emit(std::move(single));
    } else {
        for (int k = 0; k <= n - 2; ++k) {
            const int s = n - k;
            for (const Partition& part : partitions(k)) {
                bool feasible = true;
                for (const auto& [p, mult] : part.parts())
                    if (min_radius(p) > s - 1) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                for (const AppendixSet& aset : enumerate_appendix_sets(part, *this)) {
                    auto elements = aset.elements();
                    std::vector<std::vector<std::vector<int>>> choices;
                    choices.reserve(elements.size());
                    bool ok = true;
                    for (const auto& [id, mult] : elements) {
                        auto v = slot_multisets(radius_of(id), s - 1, mult);
                        if (v.empty()) {
                            ok = false;
                            break;
                        }
                        choices.push_back(std::move(v));
                    }
                    if (!ok) continue;
                    // odometer over per-element placements, first (least)
                    // element most significant
                    std::vector<size_t> idx(elements.size(), 0);
                    while (true) {
                        Placement pl;
                        pl.backbone_order = s;
                        for (size_t e = 0; e < elements.size(); ++e)
                            for (int d : choices[e][idx[e]])
                                pl.slots[d].push_back(elements[e].first);
                        if (placement_valid(pl, *this)) emit(realize(pl, *this));
                        size_t e = elements.size();
                        while (e > 0) {
                            --e;
                            if (++idx[e] < choices[e].size()) break;
                            idx[e] = 0;
                            if (e == 0) goto done_set;
                        }
                        if (elements.empty()) break;
                    }
                done_set:;
                }
            }
        }
    }
    ranges_.emplace_back(begin, static_cast<int>(items_.size()));
    int mr = items_[begin].height + 1;
    for (int i = begin; i < static_cast<int>(items_.size()); ++i)
        mr = std::min(mr, items_[i].height + 1);
    min_radius_.push_back(mr);
    take_primes(items_.size(), primes_);
}

std::vector<HalfTree> list_halftrees(int n, HalfTreeCatalog& cat) {
    cat.ensure_order(n);
    auto span = cat.of_order(n);
    return {span.begin(), span.end()};
}

std::vector<HalfTree> list_halftrees(int n) {
    HalfTreeCatalog cat;
    return list_halftrees(n, cat);
}

std::uint64_t prime_code(const HalfTree& h, HalfTreeCatalog& cat) {
    cat.ensure_order(h.order);
    return cat.prime_of(cat.index_of(h));
}

BigInt multiset_code(const FixedOrderMultiset& m, const HalfTreeCatalog& cat) {
    BigInt out = 1;
    for (int id : m.ids) out *= cat.prime_of(id);
    return out;
}

std::strong_ordering cmp_fixed_order(const FixedOrderMultiset& a, const FixedOrderMultiset& b,
                                     const HalfTreeCatalog& cat) {
    if (a.member_order != b.member_order)
        throw std::invalid_argument("cmp_fixed_order: member orders differ");
    if (a.ids.size() != b.ids.size())
        throw std::invalid_argument("cmp_fixed_order: sizes differ");
    BigInt na = multiset_code(a, cat);
    BigInt nb = multiset_code(b, cat);
    if (na < nb) return std::strong_ordering::less;
    if (nb < na) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_appendix_set(const AppendixSet& a, const AppendixSet& b,
                                      const HalfTreeCatalog& cat) {
    if (!(a.source == b.source))
        throw std::invalid_argument("cmp_appendix_set: source partitions differ");
    for (size_t i = 0; i < a.groups.size(); ++i) {
        auto c = cmp_fixed_order(a.groups[i], b.groups[i], cat);
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

std::vector<AppendixSet> enumerate_appendix_sets(const Partition& p, const HalfTreeCatalog& cat) {
    std::vector<AppendixSet> out;
    if (p.empty()) {
        out.push_back(AppendixSet{p, {}});
        return out;
    }
    // per part (descending): all size-mult multisets of that order's ids,
    // ascending by code
    std::vector<std::vector<FixedOrderMultiset>> per_part;
    for (const auto& [part, mult] : p.parts()) {
        if (part > cat.max_order())
            throw std::invalid_argument("enumerate_appendix_sets: catalog missing an order");
        auto [lo, hi] = cat.range(part);
        std::vector<FixedOrderMultiset> group;
        for (auto& ids : slot_multisets(lo, hi - 1, mult))
            group.push_back(FixedOrderMultiset{part, std::move(ids)});
        std::sort(group.begin(), group.end(),
                  [&cat](const FixedOrderMultiset& a, const FixedOrderMultiset& b) {
                      return multiset_code(a, cat) < multiset_code(b, cat);
                  });
        per_part.push_back(std::move(group));
    }
    std::vector<size_t> idx(per_part.size(), 0);
    while (true) {
        AppendixSet aset;
        aset.source = p;
        for (size_t i = 0; i < per_part.size(); ++i) aset.groups.push_back(per_part[i][idx[i]]);
        out.push_back(std::move(aset));
        size_t i = per_part.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per_part[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<Placement> place_copies(int count, int appendix_id, int spine_order,
                                    const HalfTreeCatalog& cat) {
    if (count < 1) throw std::invalid_argument("place_copies: count must be >= 1");
    std::vector<Placement> out;
    for (auto& slots : slot_multisets(cat.radius_of(appendix_id), spine_order - 1, count)) {
        Placement pl;
        pl.backbone_order = spine_order;
        for (int d : slots) pl.slots[d].push_back(appendix_id);
        out.push_back(std::move(pl));
    }
    return out;
}

std::vector<HalfTree> append_copies(int count, const HalfTree& a, int spine_order,
                                    HalfTreeCatalog& cat) {
    cat.ensure_order(a.order);
    int id = cat.index_of(a);
    std::vector<HalfTree> out;
    for (const auto& pl : place_copies(count, id, spine_order, cat))
        out.push_back(realize(pl, cat));
    return out;
}

int placement_order(const Placement& pl, const HalfTreeCatalog& cat) {
    int n = pl.backbone_order;
    for (const auto& [d, ids] : pl.slots)
        for (int id : ids) n += cat.order_of(id);
    return n;
}

HalfTree realize(const Placement& pl, const HalfTreeCatalog& cat) {
    const int s = pl.backbone_order;
    HalfTree out;
    out.order = placement_order(pl, cat);
    out.root = 0;
    out.children.resize(out.order);
    for (int i = 0; i + 1 < s; ++i) out.children[i].push_back(i + 1);
    int next = s;
    for (const auto& [d, ids] : pl.slots) {
        if (d < 1 || d > s - 1) throw std::invalid_argument("realize: slot out of range");
        const int host = s - 1 - d;
        for (int id : ids) {
            if (cat.radius_of(id) > d)
                throw std::invalid_argument("realize: appendix too long for its slot");
            const HalfTree& a = cat.item(id);
            for (int u = 0; u < a.order; ++u)
                for (int c : a.children[u]) out.children[next + u].push_back(next + c);
            out.children[host].push_back(next + a.root);
            next += a.order;
        }
    }
    out.height = s - 1;
    return out;
}

HalfTree tip(const Placement& pl, int at, const HalfTreeCatalog& cat) {
    auto it = pl.slots.find(at);
    bool terminal = false;
    if (it != pl.slots.end())
        for (int id : it->second)
            if (cat.radius_of(id) == at) terminal = true;
    if (!terminal) throw std::invalid_argument("tip: no terminal substituent at that slot");
    Placement below;
    below.backbone_order = at;
    for (const auto& [d, ids] : pl.slots)
        if (d < at) below.slots.emplace(d, ids);
    return realize(below, cat);
}

bool terminal_allowed(const HalfTree& a, const HalfTree& t, HalfTreeCatalog& cat) {
    return cmp_halftree(a, t, cat) <= 0;
}

bool placement_valid(const Placement& pl, const HalfTreeCatalog& cat) {
    for (const auto& [d, ids] : pl.slots) {
        int prev = -1;
        for (int id : ids) {
            if (id == prev) continue;  // same class, same verdict
            prev = id;
            if (cat.radius_of(id) != d) continue;
            Placement below;
            below.backbone_order = d;
            for (const auto& [dd, lower] : pl.slots)
                if (dd < d) below.slots.emplace(dd, lower);
            HalfTree t = realize(below, cat);
            if (t.order != cat.order_of(id)) {
                if (cat.order_of(id) > t.order) return false;
            } else {
                auto tid = cat.find(t);
                if (!tid) throw std::logic_error("placement_valid: tip not listed");
                if (id > *tid) return false;
            }
        }
    }
    return true;
}

std::strong_ordering cmp_halftree(const HalfTree& a, const HalfTree& b, HalfTreeCatalog& cat) {
    if (a.order != b.order) return a.order <=> b.order;
    cat.ensure_order(a.order);
    return cat.cmp(a, b);
}

}  // namespace treegen
