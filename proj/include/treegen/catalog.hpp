#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "treegen/bigint.hpp"
#include "treegen/partitions.hpp"
#include "treegen/tree.hpp"

namespace treegen {

// Multiset of half-trees sharing one order; ids index the global catalog
// and are kept sorted ascending.
struct FixedOrderMultiset {
    int member_order = 0;
    std::vector<int> ids;
};

// One manifestation of a partition: a fixed-order multiset per part,
// aligned with the partition's parts in descending order.
struct AppendixSet {
    Partition source;
    std::vector<FixedOrderMultiset> groups;

    // (catalog id, multiplicity) over all groups, ascending by id
    std::vector<std::pair<int, int>> elements() const;
    bool empty() const { return groups.empty(); }
};

// Appendices placed on a half-backbone. Slot keys are distances from the
// end vertex (end = 0, root = backbone_order - 1); a radius-r appendix
// may only occupy slots >= r. Values are sorted catalog ids.
struct Placement {
    int backbone_order = 0;
    std::map<int, std::vector<int>> slots;
};

// The global half-tree listing: all half-trees of each order, in listing
// order, built bottom-up one order at a time. Immutable once an order is
// complete.
class HalfTreeCatalog {
public:
    void ensure_order(int n);
    int max_order() const { return static_cast<int>(ranges_.size()); }

    const HalfTree& item(int id) const { return items_[id]; }
    int size() const { return static_cast<int>(items_.size()); }
    int order_of(int id) const { return items_[id].order; }
    int height_of(int id) const { return items_[id].height; }
    int radius_of(int id) const { return items_[id].height + 1; }
    std::uint64_t prime_of(int id) const { return primes_[id]; }

    // [begin, end) of ids with the given order; order must be built.
    std::pair<int, int> range(int order) const;
    std::span<const HalfTree> of_order(int order) const;
    int min_radius(int order) const;

    std::optional<int> find(const HalfTree& h) const;
    int index_of(const HalfTree& h) const;  // throws if not listed

    // Listing order: by order ascending, then by position within the
    // order's listing; equal iff root-preserving isomorphic. Requires
    // both orders to be built.
    std::strong_ordering cmp(const HalfTree& a, const HalfTree& b) const;

private:
    void list_order(int n);
    void emit(HalfTree h);

    std::vector<HalfTree> items_;
    std::vector<std::uint64_t> primes_;
    std::vector<std::pair<int, int>> ranges_;    // per order, 1-based offset at index order-1
    std::vector<int> min_radius_;
    std::unordered_map<std::string, int> by_code_;
};

// All half-trees of order n in listing order.
std::vector<HalfTree> list_halftrees(int n);
std::vector<HalfTree> list_halftrees(int n, HalfTreeCatalog& cat);

// The prime assigned to h by its position in the global listing.
std::uint64_t prime_code(const HalfTree& h, HalfTreeCatalog& cat);

// Product over members of prime_code^multiplicity; empty multiset -> 1.
BigInt multiset_code(const FixedOrderMultiset& m, const HalfTreeCatalog& cat);

// Orders fixed-order multisets by their codes; member orders and sizes
// must agree.
std::strong_ordering cmp_fixed_order(const FixedOrderMultiset& a, const FixedOrderMultiset& b,
                                     const HalfTreeCatalog& cat);

// Compares group-by-group from the greatest part downward; both appendix
// sets must come from the same partition.
std::strong_ordering cmp_appendix_set(const AppendixSet& a, const AppendixSet& b,
                                      const HalfTreeCatalog& cat);

// Every appendix set manifesting p, ascending by cmp_appendix_set. The
// catalog must already cover every part of p.
std::vector<AppendixSet> enumerate_appendix_sets(const Partition& p, const HalfTreeCatalog& cat);

// Nondecreasing vectors of `count` values from [lo, hi], lex ascending;
// count == 0 yields one empty vector, lo > hi with count > 0 yields none.
std::vector<std::vector<int>> slot_multisets(int lo, int hi, int count);

// All placements of `count` copies of the catalog item onto legal slots
// of a half-backbone, in positional order (nearest the end first).
std::vector<Placement> place_copies(int count, int appendix_id, int spine_order,
                                    const HalfTreeCatalog& cat);

// Same, realized; `a` is looked up (and its order listed) on demand.
std::vector<HalfTree> append_copies(int count, const HalfTree& a, int spine_order,
                                    HalfTreeCatalog& cat);

HalfTree realize(const Placement& pl, const HalfTreeCatalog& cat);
int placement_order(const Placement& pl, const HalfTreeCatalog& cat);

// The half-tree strictly on the end-vertex side of slot `at`, rooted at
// the neighbor of `at`; `at` must host a terminal substituent.
HalfTree tip(const Placement& pl, int at, const HalfTreeCatalog& cat);

// True iff a may sit terminally against tip t: a precedes-or-equals t in
// listing order.
bool terminal_allowed(const HalfTree& a, const HalfTree& t, HalfTreeCatalog& cat);

// Every terminal substituent (slot distance equal to its radius) allowed
// against its induced tip.
bool placement_valid(const Placement& pl, const HalfTreeCatalog& cat);

std::strong_ordering cmp_halftree(const HalfTree& a, const HalfTree& b, HalfTreeCatalog& cat);

}  // namespace treegen
