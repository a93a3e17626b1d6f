#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "test_util.hpp"
#include "treegen/catalog.hpp"
#include "treegen/counting.hpp"
#include "treegen/oracle.hpp"

using namespace treegen;
using testutil::star;

namespace {

HalfTree cherry() { return rooted_at(star(3), 0); }

int sign(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return -1;
    if (o == std::strong_ordering::greater) return 1;
    return 0;
}

}  // namespace

TEST_CASE("listing counts match the rooted-tree oracle") {
    const size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115};
    HalfTreeCatalog cat;
    for (int n = 1; n <= 8; ++n) {
        auto listing = list_halftrees(n, cat);
        CHECK(listing.size() == expected[n - 1]);
        std::vector<CanonicalForm> codes;
        for (const auto& h : listing) {
            CHECK(h.order == n);
            validate_halftree(h);
            codes.push_back(canonical_rooted(h));
        }
        std::sort(codes.begin(), codes.end());
        CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
        CHECK(codes == oracle_rooted_trees(n));
    }
}

TEST_CASE("listing of order 3: rooted path first, then the branched one") {
    auto listing = list_halftrees(3);
    REQUIRE(listing.size() == 2);
    CHECK(canonical_rooted(listing[0]) == canonical_rooted(rooted_path(3)));
    CHECK(canonical_rooted(listing[1]) == canonical_rooted(cherry()));
    CHECK(listing[0].height == 2);
    CHECK(listing[1].height == 1);
}

TEST_CASE("heights fall as the listing advances") {
    HalfTreeCatalog cat;
    for (int n = 2; n <= 8; ++n) {
        auto listing = list_halftrees(n, cat);
        CHECK(listing.front().height == n - 1);
        for (size_t i = 1; i < listing.size(); ++i)
            CHECK(listing[i].height <= listing[i - 1].height);
        // height distribution must match the rooted trees at large
        std::map<std::string, int> oracle_heights;
        for (const Tree& t : oracle_free_tree_reps(n))
            for (int v = 0; v < n; ++v) {
                HalfTree h = rooted_at(t, v);
                oracle_heights[canonical_rooted(h).code] = h.height;
            }
        std::map<int, int> listed_by_height, oracle_by_height;
        for (const auto& h : listing) ++listed_by_height[h.height];
        for (const auto& [code, hh] : oracle_heights) ++oracle_by_height[hh];
        CHECK(listed_by_height == oracle_by_height);
    }
}

TEST_CASE("prime codes follow the global listing") {
    HalfTreeCatalog cat;
    HalfTree single;
    single.order = 1;
    single.children.resize(1);
    CHECK(prime_code(single, cat) == 2);
    CHECK(prime_code(rooted_path(2), cat) == 3);
    CHECK(prime_code(rooted_path(3), cat) == 5);
    CHECK(prime_code(cherry(), cat) == 7);

    // strictly increasing primes along the listing
    cat.ensure_order(7);
    std::uint64_t prev = 1;
    for (int id = 0; id < cat.size(); ++id) {
        std::uint64_t p = cat.prime_of(id);
        CHECK(p > prev);
        for (std::uint64_t d = 2; d * d <= p; ++d) CHECK(p % d != 0);
        prev = p;
    }
}

TEST_CASE("multiset codes") {
    HalfTreeCatalog cat;
    cat.ensure_order(3);
    int a = cat.index_of(rooted_path(3));   // prime 5
    int b = cat.index_of(cherry());         // prime 7
    CHECK(multiset_code(FixedOrderMultiset{3, {a, a, a}}, cat) == 125);
    CHECK(multiset_code(FixedOrderMultiset{3, {a, b}}, cat) == 35);
    CHECK(multiset_code(FixedOrderMultiset{3, {}}, cat) == 1);
}

TEST_CASE("cmp_fixed_order") {
    HalfTreeCatalog cat;
    cat.ensure_order(3);
    int a = cat.index_of(rooted_path(3));
    int b = cat.index_of(cherry());
    FixedOrderMultiset aaa{3, {a, a, a}}, aab{3, {a, a, b}}, abb{3, {a, b, b}}, bbb{3, {b, b, b}};
    CHECK(cmp_fixed_order(aaa, aab, cat) == std::strong_ordering::less);
    CHECK(cmp_fixed_order(aab, aab, cat) == std::strong_ordering::equal);
    CHECK(cmp_fixed_order(bbb, abb, cat) == std::strong_ordering::greater);
    FixedOrderMultiset wrong{2, {cat.index_of(rooted_path(2)), cat.index_of(rooted_path(2)),
                                 cat.index_of(rooted_path(2))}};
    CHECK_THROWS_AS(cmp_fixed_order(aaa, wrong, cat), std::invalid_argument);
}

TEST_CASE("cmp_appendix_set compares from the greatest part down") {
    HalfTreeCatalog cat;
    cat.ensure_order(4);
    auto p = Partition::of({3, 3, 3, 2, 2, 2});
    auto sets = enumerate_appendix_sets(p, cat);
    REQUIRE(sets.size() == 4);  // one choice of order-2 triple, four of order-3
    CHECK(cmp_appendix_set(sets[0], sets[1], cat) == std::strong_ordering::less);
    CHECK(cmp_appendix_set(sets[2], sets[2], cat) == std::strong_ordering::equal);

    // a difference in a smaller part decides once the greater part ties
    auto q = Partition::of({4, 3});
    auto qs = enumerate_appendix_sets(q, cat);
    auto less = std::strong_ordering::less;
    bool found = false;
    for (size_t i = 0; i + 1 < qs.size(); ++i)
        if (cmp_fixed_order(qs[i].groups[0], qs[i + 1].groups[0], cat) ==
            std::strong_ordering::equal) {
            CHECK(cmp_fixed_order(qs[i].groups[1], qs[i + 1].groups[1], cat) == less);
            found = true;
        }
    CHECK(found);

    auto other = Partition::of({3, 3, 3});
    CHECK_THROWS_AS(cmp_appendix_set(sets[0], enumerate_appendix_sets(other, cat)[0], cat),
                    std::invalid_argument);
}

TEST_CASE("enumerate_appendix_sets counts and order") {
    HalfTreeCatalog cat;
    cat.ensure_order(6);

    auto sets9 = enumerate_appendix_sets(Partition::of({3, 3, 3}), cat);
    REQUIRE(sets9.size() == 4);
    for (size_t i = 0; i + 1 < sets9.size(); ++i)
        CHECK(cmp_appendix_set(sets9[i], sets9[i + 1], cat) == std::strong_ordering::less);

    CHECK(enumerate_appendix_sets(Partition::of({1}), cat).size() == 1);
    CHECK(enumerate_appendix_sets(Partition::of({2, 2, 2, 3, 3, 3}), cat).size() == 4);

    // count identity over all partitions of small n
    for (int n = 0; n <= 6; ++n)
        for (const Partition& p : partitions(n)) {
            BigInt expect = 1;
            for (const auto& [part, mult] : p.parts()) {
                auto [lo, hi] = cat.range(part);
                expect *= multichoose(hi - lo, mult);
            }
            CHECK(BigInt(enumerate_appendix_sets(p, cat).size()) == expect);
        }

    HalfTreeCatalog empty_cat;
    CHECK_THROWS_AS(enumerate_appendix_sets(Partition::of({3}), empty_cat),
                    std::invalid_argument);
}

TEST_CASE("append_copies") {
    HalfTreeCatalog cat;
    HalfTree single;
    single.order = 1;
    single.children.resize(1);

    auto ten = append_copies(3, single, 4, cat);
    CHECK(ten.size() == 10);
    std::set<std::string> codes;
    for (const auto& h : ten) {
        CHECK(h.height == 3);
        codes.insert(canonical_rooted(h).code);
    }
    CHECK(codes.size() == 10);

    auto one = append_copies(1, single, 2, cat);
    REQUIRE(one.size() == 1);
    CHECK(canonical_rooted(one[0]) == canonical_rooted(cherry()));

    auto spider = append_copies(1, rooted_path(2), 3, cat);
    REQUIRE(spider.size() == 1);
    CHECK(spider[0].order == 5);
    CHECK(spider[0].height == 2);

    CHECK(append_copies(1, rooted_path(2), 2, cat).empty());  // no legal slot
    CHECK_THROWS_AS(append_copies(0, single, 3, cat), std::invalid_argument);

    for (int count = 1; count <= 4; ++count)
        for (int s = 2; s <= 6; ++s)
            CHECK(BigInt(append_copies(count, single, s, cat).size()) ==
                  placement_ways(count, s - 1));
}

TEST_CASE("tips") {
    HalfTreeCatalog cat;
    cat.ensure_order(3);
    HalfTree single;
    single.order = 1;
    single.children.resize(1);
    int one = cat.index_of(single);
    int two = cat.index_of(rooted_path(2));
    int three = cat.index_of(rooted_path(3));

    Placement pl;
    pl.backbone_order = 5;
    pl.slots[2] = {two};
    CHECK(canonical_rooted(tip(pl, 2, cat)) == canonical_rooted(rooted_path(2)));

    Placement pl2;
    pl2.backbone_order = 4;
    pl2.slots[1] = {one};
    CHECK(canonical_rooted(tip(pl2, 1, cat)) == canonical_rooted(single));

    // a decorated tip: spine of 4 with a leaf at distance 1 and a terminal
    // radius-3 appendix at the root
    Placement pl3;
    pl3.backbone_order = 4;
    pl3.slots[1] = {one};
    pl3.slots[3] = {three};
    HalfTree t = tip(pl3, 3, cat);
    Placement expected;
    expected.backbone_order = 3;
    expected.slots[1] = {one};
    CHECK(canonical_rooted(t) == canonical_rooted(realize(expected, cat)));

    CHECK(tip(pl3, 1, cat).order == 1);  // the leaf at distance 1 is terminal too
    Placement nonterm;
    nonterm.backbone_order = 5;
    nonterm.slots[3] = {one};  // radius 1 at distance 3
    CHECK_THROWS_AS(tip(nonterm, 3, cat), std::invalid_argument);
    CHECK_THROWS_AS(tip(nonterm, 2, cat), std::invalid_argument);  // empty slot
}

TEST_CASE("terminal_allowed") {
    HalfTreeCatalog cat;
    HalfTree single;
    single.order = 1;
    single.children.resize(1);
    CHECK(terminal_allowed(single, cherry(), cat));
    CHECK(terminal_allowed(cherry(), cherry(), cat));
    CHECK_FALSE(terminal_allowed(cherry(), rooted_path(3), cat));
}

TEST_CASE("cmp_halftree") {
    HalfTreeCatalog cat;
    CHECK(cmp_halftree(rooted_path(2), rooted_path(3), cat) == std::strong_ordering::less);
    CHECK(cmp_halftree(rooted_path(3), cherry(), cat) == std::strong_ordering::less);

    // isomorphic half-trees with different labelings compare equal
    HalfTree relabeled = rooted_at(testutil::make_tree({{2, 0}, {2, 1}}), 2);
    CHECK(cmp_halftree(relabeled, cherry(), cat) == std::strong_ordering::equal);

    // strict total order over a small universe
    std::vector<HalfTree> all;
    for (int n = 1; n <= 6; ++n)
        for (const auto& h : list_halftrees(n, cat)) all.push_back(h);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            auto ij = cmp_halftree(all[i], all[j], cat);
            CHECK(sign(ij) == -sign(cmp_halftree(all[j], all[i], cat)));
            CHECK((ij == std::strong_ordering::equal) == (i == j));
        }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK(cmp_halftree(all[i], all[j], cat) == std::strong_ordering::less);

    // sorting the listing by cmp_halftree is a no-op; prime codes are
    // order-preserving
    for (size_t i = 0; i + 1 < all.size(); ++i)
        CHECK(cat.prime_of(cat.index_of(all[i])) < cat.prime_of(cat.index_of(all[i + 1])));
}

TEST_CASE("placement_valid enforces the tip rule") {
    HalfTreeCatalog cat;
    cat.ensure_order(3);
    int three_branched = cat.index_of(cherry());
    int one = cat.index_of(rooted_path(1));
    int two = cat.index_of(rooted_path(2));

    // branched order-3 appendix terminally against a bare path tip: the
    // appendix outranks the tip
    Placement bad;
    bad.backbone_order = 4;
    bad.slots[2] = {three_branched};
    CHECK_FALSE(placement_valid(bad, cat));

    // equivalent decoration through smaller appendices is the kept one
    Placement good;
    good.backbone_order = 4;
    good.slots[1] = {one};
    good.slots[2] = {two};
    CHECK(placement_valid(good, cat));

    // non-terminal branched appendix is unrestricted
    Placement tall;
    tall.backbone_order = 4;
    tall.slots[3] = {three_branched};
    CHECK(placement_valid(tall, cat));
}
