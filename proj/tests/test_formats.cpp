#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_util.hpp"
#include "treegen/formats.hpp"
#include "treegen/oracle.hpp"

using namespace treegen;

namespace {

// decoder kept deliberately separate from the encoder implementation
Tree decode_graph6(const std::string& s) {
    REQUIRE(!s.empty());
    int n = s[0] - 63;
    std::vector<char> bits;
    for (size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    size_t p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (p < bits.size() && bits[p]) edges.emplace_back(i, j);
    return Tree(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph6 encoding of known graphs") {
    CHECK(to_graph6(linear_tree(3)) == "Bg");
    CHECK(to_graph6(testutil::star(4)) == "Cs");
    CHECK(to_graph6(Tree(1, {})) == "@");
    CHECK_THROWS_AS(to_graph6(linear_tree(63)), std::invalid_argument);
}

TEST_CASE("graph6 round-trips through the independent decoder") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : oracle_free_tree_reps(n)) {
            Tree back = decode_graph6(to_graph6(t));
            CHECK(back.order() == t.order());
            CHECK(canonical_free(back) == canonical_free(t));
        }
}

TEST_CASE("edge records") {
    CHECK(edge_record(linear_tree(5)) == "5; 0-1,1-2,2-3,3-4");
    CHECK(edge_record(Tree(1, {})) == "1;");
    CHECK(edge_record(testutil::star(3)) == "3; 0-1,0-2");
}
