#pragma once

#include <span>
#include <string>

#include "treegen/tree.hpp"

namespace treegen {

// Outcome of checking a generated batch against the oracle for one order.
struct VerifyReport {
    bool pass = false;
    size_t generated = 0;
    size_t expected = 0;
    // first divergent tree, when any; "extra" came from the generator,
    // otherwise the oracle holds a tree the generator missed
    bool divergent_is_extra = false;
    std::string divergent_edge_record;
    std::string divergent_graph6;
};

VerifyReport verify_against_oracle(int n, std::span<const Tree> generated);

}  // namespace treegen
