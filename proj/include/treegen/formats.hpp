#pragma once

#include <string>

#include "treegen/tree.hpp"

namespace treegen {

// graph6: byte n+63, then the upper-triangle adjacency bits in
// column-major order, 6 bits per byte, each +63. Orders up to 62 only.
std::string to_graph6(const Tree& t);

// "n; u-v,u-v,..." with 0-based vertices; no edges prints just "n;".
std::string edge_record(const Tree& t);

}  // namespace treegen
