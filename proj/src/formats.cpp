#include "treegen/formats.hpp"

#include <set>
#include <stdexcept>

namespace treegen {

std::string to_graph6(const Tree& t) {
    const int n = t.order();
    if (n > 62) throw std::invalid_argument("to_graph6: order above 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    std::set<std::pair<int, int>> edges(t.edges().begin(), t.edges().end());
    std::vector<char> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(edges.count({i, j}) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (size_t p = 0; p < bits.size(); p += 6) {
        int value = 0;
        for (int i = 0; i < 6; ++i) value = (value << 1) | bits[p + i];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

std::string edge_record(const Tree& t) {
    std::string out = std::to_string(t.order()) + ";";
    bool first = true;
    for (auto [u, v] : t.edges()) {
        out += first ? " " : ",";
        first = false;
        out += std::to_string(u) + "-" + std::to_string(v);
    }
    return out;
}

}  // namespace treegen
