#include "treegen/verify.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

#include "treegen/formats.hpp"
#include "treegen/oracle.hpp"

namespace treegen {

VerifyReport verify_against_oracle(int n, std::span<const Tree> generated) {
    VerifyReport report;
    std::vector<CanonicalForm> got;
    got.reserve(generated.size());
    for (const Tree& t : generated) got.push_back(canonical_free(t));
    std::sort(got.begin(), got.end());
    auto expected = oracle_free_trees(n);
    report.generated = got.size();
    report.expected = expected.size();
    if (got == expected) {
        report.pass = true;
        return report;
    }
    std::vector<CanonicalForm> extra, missing;
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                        std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                        std::back_inserter(missing));
    auto record = [&report](const Tree& t) {
        report.divergent_edge_record = edge_record(t);
        report.divergent_graph6 = to_graph6(t);
    };
    if (!extra.empty()) {
        report.divergent_is_extra = true;
        for (const Tree& t : generated)
            if (canonical_free(t) == extra.front()) {
                record(t);
                break;
            }
    } else {
        for (const Tree& t : oracle_free_tree_reps(n))
            if (canonical_free(t) == missing.front()) {
                record(t);
                break;
            }
    }
    return report;
}

}  // namespace treegen
