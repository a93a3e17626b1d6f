// treegen: list unlabeled trees of a given order, evaluate the counting
// formulas, and verify the generator against the brute-force oracle.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treegen/catalog.hpp"
#include "treegen/counting.hpp"
#include "treegen/enumerate.hpp"
#include "treegen/formats.hpp"
#include "treegen/verify.hpp"

namespace {

constexpr int kMaxOrder = 16;

int oracle_cap() {
    if (const char* env = std::getenv("TREEGEN_ORACLE_CAP")) {
        int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return kMaxOrder;
}

int cmd_list(int n, const std::string& format, int step) {
    if (n < 1 || n > kMaxOrder) {
        std::cerr << "error: order must be between 1 and " << kMaxOrder << "\n";
        return 2;
    }
    treegen::HalfTreeCatalog cat;
    long long count = 0;
    treegen::enumerate_trees(n, cat, [&](int k, const treegen::Tree& t) {
        if (step >= 0 && k != step) return;
        ++count;
        if (format == "graph6")
            std::cout << treegen::to_graph6(t) << "\n";
        else
            std::cout << treegen::edge_record(t) << "\n";
    });
    if (format != "graph6") std::cout << "# count=" << count << "\n";
    return 0;
}

int cmd_count(int n, bool by_diameter) {
    if (n < 1 || n > kMaxOrder) {
        std::cerr << "error: order must be between 1 and " << kMaxOrder << "\n";
        return 2;
    }
    treegen::HalfTreeCatalog cat;
    long long total = 0;
    std::map<int, long long> per_diam;
    treegen::enumerate_trees(n, cat, [&](int, const treegen::Tree& t) {
        ++total;
        if (by_diameter) ++per_diam[treegen::diameter(t)];
    });
    std::cout << total << "\n";
    if (by_diameter)
        for (auto it = per_diam.rbegin(); it != per_diam.rend(); ++it)
            std::cout << it->first << ": " << it->second << "\n";
    return 0;
}

int cmd_verify(int n_max) {
    const int cap = oracle_cap();
    if (n_max < 1 || n_max > cap) {
        std::cerr << "error: verify limit must be between 1 and the oracle cap (" << cap << ")\n";
        return 2;
    }
    treegen::HalfTreeCatalog cat;
    bool all_ok = true;
    for (int n = 1; n <= n_max; ++n) {
        auto generated = treegen::list_trees(n, cat);
        auto report = treegen::verify_against_oracle(n, generated);
        if (report.pass) {
            std::cout << "n=" << n << ": PASS\n";
            continue;
        }
        all_ok = false;
        std::cout << "n=" << n << ": FAIL (generated " << report.generated << ", oracle "
                  << report.expected << ")\n";
        const char* kind = report.divergent_is_extra ? "extra" : "missing";
        std::cout << kind << ": " << report.divergent_edge_record << "\n";
        std::cout << kind << "(graph6): " << report.divergent_graph6 << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_halftrees(int n) {
    if (n < 1 || n > kMaxOrder) {
        std::cerr << "error: order must be between 1 and " << kMaxOrder << "\n";
        return 2;
    }
    treegen::HalfTreeCatalog cat;
    auto listing = treegen::list_halftrees(n, cat);
    for (const auto& h : listing) {
        std::cout << "nu=" << treegen::prime_code(h, cat) << "; "
                  << treegen::edge_record(treegen::to_tree(h)) << "\n";
    }
    std::cout << "# count=" << listing.size() << "\n";
    return 0;
}

int cmd_formulas(int k, int r, int n) {
    if (k < 1 || r < 1 || n < 3 || n > kMaxOrder || k + n > 2 * kMaxOrder) {
        std::cerr << "error: need k >= 1, r >= 1, 3 <= n <= " << kMaxOrder << "\n";
        return 2;
    }
    treegen::HalfTreeCatalog cat;
    const int slots = treegen::side_slots(n, r);
    std::cout << "side_slots(r=" << r << ", n=" << n << ") = " << slots << "\n";
    std::cout << "placement_ways(" << k << ", " << slots << ") = "
              << treegen::placement_ways(k, slots) << "\n";
    auto formula_eq = treegen::count_equal_radius(k, r, n);
    auto generated_eq = treegen::generate_equal_radius(k, r, n, cat).members.size();
    std::cout << "count_equal_radius(" << k << ", " << r << ", " << n << ") = " << formula_eq
              << "\n";
    std::cout << "generated_equal_radius(" << k << ", " << r << ", " << n
              << ") = " << generated_eq << "\n";
    auto formula_lin = treegen::count_linear_total(k, n);
    auto generated_lin = treegen::generate_linear_total(k, n, cat).members.size();
    std::cout << "count_linear_total(" << k << ", " << n << ") = " << formula_lin << "\n";
    std::cout << "generated_linear_total(" << k << ", " << n << ") = " << generated_lin << "\n";
    bool agree = formula_eq == treegen::BigInt(generated_eq) &&
                 formula_lin == treegen::BigInt(generated_lin);
    std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isomorph-free generation of unlabeled trees"};
    app.require_subcommand(1);

    int n = 0, step = -1, r = 1, k = 1;
    std::string format = "edge-list";
    bool by_diameter = false;

    auto* list = app.add_subcommand("list", "stream every tree of order n");
    list->add_option("n", n, "tree order")->required();
    list->add_option("--format", format, "edge-list or graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
    list->add_option("--step", step, "only trees of generation step k");

    auto* count = app.add_subcommand("count", "count trees of order n via the generator");
    count->add_option("n", n, "tree order")->required();
    count->add_flag("--by-diameter", by_diameter, "per edge-diameter breakdown");

    auto* verify = app.add_subcommand("verify", "compare the generator against the oracle");
    verify->add_option("n_max", n, "verify all orders up to n_max")->required();

    auto* halftrees = app.add_subcommand("halftrees", "stream every half-tree of order n");
    halftrees->add_option("n", n, "half-tree order")->required();

    auto* formulas = app.add_subcommand("formulas", "counting formulas vs generated sets");
    formulas->add_option("--k", k, "number of appendices")->required();
    formulas->add_option("--r", r, "appendix radius")->required();
    formulas->add_option("--n", n, "backbone order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list(n, format, step);
        if (count->parsed()) return cmd_count(n, by_diameter);
        if (verify->parsed()) return cmd_verify(n);
        if (halftrees->parsed()) return cmd_halftrees(n);
        if (formulas->parsed()) return cmd_formulas(k, r, n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
