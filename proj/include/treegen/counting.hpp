#pragma once

#include <vector>

#include "treegen/bigint.hpp"

namespace treegen {

// Symmetric / asymmetric tallies of a set of decorated backbones.
struct SymCount {
    BigInt sigma = 0;
    BigInt alpha = 0;
    BigInt total() const { return sigma + alpha; }
    bool operator==(const SymCount&) const = default;
};

// Number of ways to append k free vertices directly to a half-backbone
// of order n; placement_ways(0, 0) == 0 by definition.
BigInt placement_ways(int k, int n);

// Ways to decorate the two halves of an even backbone with x and y
// identical appendices over z legal positions per half, counted as
// unordered pairs of halves.
BigInt glue_ways(int x, int y, int z);

// Legal side positions per half for a radius-r appendix on a backbone of
// order b: floor((b - 2r) / 2), clamped to zero.
int side_slots(int backbone, int radius);

// Trees obtained by appending k linear appendices of radius r to a
// backbone of order `backbone` while conserving its diameter; backbone >= 3.
BigInt count_equal_radius(int k, int r, int backbone);

// Direct (radius-1) appending; equals count_equal_radius(k, 1, backbone).
BigInt count_direct(int k, int backbone);

BigInt combine_cardinality(const SymCount& s, const SymCount& t);
SymCount combine_sigma(const SymCount& s, const SymCount& t);

// Symmetric members among side-only equal-radius decorations: zero for
// odd k, otherwise one mirrored placement per choice of half-load.
BigInt sigma_equal_radius(int k, int r, int backbone);

// Side-only equal-radius decorations with their symmetry split.
SymCount side_layer_sym(int count, int radius, int backbone);

// True iff every radius fits on the middle vertex of an odd backbone:
// max radius <= floor(backbone / 2). Vacuously true for no radii.
bool middle_filter(const std::vector<int>& radii, int backbone);

// Trees obtained by appending k free vertices as halves of linear graphs
// (all partitions of k into linear appendix radii) to a backbone of order
// `backbone`, diameter conserved.
BigInt count_linear_total(int k, int backbone);

}  // namespace treegen
