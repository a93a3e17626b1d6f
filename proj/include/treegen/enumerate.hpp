#pragma once

#include <functional>
#include <span>
#include <vector>

#include "treegen/catalog.hpp"
#include "treegen/counting.hpp"
#include "treegen/tree.hpp"

namespace treegen {

// A backbone with both halves decorated, plus the middle-vertex multiset
// for odd backbones (always empty for even ones). mirror_symmetric marks
// invariance under the reflection that swaps the two halves.
struct DecoratedBackbone {
    int backbone_order = 0;
    Placement left, right;      // spine_order == floor(backbone_order / 2)
    std::vector<int> middle;    // sorted catalog ids
    bool mirror_symmetric = false;

    Tree realize(const HalfTreeCatalog& cat) const;
    HalfTree left_half(const HalfTreeCatalog& cat) const { return treegen::realize(left, cat); }
    HalfTree right_half(const HalfTreeCatalog& cat) const { return treegen::realize(right, cat); }
    std::vector<HalfTree> middle_halves(const HalfTreeCatalog& cat) const;
};

// An ordered batch of decorated backbones with its symmetry tallies.
struct GeneratedSet {
    int backbone_order = 0;
    std::vector<DecoratedBackbone> members;
    SymCount sym;

    std::vector<Tree> trees(const HalfTreeCatalog& cat) const;
};

// Observer for the enumeration internals; used by tests to audit the
// symmetry arithmetic while the generator runs.
struct TraceSink {
    virtual void on_set(const GeneratedSet&) {}
    virtual void on_combine(const SymCount&, const SymCount&, const GeneratedSet& /*raw*/) {}
    virtual ~TraceSink() = default;
};

// Glues two batches of half placements into unordered pairs of halves.
// same_inputs marks the equal-load case: unordered pairs with repetition,
// diagonal pairs symmetric. Heights (spine orders) must agree.
GeneratedSet fuse(std::span<const Placement> left, std::span<const Placement> right,
                  bool same_inputs, const HalfTreeCatalog& cat);

// Overlays every s with every t on the shared backbone; an asymmetric
// pair contributes its two relative orientations. Counts follow the
// sigma/alpha product rule; overlays whose terminal substituents outrank
// their tips are dropped before emission. The two sets must decorate the
// same backbone with disjoint appendix classes.
GeneratedSet combine(const GeneratedSet& s, const GeneratedSet& t, const HalfTreeCatalog& cat);

// The backbone with the appendix set rooted at its middle vertex; the
// backbone order must be odd and every appendix radius at most half of it.
Tree attach_middle(int backbone_order, const AppendixSet& aset, HalfTreeCatalog& cat);

// The step that must emit t when enumerating trees of order n.
int step_of(const Tree& t, int n);

// Streams every unlabeled tree of order n exactly once, tagged with its
// step; step k carries the trees of edge-diameter n - k - 1.
void enumerate_trees(int n, HalfTreeCatalog& cat,
                     const std::function<void(int step, const Tree&)>& emit,
                     TraceSink* trace = nullptr);

std::vector<Tree> list_trees(int n);
std::vector<Tree> list_trees(int n, HalfTreeCatalog& cat);
std::vector<Tree> list_trees_step(int n, int k, HalfTreeCatalog& cat);

// Decorations of a backbone by k linear appendices of radius r (the
// generated counterpart of count_equal_radius), and the side-only slice.
GeneratedSet generate_equal_radius(int k, int r, int backbone, HalfTreeCatalog& cat);
GeneratedSet generate_equal_radius_sides(int k, int r, int backbone, HalfTreeCatalog& cat);

// Decorations of a backbone by k free vertices shaped into linear
// appendices in every way (counterpart of count_linear_total).
GeneratedSet generate_linear_total(int k, int backbone, HalfTreeCatalog& cat);

}  // namespace treegen
