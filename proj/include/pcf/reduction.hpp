#pragma once

#include <functional>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

enum class LayerKind { ChromaticClass, Antichain };

// Ordered partition into independent layers; for ChromaticClass layers
// produced by layered_refinement every vertex of layer i>0 has a neighbor
// in layer i-1.
struct LayerPartition {
    std::vector<std::vector<int>> layers;
    LayerKind kind = LayerKind::ChromaticClass;
};

// Two-line representation: element u precedes v when u comes earlier on
// both lines; edges of the induced graph are exactly the comparable pairs.
struct PermutationRep {
    int n = 0;
    std::vector<int> pos1, pos2;

    bool less(int u, int v) const { return pos1[u] < pos1[v] && pos2[u] < pos2[v]; }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
};

void check_permutation_rep(const PermutationRep& rep);
Graph comparability_graph(const PermutationRep& rep);

struct ProductColoring {
    std::vector<int> base;  // layer index per vertex (0-based)
    std::vector<int> h1, h2;
    Coloring flattened;
};

// Colors the A side of the induced bipartite graph (a_side, b_side) with
// values in [1,t] so that every non-isolated B vertex is happy in the
// caller's mode; returns colors aligned with a_side.
using SideColorer =
    std::function<std::vector<int>(const Graph& g, const std::vector<int>& a_side,
                                   const std::vector<int>& b_side)>;

// Greedy recoloring along increasing base color; the resulting color classes
// are the layers. Throws ImproperBase when the base coloring is improper.
LayerPartition layered_refinement(const Graph& g, const Coloring& base);

// Product construction: h1 colors each layer against the next one, h2 fixes
// the bottom layer via its lowest neighboring layers, the flattened color is
// the (layer, h1, h2) triple ranked in first-use order. Palette is at most
// t^2 times the layer count.
ProductColoring compose_product_coloring(const Graph& g, const LayerPartition& layers,
                                         const SideColorer& side_colorer, int t, Mode mode);

// Antichain layers by iteratively removing the maxima; the last layer holds
// the maxima, and the layer count equals the longest chain.
LayerPartition antichain_partition(const PermutationRep& rep);

// Conflict-free coloring with at most 3 colors per antichain layer, i.e.
// at most 3 * (longest chain) colors in total.
Coloring pcf_color_permutation(const PermutationRep& rep);

// Conflict-free coloring of a graph whose neighborhoods are arcs of the
// given circular order, with at most 9 * (layer count) colors.
Coloring pcf_color_convex_round(const Graph& g, const std::vector<int>& circular_order);

// True when every neighborhood is an arc; the first violating vertex is
// reported through `violator` when non-null.
bool is_convex_round(const Graph& g, const std::vector<int>& circular_order,
                     int* violator = nullptr);

}  // namespace pcf
