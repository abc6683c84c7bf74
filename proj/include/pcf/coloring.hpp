#pragma once

#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// Vertex happiness criterion: PCF wants a neighborhood color of multiplicity
// exactly one, ODD a color of odd multiplicity.
enum class Mode { PCF, ODD };

// Total map vertex -> color in [1, palette_size].
struct Coloring {
    std::vector<int> colors;
    int palette_size = 1;
};

int colors_used(const Coloring& c);

// Throws if c is not a total coloring of g within its palette.
void check_coloring(const Graph& g, const Coloring& c);

bool is_proper(const Graph& g, const Coloring& c);

// New coloring equal to c except u gets color i. Throws InvalidColor if i is
// outside the palette.
Coloring recolor_one(const Coloring& c, int u, int i);

// Each vertex, in the given order, takes the smallest positive color absent
// from its already-colored neighbors. `order` must be a permutation of the
// vertices (InvalidOrder otherwise).
Coloring greedy_proper_coloring(const Graph& g, const std::vector<int>& order);

}  // namespace pcf
