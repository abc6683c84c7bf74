#pragma once

#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// Witness sets for every vertex plus the core (non-isolated vertices with no
// witness). Computed in one pass with a shared color-count scratch array.
struct VerificationReport {
    bool is_proper = true;
    std::vector<std::vector<int>> witness_sets;  // sorted color lists
    std::vector<int> core;                       // sorted vertex list
    int colors_used = 0;

    // valid coloring of the chosen mode
    bool valid() const { return is_proper && core.empty(); }
};

// Colors of the stated multiplicity in c(N(v)); empty for isolated v.
std::vector<int> witnesses(const Graph& g, const Coloring& c, int v, Mode mode);

VerificationReport verify(const Graph& g, const Coloring& c, Mode mode);

}  // namespace pcf
