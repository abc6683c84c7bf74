#pragma once

#include <string>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// Bipartition (A,B) with linear orders on both sides under which every
// vertex of one side sees an interval of the other.
struct BipartiteLayout {
    Graph graph;
    std::vector<int> side_a, side_b;
    std::vector<int> order_a, order_b;
};

// Swaps the roles of the two sides.
BipartiteLayout swapped(const BipartiteLayout& layout);

// Subsets of a ground set in which intersecting members are comparable by
// inclusion. Members are stored as sorted index lists.
struct NestedFamily {
    int ground_size = 0;
    std::vector<std::vector<int>> members;
};

}  // namespace pcf
