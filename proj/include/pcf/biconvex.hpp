#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/biconvex_types.hpp"
#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

struct LayoutCheck {
    bool ok = true;
    int violator = -1;  // first vertex whose constraint fails
    std::string reason;
};

// Validates all BipartiteLayout invariants: the sides partition V, the
// orders are permutations of the sides, no edge runs inside a side, and
// every neighborhood is contiguous in the opposite order.
LayoutCheck check_layout(const BipartiteLayout& layout);

// Interval engine behind the 3-color one-sided construction: positions
// 0..m-1 host a family of intervals; returns colors 1..3 per position such
// that every interval contains some color exactly once. Asserts that each
// restricted family has at most two inclusion-minimal members.
std::vector<int> interval_witness_coloring(int m,
                                           const std::vector<std::pair<int, int>>& intervals);

// Colors side_a with {1,2,3} so that every non-isolated vertex of side_b
// sees some color exactly once. Entries for side_b are 0. Throws
// InvalidLayout when the layout is invalid.
std::vector<int> one_sided_witness_coloring(const BipartiteLayout& layout);

// 6-coloring: side_a from {1,2,3}, side_b from {4,5,6}, both via the
// one-sided construction; proper and conflict-free.
Coloring pcf_color_biconvex(const BipartiteLayout& layout);

// Throws NotNested when the family invariants fail.
void check_nested(const NestedFamily& family);

// 3-colors the ground set so every member holds one color an odd number of
// times and a different color an even number of times (zero counts as even
// where the member is too small to avoid it).
Coloring nested_three_coloring(const NestedFamily& family);

}  // namespace pcf
