#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcf/biconvex_types.hpp"
#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/reduction.hpp"

namespace pcf {

// A named graph together with whatever side structure the family carries.
struct FamilyInstance {
    Graph graph;
    std::string label;
    std::optional<BipartiteLayout> layout;
    std::optional<std::vector<int>> circular_order;
    std::optional<PermutationRep> permutation;
    std::optional<NestedFamily> nested;
};

// Bipartite graph on A = 2^k points plus one B vertex per non-empty
// interval of A; convex on the A side but not biconvex for k >= 2.
// B vertices are numbered by (left endpoint, length).
FamilyInstance build_gk(int k);

// Conflict-free coloring of build_gk(k) with at most k+2 colors, at most
// k+1 of them on A, built by halving A recursively.
Coloring pcf_color_gk(int k);

// Bipartite graph on A = 2^k points plus one B vertex per dyadic interval
// of length 2^i, 1 <= i <= k; the intervals form a nested family.
FamilyInstance build_hk(int k);

// Odd coloring of build_hk(k) with at most 4 colors: A via the nested
// 3-coloring, length-2 members dodge their two endpoint colors, the rest
// take color 4.
Coloring odd_color_hk(int k);

// Complete graph on 2n vertices minus the perfect matching {2i, 2i+1};
// comes with its circular order and a two-line representation.
FamilyInstance build_cpn(int n);

// Vertices are the edges of g in lexicographic order, adjacent when they
// share an endpoint. Always claw-free.
Graph line_graph(const Graph& g);

Graph random_graph(int n, double p, std::uint64_t seed);

// Random interval neighborhoods over A, rejection-sampled until the layout
// with both sides in canonical order passes the full biconvex check.
FamilyInstance random_biconvex(int n_a, int n_b, std::uint64_t seed, int max_attempts = 256);

FamilyInstance complete_bipartite(int m, int n);

FamilyInstance permutation_instance(const std::vector<int>& pos1, const std::vector<int>& pos2);

}  // namespace pcf
