#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

// Every edge uv replaced by a path u - s_uv - v; original vertices keep
// their ids, s-vertices follow at n, n+1, ... in sorted edge order.
struct SubdividedGraph {
    Graph graph;
    int original_count = 0;
    std::vector<std::pair<std::pair<int, int>, int>> edge_vertex;  // ((u,v), s_uv), u < v

    int s_vertex(int u, int v) const;  // throws InvalidEdge when uv is not an edge
};

SubdividedGraph full_subdivision(const Graph& g);

// Conflict-free 4-coloring of S(g) from a proper coloring of g with colors
// in {1,2,3}: a greedy maximal matching gets color 4 on its s-vertices,
// uncovered vertices get color 4 themselves with one incident s-vertex
// echoing their base color.
Coloring pcf4_subdivision(const Graph& g, const Coloring& c3);

// Extends a proper coloring of the originals plus a legal coloring of the
// non-tree s-vertices to all of S(g) by iterated leaf removal; every vertex
// except possibly `root` ends up with an odd witness.
Coloring tree_extension(const SubdividedGraph& sg, const Coloring& c4,
                        const std::vector<std::pair<int, int>>& tree_edges,
                        const std::map<std::pair<int, int>, int>& nontree_colors, int root);

// Odd 4-coloring of S(g) for connected g with a proper coloring in
// {1,..,4}: a spanning tree rooted at a non-cut vertex with a two-colored
// neighborhood when one exists, otherwise recursion over leaf blocks.
Coloring odd4_subdivision(const Graph& g, const Coloring& c4);

}  // namespace pcf
