#pragma once

#include <utility>
#include <vector>

namespace pcf {

// Undirected simple graph over dense 0-based vertices. Neighbor lists are
// kept sorted ascending and symmetric; no loops, no parallel edges.
struct Graph {
    int vertex_count = 0;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency[v]; }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
    void check_vertex(int v) const;                  // throws InvalidVertex
};

// Builds the graph from an edge list; duplicates are silently merged.
// Throws InvalidEdge for out-of-range endpoints and SelfLoop for (v,v).
Graph build_graph(const std::vector<std::pair<int, int>>& edge_list, int n);

// Induced subgraph on `vertices` (kept in the given order; ids are remapped
// to 0..k-1). The mapping old->new is written to `index_of` when non-null.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* index_of = nullptr);

bool is_connected(const Graph& g);

// Articulation points of g (false for isolated vertices).
std::vector<bool> cut_vertices(const Graph& g);

// Vertex sets of the biconnected blocks (bridges count as 2-vertex blocks),
// each sorted ascending, the list sorted lexicographically.
std::vector<std::vector<int>> blocks(const Graph& g);

}  // namespace pcf
