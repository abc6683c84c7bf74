#include "pcf/graph.hpp"

#include <algorithm>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adjacency) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (const auto& a : adjacency) total += static_cast<long long>(a.size());
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count; ++u)
        for (int v : adjacency[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count)
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(vertex_count) + ")");
}

Graph build_graph(const std::vector<std::pair<int, int>>& edge_list, int n) {
    if (n < 0) throw InvalidParameter("vertex count must be non-negative");
    Graph g;
    g.vertex_count = n;
    g.adjacency.assign(n, {});
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidEdge("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* index_of) {
    std::vector<int> idx(g.vertex_count, -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        g.check_vertex(vertices[i]);
        if (idx[vertices[i]] != -1) throw InvalidParameter("duplicate vertex in subgraph set");
        idx[vertices[i]] = i;
    }
    Graph h;
    h.vertex_count = static_cast<int>(vertices.size());
    h.adjacency.assign(h.vertex_count, {});
    for (int i = 0; i < h.vertex_count; ++i) {
        for (int w : g.neighbors(vertices[i]))
            if (idx[w] != -1) h.adjacency[i].push_back(idx[w]);
        std::sort(h.adjacency[i].begin(), h.adjacency[i].end());
    }
    if (index_of) *index_of = std::move(idx);
    return h;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count <= 1) return true;
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == g.vertex_count;
}

namespace {

// Iterative Hopcroft-Tarjan; fills cut flags and block vertex sets.
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<bool> cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> block_list;
    int timer = 0;

    explicit BlockDfs(const Graph& g_)
        : g(g_), disc(g_.vertex_count, -1), low(g_.vertex_count, 0), cut(g_.vertex_count, false) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        for (;;) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        block_list.push_back(std::move(verts));
    }

    void run(int root) {
        struct Frame {
            int v, parent;
            std::size_t next = 0;
            int children = 0;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.neighbors(f.v).size()) {
                int w = g.neighbors(f.v)[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent, children = f.children;
                stack.pop_back();
                if (parent != -1) {
                    Frame& pf = stack.back();
                    pf.children++;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        if (pf.parent != -1 || pf.children > 1) cut[parent] = true;
                        pop_block(parent, v);
                    }
                } else {
                    (void)children;
                }
            }
        }
    }
};

}  // namespace

std::vector<bool> cut_vertices(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count; ++v)
        if (dfs.disc[v] == -1) dfs.run(v);
    return dfs.cut;
}

std::vector<std::vector<int>> blocks(const Graph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count; ++v)
        if (dfs.disc[v] == -1) dfs.run(v);
    std::sort(dfs.block_list.begin(), dfs.block_list.end());
    return dfs.block_list;
}

}  // namespace pcf
