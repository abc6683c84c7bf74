#include "pcf/subdivision.hpp"

#include <algorithm>
#include <string>

#include "pcf/errors.hpp"
#include "pcf/verify.hpp"

namespace pcf {

int SubdividedGraph::s_vertex(int u, int v) const {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    auto it = std::lower_bound(edge_vertex.begin(), edge_vertex.end(), key,
                               [](const auto& entry, const auto& k) { return entry.first < k; });
    if (it == edge_vertex.end() || it->first != key)
        throw InvalidEdge("(" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not an edge of the original graph");
    return it->second;
}

SubdividedGraph full_subdivision(const Graph& g) {
    SubdividedGraph sg;
    sg.original_count = g.vertex_count;
    auto es = g.edges();
    std::vector<std::pair<int, int>> new_edges;
    for (std::size_t e = 0; e < es.size(); ++e) {
        int s = g.vertex_count + static_cast<int>(e);
        sg.edge_vertex.push_back({es[e], s});
        new_edges.emplace_back(es[e].first, s);
        new_edges.emplace_back(es[e].second, s);
    }
    sg.graph = build_graph(new_edges, g.vertex_count + static_cast<int>(es.size()));
    return sg;
}

namespace {

void check_base(const Graph& g, const Coloring& c, int max_color) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count)
        throw InvalidBaseColoring("base coloring has wrong length");
    for (int v = 0; v < g.vertex_count; ++v)
        if (c.colors[v] < 1 || c.colors[v] > max_color)
            throw InvalidBaseColoring("base coloring uses colors outside [1," +
                                      std::to_string(max_color) + "]");
    for (int v = 0; v < g.vertex_count; ++v)
        for (int w : g.neighbors(v))
            if (w > v && c.colors[v] == c.colors[w])
                throw InvalidBaseColoring("base coloring is improper");
}

int the_color_in_3_avoiding(int a, int b) {
    for (int c = 1; c <= 3; ++c)
        if (c != a && c != b) return c;
    throw AlgorithmInvariantViolated("no color left in {1,2,3}");
}

}  // namespace

Coloring pcf4_subdivision(const Graph& g, const Coloring& c3) {
    check_base(g, c3, 3);
    SubdividedGraph sg = full_subdivision(g);
    auto es = g.edges();

    // greedy maximal matching in lexicographic edge order
    std::vector<char> covered(g.vertex_count, 0);
    std::vector<char> matched(es.size(), 0);
    for (std::size_t e = 0; e < es.size(); ++e)
        if (!covered[es[e].first] && !covered[es[e].second]) {
            matched[e] = 1;
            covered[es[e].first] = covered[es[e].second] = 1;
        }
    for (auto [u, v] : es)
        if (!covered[u] && !covered[v])
            throw AlgorithmInvariantViolated("uncovered vertices are not independent");

    Coloring c;
    c.colors.assign(sg.graph.vertex_count, 0);
    c.palette_size = 4;
    for (int v = 0; v < g.vertex_count; ++v) c.colors[v] = covered[v] ? c3.colors[v] : 4;

    // s-vertices of uncovered vertices: the lowest neighbor echoes the base color
    std::vector<int> echo(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v)
        if (!covered[v] && g.degree(v) > 0) echo[v] = g.neighbors(v).front();

    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        int s = g.vertex_count + static_cast<int>(e);
        if (matched[e]) {
            c.colors[s] = 4;
        } else if (!covered[u] || !covered[v]) {
            int x = covered[u] ? v : u;  // the uncovered endpoint
            int y = covered[u] ? u : v;
            c.colors[s] = (echo[x] == y) ? c3.colors[x]
                                         : the_color_in_3_avoiding(c3.colors[x], c3.colors[y]);
        } else {
            c.colors[s] = the_color_in_3_avoiding(c3.colors[u], c3.colors[v]);
        }
    }
    return c;
}

Coloring tree_extension(const SubdividedGraph& sg, const Coloring& c4,
                        const std::vector<std::pair<int, int>>& tree_edges,
                        const std::map<std::pair<int, int>, int>& nontree_colors, int root) {
    const int n = sg.original_count;
    if (root < 0 || root >= n) throw InvalidVertex("root out of range");
    Graph original = build_graph(
        [&] {
            std::vector<std::pair<int, int>> es;
            for (const auto& ev : sg.edge_vertex) es.push_back(ev.first);
            return es;
        }(),
        n);
    check_base(original, c4, 4);

    // the tree edges must span the original graph
    std::vector<std::vector<int>> tree_adj(n);
    std::vector<char> is_tree(sg.edge_vertex.size(), 0);
    for (auto [u, v] : tree_edges) {
        int s = sg.s_vertex(u, v);
        is_tree[s - n] = 1;
        tree_adj[std::min(u, v)].push_back(std::max(u, v));
        tree_adj[std::max(u, v)].push_back(std::min(u, v));
    }
    if (static_cast<int>(tree_edges.size()) != n - 1)
        throw NotSpanningTree("a spanning tree of " + std::to_string(n) + " vertices needs " +
                              std::to_string(n - 1) + " edges");
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{root};
        seen[root] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : tree_adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) throw NotSpanningTree("tree edges do not span the graph");
    }

    Coloring c;
    c.colors.assign(sg.graph.vertex_count, 0);
    c.palette_size = 4;
    for (int v = 0; v < n; ++v) c.colors[v] = c4.colors[v];

    for (const auto& [edge, s] : sg.edge_vertex) {
        if (is_tree[s - n]) continue;
        auto it = nontree_colors.find(edge);
        if (it == nontree_colors.end())
            throw InvalidColor("non-tree edge (" + std::to_string(edge.first) + "," +
                               std::to_string(edge.second) + ") has no color");
        int col = it->second;
        if (col < 1 || col > 4 || col == c4.colors[edge.first] || col == c4.colors[edge.second])
            throw InvalidColor("illegal color for the s-vertex of (" +
                               std::to_string(edge.first) + "," + std::to_string(edge.second) +
                               ")");
        c.colors[s] = col;
    }

    // peel leaves other than the root; the processed vertex keeps an odd
    // witness forever after
    std::vector<int> tree_degree(n, 0);
    for (int v = 0; v < n; ++v) tree_degree[v] = static_cast<int>(tree_adj[v].size());
    std::vector<char> done_edge(sg.edge_vertex.size(), 0);
    for (int processed = 0; processed + 1 < n; ++processed) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (v != root && tree_degree[v] == 1) leaf = v;
        if (leaf < 0) throw NotSpanningTree("tree peeling got stuck");
        int parent = -1;
        for (int w : tree_adj[leaf]) {
            int s = sg.s_vertex(leaf, w);
            if (!done_edge[s - n]) {
                parent = w;
                break;
            }
        }
        int s = sg.s_vertex(leaf, parent);
        int a = -1, b = -1;
        for (int col = 1; col <= 4; ++col) {
            if (col == c4.colors[leaf] || col == c4.colors[parent]) continue;
            (a < 0 ? a : b) = col;
        }
        int count_a = 0;
        for (int w : sg.graph.neighbors(leaf))
            if (c.colors[w] == a) ++count_a;
        c.colors[s] = (count_a % 2 == 0) ? a : b;

        done_edge[s - n] = 1;
        tree_degree[leaf]--;
        tree_degree[parent]--;
        tree_adj[leaf].erase(std::find(tree_adj[leaf].begin(), tree_adj[leaf].end(), parent));
        tree_adj[parent].erase(std::find(tree_adj[parent].begin(), tree_adj[parent].end(), leaf));
    }
    return c;
}

namespace {

struct SubColoring {
    std::vector<int> vertex_colors;                 // per original vertex
    std::map<std::pair<int, int>, int> edge_colors;  // per original edge, u < v
};

bool neighborhood_two_colored(const Graph& g, const std::vector<int>& c, int v) {
    int first = -1;
    for (int w : g.neighbors(v)) {
        if (first == -1) first = c[w];
        else if (c[w] != first) return true;
    }
    return false;
}

int find_usable_root(const Graph& g, const std::vector<int>& c, const std::vector<bool>& cut) {
    for (int v = 0; v < g.vertex_count; ++v)
        if (!cut[v] && neighborhood_two_colored(g, c, v)) return v;
    return -1;
}

SubColoring odd4_solve(const Graph& g, std::vector<int> c);

// spanning tree rooted at a non-cut vertex r, with r attached as a leaf
SubColoring odd4_direct(const Graph& g, const std::vector<int>& c, int r) {
    const int n = g.vertex_count;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<char> seen(n, 0);
    seen[r] = 1;
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (v != r) start = v;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                tree_edges.emplace_back(v, w);
                stack.push_back(w);
            }
    }
    int p = g.neighbors(r).front();
    tree_edges.emplace_back(p, r);

    int q = -1;
    for (int w : g.neighbors(r))
        if (c[w] != c[p]) {
            q = w;
            break;
        }
    if (q < 0 && g.degree(r) % 2 == 0)
        throw AlgorithmInvariantViolated(
            "root has a one-colored neighborhood and even degree; no witness possible here");

    std::vector<char> on_tree(n, 0);
    std::map<std::pair<int, int>, int> nontree;
    auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    std::map<std::pair<int, int>, char> tree_set;
    for (auto [u, v] : tree_edges) tree_set[key(u, v)] = 1;

    for (auto [u, v] : g.edges()) {
        if (tree_set.count({u, v})) continue;
        int col;
        if (q >= 0 && ((u == r && v == q) || (v == r && u == q))) {
            col = c[p];
        } else if (u == r || v == r) {
            int x = (u == r) ? v : u;
            col = 0;
            for (int t = 1; t <= 4; ++t)
                if (t != c[r] && t != c[x] && (q < 0 || t != c[p])) {
                    col = t;
                    break;
                }
            if (col == 0)
                throw AlgorithmInvariantViolated("no legal color for an s-vertex at the root");
        } else {
            col = 0;
            for (int t = 1; t <= 4; ++t)
                if (t != c[u] && t != c[v]) {
                    col = t;
                    break;
                }
        }
        nontree[{u, v}] = col;
    }

    SubdividedGraph sg = full_subdivision(g);
    Coloring ext = tree_extension(sg, Coloring{c, 4}, tree_edges, nontree, r);
    SubColoring out;
    out.vertex_colors.assign(ext.colors.begin(), ext.colors.begin() + n);
    for (const auto& [edge, s] : sg.edge_vertex) out.edge_colors[edge] = ext.colors[s];
    return out;
}

SubColoring odd4_recurse_blocks(const Graph& g, const std::vector<int>& c) {
    auto cut = cut_vertices(g);
    auto block_list = blocks(g);

    // leaf block: exactly one cut vertex
    std::vector<int> block_verts;
    int r = -1;
    for (const auto& blk : block_list) {
        int cuts = 0, the_cut = -1;
        for (int v : blk)
            if (cut[v]) {
                ++cuts;
                the_cut = v;
            }
        if (cuts == 1) {
            block_verts = blk;
            r = the_cut;
            break;
        }
    }
    if (r < 0) throw AlgorithmInvariantViolated("no leaf block in a graph with cut vertices");

    std::vector<int> h_verts;
    std::vector<char> in_block(g.vertex_count, 0);
    for (int v : block_verts) in_block[v] = 1;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!in_block[v] || v == r) h_verts.push_back(v);

    std::vector<int> h_index;
    Graph h = induced_subgraph(g, h_verts, &h_index);
    std::vector<int> hc;
    for (int v : h_verts) hc.push_back(c[v]);
    SubColoring inner = odd4_solve(h, hc);

    // relabel so the recursive coloring agrees with c at the cut vertex
    int want = c[r], have = inner.vertex_colors[h_index[r]];
    if (want != have) {
        for (int& col : inner.vertex_colors) col = col == want ? have : (col == have ? want : col);
        for (auto& [edge, col] : inner.edge_colors) col = col == want ? have : (col == have ? want : col);
    }

    SubColoring out;
    out.vertex_colors.assign(g.vertex_count, 0);
    for (std::size_t i = 0; i < h_verts.size(); ++i)
        out.vertex_colors[h_verts[i]] = inner.vertex_colors[i];
    for (const auto& [edge, col] : inner.edge_colors)
        out.edge_colors[{h_verts[edge.first], h_verts[edge.second]}] = col;

    // odd witness of r inside the solved part
    std::vector<int> counts(5, 0);
    for (int w : h.neighbors(h_index[r])) {
        auto key = std::make_pair(std::min(h_index[r], w), std::max(h_index[r], w));
        counts[inner.edge_colors.at(key)]++;
    }
    int b = 0;
    for (int col = 1; col <= 4; ++col)
        if (counts[col] % 2 == 1) {
            b = col;
            break;
        }
    if (b == 0) throw AlgorithmInvariantViolated("cut vertex lost its witness in the recursion");

    // block coloring: the cut vertex's block neighbors move to color b
    std::vector<int> bc;
    for (int v : block_verts) {
        if (v == r) bc.push_back(c[r]);
        else if (g.has_edge(r, v)) bc.push_back(b);
        else bc.push_back(c[v]);
    }
    std::vector<int> b_index;
    Graph bg = induced_subgraph(g, block_verts, &b_index);
    for (int i = 0; i < bg.vertex_count; ++i)
        for (int j : bg.neighbors(i))
            if (j > i && bc[i] == bc[j])
                throw AlgorithmInvariantViolated("block recoloring became improper");

    // extension over the block with root r: only r may lack a witness there
    std::vector<std::pair<int, int>> tree_edges;
    {
        std::vector<char> seen(bg.vertex_count, 0);
        std::vector<int> stack{b_index[r]};
        seen[b_index[r]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : bg.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    tree_edges.emplace_back(v, w);
                    stack.push_back(w);
                }
        }
    }
    std::map<std::pair<int, int>, int> nontree;
    std::map<std::pair<int, int>, char> tree_set;
    for (auto [u, v] : tree_edges) tree_set[{std::min(u, v), std::max(u, v)}] = 1;
    for (auto [u, v] : bg.edges()) {
        if (tree_set.count({u, v})) continue;
        for (int t = 1; t <= 4; ++t)
            if (t != bc[u] && t != bc[v]) {
                nontree[{u, v}] = t;
                break;
            }
    }
    SubdividedGraph sbg = full_subdivision(bg);
    Coloring ext = tree_extension(sbg, Coloring{bc, 4}, tree_edges, nontree, b_index[r]);
    for (std::size_t i = 0; i < block_verts.size(); ++i)
        out.vertex_colors[block_verts[i]] = ext.colors[i];
    for (const auto& [edge, s] : sbg.edge_vertex) {
        int gu = block_verts[edge.first], gv = block_verts[edge.second];
        out.edge_colors[{std::min(gu, gv), std::max(gu, gv)}] = ext.colors[s];
    }
    return out;
}

SubColoring odd4_solve(const Graph& g, std::vector<int> c) {
    SubColoring out;
    if (g.edge_count() == 0) {
        out.vertex_colors = c;
        return out;
    }
    auto cut = cut_vertices(g);
    int r = find_usable_root(g, c, cut);
    if (r >= 0) return odd4_direct(g, c, r);

    // try single-vertex recolorings before falling back to block recursion
    for (int w = 0; w < g.vertex_count; ++w) {
        std::vector<char> banned(5, 0);
        banned[c[w]] = 1;
        for (int x : g.neighbors(w)) banned[c[x]] = 1;
        for (int t = 1; t <= 4; ++t) {
            if (banned[t]) continue;
            std::vector<int> c2 = c;
            c2[w] = t;
            int r2 = find_usable_root(g, c2, cut);
            if (r2 >= 0) return odd4_direct(g, c2, r2);
        }
    }
    bool has_cut = std::find(cut.begin(), cut.end(), true) != cut.end();
    if (has_cut) return odd4_recurse_blocks(g, c);

    // single block whose every proper recoloring keeps all neighborhoods
    // one-colored: only K2 qualifies, where the lone s-vertex suffices
    return odd4_direct(g, c, 0);
}

}  // namespace

Coloring odd4_subdivision(const Graph& g, const Coloring& c4) {
    check_base(g, c4, 4);
    if (!is_connected(g))
        throw InvalidParameter("graph must be connected; color components separately");
    SubColoring solved = odd4_solve(g, c4.colors);

    SubdividedGraph sg = full_subdivision(g);
    Coloring c;
    c.colors.assign(sg.graph.vertex_count, 0);
    c.palette_size = 4;
    for (int v = 0; v < g.vertex_count; ++v) c.colors[v] = solved.vertex_colors[v];
    for (const auto& [edge, s] : sg.edge_vertex) c.colors[s] = solved.edge_colors.at(edge);

    auto rep = verify(sg.graph, c, Mode::ODD);
    if (!rep.valid())
        throw AlgorithmInvariantViolated("odd 4-coloring of the subdivision failed verification");
    return c;
}

}  // namespace pcf
