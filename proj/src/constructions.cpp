#include "pcf/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pcf/biconvex.hpp"
#include "pcf/errors.hpp"
#include "pcf/rng.hpp"
#include "pcf/verify.hpp"

namespace pcf {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidParameter(msg);
}

BipartiteLayout natural_layout(const Graph& g, int n_a) {
    BipartiteLayout layout;
    layout.graph = g;
    for (int v = 0; v < n_a; ++v) layout.side_a.push_back(v);
    for (int v = n_a; v < g.vertex_count; ++v) layout.side_b.push_back(v);
    layout.order_a = layout.side_a;
    layout.order_b = layout.side_b;
    return layout;
}

}  // namespace

FamilyInstance build_gk(int k) {
    require(k >= 1, "k must be at least 1");
    require(k <= 8, "k above 8 is past desk scale");
    const int m = 1 << k;
    std::vector<std::pair<int, int>> edges;
    int b = m;
    for (int l = 0; l < m; ++l)
        for (int r = l; r < m; ++r) {
            for (int a = l; a <= r; ++a) edges.emplace_back(a, b);
            ++b;
        }
    FamilyInstance inst;
    inst.graph = build_graph(edges, b);
    inst.label = "G_" + std::to_string(k);
    inst.layout = natural_layout(inst.graph, m);
    return inst;
}

namespace {

// B vertex of the interval [l, r] inside build_gk(k): intervals are listed
// by (left endpoint, length)
int gk_interval_vertex(int m, int l, int r) {
    return m + l * m - l * (l - 1) / 2 + (r - l);
}

// swap two color labels on A vertices in [lo, hi) and on the B vertices of
// the intervals inside [lo, hi)
void gk_swap_colors(std::vector<int>& colors, int m, int lo, int hi, int x, int y) {
    if (x == y) return;
    auto flip = [&](int v) {
        if (colors[v] == x)
            colors[v] = y;
        else if (colors[v] == y)
            colors[v] = x;
    };
    for (int a = lo; a < hi; ++a) flip(a);
    for (int l = lo; l < hi; ++l)
        for (int r = l; r < hi; ++r) flip(gk_interval_vertex(m, l, r));
}

// colors the sub-instance spanned by A positions [lo, hi) at level `level`;
// keeps the color of the first A vertex unique within its half so the next
// level up can promote it
void gk_color_range(std::vector<int>& colors, int m, int lo, int hi, int level) {
    if (level == 1) {
        colors[lo] = 1;
        colors[lo + 1] = 2;
        colors[gk_interval_vertex(m, lo, lo)] = 2;
        colors[gk_interval_vertex(m, lo + 1, lo + 1)] = 1;
        colors[gk_interval_vertex(m, lo, lo + 1)] = 3;
        return;
    }
    const int mid = lo + (hi - lo) / 2;
    gk_color_range(colors, m, lo, mid, level - 1);
    gk_color_range(colors, m, mid, hi, level - 1);

    gk_swap_colors(colors, m, mid, hi, colors[mid], level + 1);

    std::vector<char> used(level + 2, 0);
    for (int a = mid; a < hi; ++a)
        if (colors[a] <= level + 1) used[colors[a]] = 1;
    int fresh = 0;
    for (int t = 1; t <= level; ++t)
        if (!used[t]) {
            fresh = t;
            break;
        }
    if (fresh == 0)
        throw AlgorithmInvariantViolated("no spare color for the left half of the range");
    gk_swap_colors(colors, m, lo, mid, colors[lo], fresh);

    for (int l = lo; l < mid; ++l)
        for (int r = mid; r < hi; ++r) colors[gk_interval_vertex(m, l, r)] = level + 2;
}

}  // namespace

Coloring pcf_color_gk(int k) {
    require(k >= 1, "k must be at least 1");
    require(k <= 8, "k above 8 is past desk scale");
    const int m = 1 << k;
    Coloring c;
    c.colors.assign(m + m * (m + 1) / 2, 0);
    c.palette_size = k + 2;
    gk_color_range(c.colors, m, 0, m, k);
    return c;
}

FamilyInstance build_hk(int k) {
    require(k >= 1, "k must be at least 1");
    require(k <= 16, "k above 16 is past desk scale");
    const int m = 1 << k;
    std::vector<std::pair<int, int>> edges;
    NestedFamily family;
    family.ground_size = m;
    int b = m;
    // intervals listed by (left endpoint, length), lengths 2..2^k dyadic
    for (int l = 0; l < m; ++l)
        for (int level = 1; level <= k; ++level) {
            int len = 1 << level;
            if (l % len != 0) continue;
            std::vector<int> member;
            for (int a = l; a < l + len; ++a) {
                edges.emplace_back(a, b);
                member.push_back(a);
            }
            family.members.push_back(std::move(member));
            ++b;
        }
    FamilyInstance inst;
    inst.graph = build_graph(edges, b);
    inst.label = "H_" + std::to_string(k);
    inst.layout = natural_layout(inst.graph, m);
    inst.nested = family;
    return inst;
}

Coloring odd_color_hk(int k) {
    FamilyInstance inst = build_hk(k);
    const int m = 1 << k;
    Coloring ground = nested_three_coloring(*inst.nested);
    Coloring c;
    c.colors.assign(inst.graph.vertex_count, 0);
    c.palette_size = 4;
    for (int a = 0; a < m; ++a) c.colors[a] = ground.colors[a];
    for (int b = m; b < inst.graph.vertex_count; ++b) {
        const auto& nb = inst.graph.neighbors(b);
        if (nb.size() == 2) {
            int u = c.colors[nb[0]], v = c.colors[nb[1]];
            for (int t = 1; t <= 3; ++t)
                if (t != u && t != v) {
                    c.colors[b] = t;
                    break;
                }
        } else {
            c.colors[b] = 4;
        }
    }
    return c;
}

FamilyInstance build_cpn(int n) {
    require(n >= 2, "n must be at least 2");
    const int size = 2 * n;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < size; ++u)
        for (int v = u + 1; v < size; ++v)
            if (!(u / 2 == v / 2)) edges.emplace_back(u, v);
    FamilyInstance inst;
    inst.graph = build_graph(edges, size);
    inst.label = "CP_" + std::to_string(n);
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    inst.circular_order = order;
    PermutationRep rep;
    rep.n = size;
    rep.pos1 = order;
    rep.pos2.assign(size, 0);
    for (int i = 0; i < n; ++i) {
        rep.pos2[2 * i] = 2 * i + 1;
        rep.pos2[2 * i + 1] = 2 * i;
    }
    inst.permutation = rep;
    return inst;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    const int m = static_cast<int>(es.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    return build_graph(edges, m);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    require(n >= 0, "n must be non-negative");
    require(p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return build_graph(edges, n);
}

FamilyInstance random_biconvex(int n_a, int n_b, std::uint64_t seed, int max_attempts) {
    require(n_a >= 1 && n_b >= 0, "need a non-empty A side");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> intervals(n_b);
        for (auto& [l, r] : intervals) {
            l = rng.below_int(n_a);
            r = l + rng.below_int(n_a - l);
        }
        std::sort(intervals.begin(), intervals.end());
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < n_b; ++b)
            for (int a = intervals[b].first; a <= intervals[b].second; ++a)
                edges.emplace_back(a, n_a + b);
        Graph g = build_graph(edges, n_a + n_b);
        BipartiteLayout layout = natural_layout(g, n_a);
        if (check_layout(layout).ok) {
            FamilyInstance inst;
            inst.graph = g;
            inst.label = "random_biconvex(" + std::to_string(n_a) + "," + std::to_string(n_b) +
                         ";seed=" + std::to_string(seed) + ")";
            inst.layout = layout;
            return inst;
        }
    }
    throw GenerationFailed("no biconvex instance after " + std::to_string(max_attempts) +
                           " attempts");
}

FamilyInstance complete_bipartite(int m, int n) {
    require(m >= 0 && n >= 0, "sides must be non-negative");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) edges.emplace_back(a, m + b);
    FamilyInstance inst;
    inst.graph = build_graph(edges, m + n);
    inst.label = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
    inst.layout = natural_layout(inst.graph, m);
    std::vector<int> order(m + n);
    std::iota(order.begin(), order.end(), 0);
    inst.circular_order = order;  // both sides consecutive
    return inst;
}

FamilyInstance permutation_instance(const std::vector<int>& pos1, const std::vector<int>& pos2) {
    PermutationRep rep;
    rep.n = static_cast<int>(pos1.size());
    rep.pos1 = pos1;
    rep.pos2 = pos2;
    check_permutation_rep(rep);
    FamilyInstance inst;
    inst.graph = comparability_graph(rep);
    inst.label = "permutation(n=" + std::to_string(rep.n) + ")";
    inst.permutation = rep;
    return inst;
}

}  // namespace pcf
