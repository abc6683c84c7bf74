#include "pcf/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "pcf/biconvex.hpp"
#include "pcf/errors.hpp"
#include "pcf/verify.hpp"

namespace pcf {

void check_permutation_rep(const PermutationRep& rep) {
    if (rep.n < 0) throw InvalidParameter("n must be non-negative");
    auto check_perm = [&](const std::vector<int>& p, const char* name) {
        if (static_cast<int>(p.size()) != rep.n)
            throw InvalidParameter(std::string(name) + " has wrong length");
        std::vector<char> seen(rep.n, 0);
        for (int x : p) {
            if (x < 0 || x >= rep.n || seen[x])
                throw InvalidParameter(std::string(name) + " is not a permutation");
            seen[x] = 1;
        }
    };
    check_perm(rep.pos1, "pos1");
    check_perm(rep.pos2, "pos2");
}

Graph comparability_graph(const PermutationRep& rep) {
    check_permutation_rep(rep);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < rep.n; ++u)
        for (int v = u + 1; v < rep.n; ++v)
            if (rep.comparable(u, v)) edges.emplace_back(u, v);
    return build_graph(edges, rep.n);
}

LayerPartition layered_refinement(const Graph& g, const Coloring& base) {
    check_coloring(g, base);
    if (!is_proper(g, base)) throw ImproperBase("base coloring is improper");
    std::vector<int> order(g.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return base.colors[a] < base.colors[b]; });
    Coloring refined = greedy_proper_coloring(g, order);
    LayerPartition part;
    part.kind = LayerKind::ChromaticClass;
    part.layers.assign(refined.palette_size, {});
    for (int v = 0; v < g.vertex_count; ++v) part.layers[refined.colors[v] - 1].push_back(v);
    while (!part.layers.empty() && part.layers.back().empty()) part.layers.pop_back();
    return part;
}

namespace {

void check_layers(const Graph& g, const LayerPartition& part) {
    std::vector<int> layer_of(g.vertex_count, -1);
    for (std::size_t i = 0; i < part.layers.size(); ++i)
        for (int v : part.layers[i]) {
            g.check_vertex(v);
            if (layer_of[v] != -1) throw InvalidParameter("layers are not disjoint");
            layer_of[v] = static_cast<int>(i);
        }
    for (int v = 0; v < g.vertex_count; ++v) {
        if (layer_of[v] == -1) throw InvalidParameter("layers do not cover all vertices");
        for (int w : g.neighbors(v))
            if (layer_of[w] == layer_of[v])
                throw InvalidParameter("layer " + std::to_string(layer_of[v]) +
                                       " is not independent");
    }
}

bool has_witness(const std::vector<int>& counts, Mode mode) {
    for (int c : counts)
        if (mode == Mode::PCF ? c == 1 : (c % 2) == 1) return true;
    return false;
}

}  // namespace

ProductColoring compose_product_coloring(const Graph& g, const LayerPartition& part,
                                         const SideColorer& side_colorer, int t, Mode mode) {
    check_layers(g, part);
    const int n = g.vertex_count;
    const int k = static_cast<int>(part.layers.size());
    ProductColoring out;
    out.base.assign(n, 0);
    out.h1.assign(n, 1);
    out.h2.assign(n, 1);
    for (int i = 0; i < k; ++i)
        for (int v : part.layers[i]) out.base[v] = i;

    auto run_side = [&](const std::vector<int>& a_side, const std::vector<int>& b_side,
                        std::vector<int>& target) {
        if (a_side.empty() || b_side.empty()) return;
        auto colors = side_colorer(g, a_side, b_side);
        if (colors.size() != a_side.size())
            throw SideColorerContractViolated("side colorer returned wrong length");
        for (std::size_t j = 0; j < a_side.size(); ++j) {
            if (colors[j] < 1 || colors[j] > t)
                throw SideColorerContractViolated("side colorer used a color outside [1,t]");
            target[a_side[j]] = colors[j];
        }
        // every non-isolated B vertex must now be happy inside A
        std::vector<char> in_a(n, 0);
        for (int a : a_side) in_a[a] = 1;
        for (int b : b_side) {
            std::vector<int> counts(t + 1, 0);
            int deg = 0;
            for (int w : g.neighbors(b))
                if (in_a[w]) {
                    counts[target[w]]++;
                    ++deg;
                }
            if (deg > 0 && !has_witness(counts, mode))
                throw SideColorerContractViolated("vertex " + std::to_string(b) +
                                                  " left without a witness");
        }
    };

    // each layer colored against the one above it
    for (int i = 1; i < k; ++i) run_side(part.layers[i - 1], part.layers[i], out.h1);

    // bottom layer: group by the lowest layer holding a neighbor
    std::vector<int> f(n, -1);
    for (int v : part.layers.empty() ? std::vector<int>{} : part.layers[0]) {
        int best = k;
        for (int w : g.neighbors(v)) best = std::min(best, out.base[w]);
        if (best < k) f[v] = best;
    }
    for (int i = 1; i < k; ++i) {
        std::vector<int> b_side, a_side;
        std::vector<char> in_a(n, 0);
        for (int v : part.layers[0])
            if (f[v] == i) {
                b_side.push_back(v);
                for (int w : g.neighbors(v))
                    if (out.base[w] == i && !in_a[w]) {
                        in_a[w] = 1;
                        a_side.push_back(w);
                    }
            }
        std::sort(a_side.begin(), a_side.end());
        run_side(a_side, b_side, out.h2);
    }

    // flattened color: rank of the (layer, h1, h2) triple in first-use order
    std::map<std::tuple<int, int, int>, int> rank;
    out.flattened.colors.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        auto key = std::make_tuple(out.base[v], out.h1[v], out.h2[v]);
        auto it = rank.find(key);
        if (it == rank.end()) it = rank.emplace(key, static_cast<int>(rank.size()) + 1).first;
        out.flattened.colors[v] = it->second;
    }
    out.flattened.palette_size = std::max(1, static_cast<int>(rank.size()));

    auto rep = verify(g, out.flattened, mode);
    if (!rep.valid())
        throw AlgorithmInvariantViolated("product coloring failed verification");
    return out;
}

LayerPartition antichain_partition(const PermutationRep& rep) {
    check_permutation_rep(rep);
    std::vector<char> removed(rep.n, 0);
    std::vector<std::vector<int>> reversed;
    int remaining = rep.n;
    while (remaining > 0) {
        std::vector<int> maxima;
        for (int u = 0; u < rep.n; ++u) {
            if (removed[u]) continue;
            bool is_max = true;
            for (int v = 0; v < rep.n && is_max; ++v)
                if (!removed[v] && rep.less(u, v)) is_max = false;
            if (is_max) maxima.push_back(u);
        }
        for (int u : maxima) removed[u] = 1;
        remaining -= static_cast<int>(maxima.size());
        reversed.push_back(std::move(maxima));
    }
    LayerPartition part;
    part.kind = LayerKind::Antichain;
    part.layers.assign(reversed.rbegin(), reversed.rend());
    return part;
}

namespace {

// A-side 3-coloring of a bipartite pair of antichains: both sides ordered by
// pos1, under which every cross-neighborhood is an interval.
std::vector<int> antichain_pair_coloring(const Graph& g, const PermutationRep& rep,
                                         const std::vector<int>& a_side,
                                         const std::vector<int>& b_side) {
    std::vector<int> a_order = a_side;
    std::sort(a_order.begin(), a_order.end(),
              [&](int x, int y) { return rep.pos1[x] < rep.pos1[y]; });
    std::vector<int> pos(g.vertex_count, -1);
    for (int i = 0; i < static_cast<int>(a_order.size()); ++i) pos[a_order[i]] = i;

    std::vector<std::pair<int, int>> intervals;
    for (int b : b_side) {
        int lo = g.vertex_count, hi = -1, cnt = 0;
        for (int w : g.neighbors(b))
            if (pos[w] >= 0) {
                lo = std::min(lo, pos[w]);
                hi = std::max(hi, pos[w]);
                ++cnt;
            }
        if (cnt == 0)
            throw AlgorithmInvariantViolated("antichain pair has an isolated vertex on side B");
        if (hi - lo + 1 != cnt)
            throw LayoutDerivationFailed("neighborhood not an interval in the pos1 order");
        intervals.emplace_back(lo, hi);
    }
    auto by_pos = interval_witness_coloring(static_cast<int>(a_order.size()), intervals);

    std::vector<int> out(a_side.size(), 0);
    for (std::size_t j = 0; j < a_side.size(); ++j) out[j] = by_pos[pos[a_side[j]]];

    std::vector<int> counts(4, 0);
    for (int b : b_side) {
        counts[1] = counts[2] = counts[3] = 0;
        for (int w : g.neighbors(b))
            if (pos[w] >= 0) counts[by_pos[pos[w]]]++;
        if (counts[1] != 1 && counts[2] != 1 && counts[3] != 1)
            throw AlgorithmInvariantViolated("pair coloring left vertex " + std::to_string(b) +
                                             " without a witness");
    }
    return out;
}

}  // namespace

Coloring pcf_color_permutation(const PermutationRep& rep) {
    Graph g = comparability_graph(rep);
    LayerPartition part = antichain_partition(rep);
    const int h = static_cast<int>(part.layers.size());
    Coloring c;
    c.colors.assign(rep.n, 1);
    c.palette_size = std::max(1, 3 * h);
    if (h <= 1) return c;  // no comparabilities, everyone isolated

    std::vector<int> layer_of(rep.n, -1);
    for (int i = 0; i < h; ++i)
        for (int v : part.layers[i]) layer_of[v] = i;

    // top-layer vertices with no bottom-layer neighbor are served by the
    // lowest layer that does see them
    const auto& top = part.layers[h - 1];
    std::vector<std::vector<int>> extra(h);
    std::vector<int> served_by_bottom;
    for (int x : top) {
        if (g.degree(x) == 0) continue;
        int lowest = h;
        for (int w : g.neighbors(x)) lowest = std::min(lowest, layer_of[w]);
        if (lowest == 0)
            served_by_bottom.push_back(x);
        else
            extra[lowest].push_back(x);
    }

    for (int i = 1; i < h; ++i) {
        std::vector<int> b_side = part.layers[i - 1];
        b_side.insert(b_side.end(), extra[i].begin(), extra[i].end());
        auto colors = antichain_pair_coloring(g, rep, part.layers[i], b_side);
        for (std::size_t j = 0; j < part.layers[i].size(); ++j)
            c.colors[part.layers[i][j]] = 3 * i + colors[j];
    }
    if (!served_by_bottom.empty()) {
        auto colors = antichain_pair_coloring(g, rep, part.layers[0], served_by_bottom);
        for (std::size_t j = 0; j < part.layers[0].size(); ++j)
            c.colors[part.layers[0][j]] = colors[j];
    }

    auto report = verify(g, c, Mode::PCF);
    if (!report.valid())
        throw AlgorithmInvariantViolated("permutation coloring failed verification");
    return c;
}

bool is_convex_round(const Graph& g, const std::vector<int>& circular_order, int* violator) {
    const int n = g.vertex_count;
    if (static_cast<int>(circular_order.size()) != n) throw InvalidOrder("order has wrong length");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = circular_order[i];
        if (v < 0 || v >= n || pos[v] != -1) throw InvalidOrder("order is not a permutation");
        pos[v] = i;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) <= 1) continue;
        std::vector<char> member(n, 0);
        for (int w : g.neighbors(v)) member[pos[w]] = 1;
        int transitions = 0;
        for (int i = 0; i < n; ++i)
            if (member[i] && !member[(i + 1) % n]) ++transitions;
        if (transitions > 1) {
            if (violator) *violator = v;
            return false;
        }
    }
    return true;
}

namespace {

// Linear orders for an induced bipartite pair of a convex-round graph,
// found by cutting the circular order on each side; all cut pairs are tried
// and the first fully biconvex one wins.
BipartiteLayout derive_cut_layout(const Graph& g, const std::vector<int>& circular_order,
                                  const std::vector<int>& a_side,
                                  const std::vector<int>& b_side) {
    std::vector<int> pos(g.vertex_count, -1);
    for (int i = 0; i < static_cast<int>(circular_order.size()); ++i) pos[circular_order[i]] = i;

    std::vector<int> all = a_side;
    all.insert(all.end(), b_side.begin(), b_side.end());
    std::vector<int> index_of;
    Graph sub = induced_subgraph(g, all, &index_of);

    BipartiteLayout layout;
    layout.graph = sub;
    for (std::size_t i = 0; i < a_side.size(); ++i)
        layout.side_a.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < b_side.size(); ++i)
        layout.side_b.push_back(static_cast<int>(a_side.size() + i));

    auto circ = [&](const std::vector<int>& side) {
        std::vector<int> out = side;
        std::sort(out.begin(), out.end(), [&](int x, int y) { return pos[x] < pos[y]; });
        for (int& v : out) v = index_of[v];
        return out;
    };
    std::vector<int> base_a = circ(a_side), base_b = circ(b_side);

    const int na = static_cast<int>(base_a.size()), nb = static_cast<int>(base_b.size());
    for (int cut_a = 0; cut_a < std::max(1, na); ++cut_a) {
        std::vector<int> oa(base_a.begin() + cut_a, base_a.end());
        oa.insert(oa.end(), base_a.begin(), base_a.begin() + cut_a);
        for (int cut_b = 0; cut_b < std::max(1, nb); ++cut_b) {
            std::vector<int> ob(base_b.begin() + cut_b, base_b.end());
            ob.insert(ob.end(), base_b.begin(), base_b.begin() + cut_b);
            layout.order_a = oa;
            layout.order_b = ob;
            if (check_layout(layout).ok) return layout;
        }
    }
    throw LayoutDerivationFailed("no cut of the circular order yields a biconvex layout");
}

}  // namespace

Coloring pcf_color_convex_round(const Graph& g, const std::vector<int>& circular_order) {
    int bad = -1;
    if (!is_convex_round(g, circular_order, &bad)) throw NotConvexRound(bad);

    std::vector<int> identity(g.vertex_count);
    std::iota(identity.begin(), identity.end(), 0);
    Coloring base = greedy_proper_coloring(g, identity);
    LayerPartition layers = layered_refinement(g, base);

    SideColorer colorer = [&](const Graph& graph, const std::vector<int>& a_side,
                              const std::vector<int>& b_side) {
        BipartiteLayout layout = derive_cut_layout(graph, circular_order, a_side, b_side);
        auto sub_colors = one_sided_witness_coloring(layout);
        std::vector<int> out(a_side.size(), 0);
        for (std::size_t i = 0; i < a_side.size(); ++i)
            out[i] = sub_colors[layout.side_a[i]];
        return out;
    };
    ProductColoring product = compose_product_coloring(g, layers, colorer, 3, Mode::PCF);
    return product.flattened;
}

}  // namespace pcf
