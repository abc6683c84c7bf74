#include "pcf/oracle.hpp"

#include <algorithm>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Reverse of a min-degree removal sequence; ties prefer high original degree,
// then low index, so runs are reproducible.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.vertex_count;
    std::vector<int> residual(n), removal;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) residual[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[v]) continue;
            if (best == -1 || residual[v] < residual[best] ||
                (residual[v] == residual[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        removed[best] = 1;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) residual[w]--;
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

struct FixedTSearch {
    const Graph& g;
    OracleMode mode;
    int t;
    std::uint64_t max_nodes;
    std::uint64_t& nodes;
    std::vector<int> order;
    std::vector<int> color;     // 0 = uncolored
    std::vector<int> uncolored_closed;  // uncolored vertices in N[v]
    std::vector<int> result;
    bool exhausted = false;

    FixedTSearch(const Graph& g_, OracleMode m, int t_, std::uint64_t cap, std::uint64_t& n_)
        : g(g_), mode(m), t(t_), max_nodes(cap), nodes(n_) {
        order = degeneracy_order(g);
        color.assign(g.vertex_count, 0);
        uncolored_closed.assign(g.vertex_count, 0);
        for (int v = 0; v < g.vertex_count; ++v) uncolored_closed[v] = 1 + g.degree(v);
    }

    bool vertex_happy(int v) const {
        if (g.degree(v) == 0) return true;
        // all neighbors colored here
        int best = 0;
        std::vector<int> cnt(t + 1, 0);
        for (int w : g.neighbors(v)) cnt[color[w]]++;
        for (int col = 1; col <= t; ++col) {
            if (cnt[col] == 0) continue;
            if (mode == OracleMode::PCF ? cnt[col] == 1 : (cnt[col] % 2) == 1) best = col;
        }
        return best != 0;
    }

    // returns true when a full valid coloring was found
    bool assign(std::size_t pos, int max_used) {
        if (pos == order.size()) {
            result = color;
            return true;
        }
        int v = order[pos];
        int limit = std::min(t, max_used + 1);
        std::vector<char> banned(limit + 1, 0);
        for (int w : g.neighbors(v)) {
            int c = color[w];
            if (c >= 1 && c <= limit) banned[c] = 1;
        }
        for (int c = 1; c <= limit; ++c) {
            if (banned[c]) continue;
            if (nodes >= max_nodes) {
                exhausted = true;
                return false;
            }
            ++nodes;
            color[v] = c;
            bool ok = true;
            if (mode != OracleMode::PROPER) {
                for (int u : g.neighbors(v)) {
                    if (--uncolored_closed[u] == 0 && !vertex_happy(u)) ok = false;
                }
                if (--uncolored_closed[v] == 0 && ok && !vertex_happy(v)) ok = false;
            }
            if (ok && assign(pos + 1, std::max(max_used, c))) return true;
            if (mode != OracleMode::PROPER) {
                ++uncolored_closed[v];
                for (int u : g.neighbors(v)) ++uncolored_closed[u];
            }
            color[v] = 0;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult exact_chromatic(const Graph& g, OracleMode mode, int max_t, OracleBudget budget) {
    if (max_t < 1) throw InvalidParameter("max_t must be at least 1");
    OracleResult res;
    if (g.vertex_count == 0) {
        res.status = OracleStatus::Optimal;
        res.value = 1;
        res.certificate = Coloring{{}, 1};
        return res;
    }
    for (int t = 1; t <= max_t; ++t) {
        FixedTSearch search(g, mode, t, budget.max_nodes, res.nodes_explored);
        if (search.assign(0, 0)) {
            res.status = OracleStatus::Optimal;
            res.value = t;
            res.certificate = Coloring{search.result, t};
            return res;
        }
        if (search.exhausted) {
            res.status = OracleStatus::Exhausted;
            res.infeasible_below = t - 1;
            return res;
        }
        res.infeasible_below = t;
    }
    res.status = OracleStatus::InfeasibleAtMax;
    return res;
}

namespace {

struct OneSidedSearch {
    const Graph& g;
    WitnessKind kind;
    int t;
    std::uint64_t max_nodes;
    std::uint64_t& nodes;
    const std::vector<int>& a_order;
    std::vector<int> color;        // per graph vertex, 0 = uncolored
    std::vector<int> remaining;    // per B vertex: uncolored neighbors
    std::vector<int> b_of;         // graph vertex -> B slot or -1
    std::vector<int> result;
    bool exhausted = false;

    OneSidedSearch(const Graph& g_, const std::vector<int>& order, const std::vector<int>& b,
                   WitnessKind k, int t_, std::uint64_t cap, std::uint64_t& n_)
        : g(g_), kind(k), t(t_), max_nodes(cap), nodes(n_), a_order(order) {
        color.assign(g.vertex_count, 0);
        b_of.assign(g.vertex_count, -1);
        remaining.assign(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            b_of[b[i]] = static_cast<int>(i);
            remaining[i] = g.degree(b[i]);
        }
    }

    bool b_happy(int b) const {
        std::vector<int> cnt(t + 1, 0);
        for (int w : g.neighbors(b)) cnt[color[w]]++;
        for (int col = 1; col <= t; ++col) {
            if (cnt[col] == 0) continue;
            if (kind == WitnessKind::UNIQUE ? cnt[col] == 1 : (cnt[col] % 2) == 1) return true;
        }
        return false;
    }

    bool assign(std::size_t pos, int max_used) {
        if (pos == a_order.size()) {
            std::vector<int> colors;
            colors.reserve(a_order.size());
            for (int a : a_order) colors.push_back(color[a]);
            result = std::move(colors);
            return true;
        }
        int a = a_order[pos];
        int limit = std::min(t, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (nodes >= max_nodes) {
                exhausted = true;
                return false;
            }
            ++nodes;
            color[a] = c;
            bool ok = true;
            for (int w : g.neighbors(a)) {
                int slot = b_of[w];
                if (slot >= 0 && --remaining[slot] == 0 && !b_happy(w)) ok = false;
            }
            if (ok && assign(pos + 1, std::max(max_used, c))) return true;
            for (int w : g.neighbors(a)) {
                int slot = b_of[w];
                if (slot >= 0) ++remaining[slot];
            }
            color[a] = 0;
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

OneSidedResult one_sided_feasible(const Graph& g, const std::vector<int>& a_order,
                                  const std::vector<int>& b_side, int t, WitnessKind kind,
                                  OracleBudget budget) {
    if (t < 1) throw InvalidParameter("t must be at least 1");
    std::vector<char> in_a(g.vertex_count, 0);
    for (int a : a_order) {
        g.check_vertex(a);
        if (in_a[a]) throw InvalidParameter("duplicate vertex in a_order");
        in_a[a] = 1;
    }
    for (int b : b_side) {
        g.check_vertex(b);
        if (in_a[b]) throw InvalidParameter("B side overlaps A side");
        for (int w : g.neighbors(b))
            if (!in_a[w]) throw InvalidParameter("B neighborhoods must lie inside A");
    }
    OneSidedResult res;
    OneSidedSearch search(g, a_order, b_side, kind, t, budget.max_nodes, res.nodes_explored);
    if (search.assign(0, 0)) {
        res.status = OracleStatus::Optimal;
        res.feasible = true;
        res.certificate = std::move(search.result);
    } else if (search.exhausted) {
        res.status = OracleStatus::Exhausted;
    } else {
        res.status = OracleStatus::InfeasibleAtMax;
        res.feasible = false;
    }
    return res;
}

}  // namespace pcf
