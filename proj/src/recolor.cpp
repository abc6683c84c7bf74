#include "pcf/recolor.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "pcf/errors.hpp"
#include "pcf/verify.hpp"

namespace pcf {

namespace {

// Odd-multiplicity witness sets for all vertices, one counting pass each.
std::vector<std::vector<int>> odd_witness_table(const Graph& g, const Coloring& c) {
    std::vector<std::vector<int>> table(g.vertex_count);
    std::vector<int> count(c.palette_size + 1, 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        for (int w : g.neighbors(v)) count[c.colors[w]]++;
        for (int w : g.neighbors(v)) {
            int col = c.colors[w];
            if (count[col] == 0) continue;
            if (count[col] % 2 == 1) table[v].push_back(col);
            count[col] = 0;
        }
        std::sort(table[v].begin(), table[v].end());
    }
    return table;
}

std::vector<int> core_from_table(const Graph& g, const std::vector<std::vector<int>>& table) {
    std::vector<int> core;
    for (int v = 0; v < g.vertex_count; ++v)
        if (g.degree(v) > 0 && table[v].empty()) core.push_back(v);
    return core;
}

bool critical_from_table(const Graph& g, const Coloring& c,
                         const std::vector<std::vector<int>>& table, int w) {
    const auto& ws = table[w];
    if (ws.size() != 2) return false;
    std::vector<int> left, right;
    for (int x : g.neighbors(w)) {
        if (c.colors[x] == ws[0]) left.push_back(x);
        if (c.colors[x] == ws[1]) right.push_back(x);
    }
    for (int a : left)
        for (int b : right)
            if (!g.has_edge(a, b)) return true;
    return false;
}

std::vector<int> safe_from_table(const Graph& g, const Coloring& c,
                                 const std::vector<std::vector<int>>& table, int u) {
    std::vector<char> banned(c.palette_size + 1, 0);
    banned[c.colors[u]] = 1;
    for (int w : g.neighbors(u)) banned[c.colors[w]] = 1;
    for (int w : g.neighbors(u)) {
        const auto& ws = table[w];
        if (ws.size() != 2) continue;
        if (ws[0] == c.colors[u])
            banned[ws[1]] = 1;
        else if (ws[1] == c.colors[u])
            banned[ws[0]] = 1;
    }
    std::vector<int> out;
    for (int i = 1; i <= c.palette_size; ++i)
        if (!banned[i]) out.push_back(i);
    return out;
}

struct Engine {
    const Graph& g;
    bool quasi;
    std::vector<CliquePartition> partitions;  // per vertex, quasi-line only

    Engine(const Graph& g_, bool quasi_) : g(g_), quasi(quasi_) {
        if (quasi) {
            partitions.resize(g.vertex_count);
            for (int v = 0; v < g.vertex_count; ++v) partitions[v] = clique_partition(g, v);
        } else if (auto claw = find_claw(g)) {
            throw NotClawFree(claw->center, claw->leaves);
        }
    }

    std::pair<Coloring, RecolorTrace> run(int slack) {
        const int n = g.vertex_count;
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v) identity[v] = v;
        Coloring c = greedy_proper_coloring(g, identity);
        c.palette_size = g.max_degree() + slack;

        auto table = odd_witness_table(g, c);
        auto core = core_from_table(g, table);
        RecolorTrace trace;
        while (!core.empty()) {
            RecolorStep step;
            step.picked = core.front();
            step.core_before = static_cast<int>(core.size());
            apply_step(c, table, step);
            table = odd_witness_table(g, c);
            core = core_from_table(g, table);
            step.core_after = static_cast<int>(core.size());
            if (step.core_after >= step.core_before)
                throw AlgorithmInvariantViolated("core failed to shrink at vertex " +
                                                 std::to_string(step.picked));
            trace.steps.push_back(std::move(step));
        }
        return {c, trace};
    }

    void apply_step(Coloring& c, const std::vector<std::vector<int>>& table, RecolorStep& step) {
        const int v = step.picked;
        for (int u : g.neighbors(v)) {
            auto safe = safe_from_table(g, c, table, u);
            if (!safe.empty()) {
                step.recolored.push_back({u, c.colors[u], safe.front()});
                c.colors[u] = safe.front();
                return;
            }
        }
        // No neighbor of v has a safe color: recolor some neighbor u with an
        // unused color, then fix the resulting critical damage from inside
        // the clique opposite v.
        const int u = g.neighbors(v).front();
        std::vector<char> seen(c.palette_size + 1, 0);
        seen[c.colors[u]] = 1;
        for (int w : g.neighbors(u)) seen[c.colors[w]] = 1;
        int i = 1;
        while (i <= c.palette_size && seen[i]) ++i;
        if (i > c.palette_size)
            throw AlgorithmInvariantViolated("no color outside the closed neighborhood of " +
                                             std::to_string(u));
        Coloring c1 = c;
        c1.colors[u] = i;
        auto table1 = odd_witness_table(g, c1);

        std::vector<int> candidates;
        if (quasi) {
            const auto& part = partitions[u];
            bool v_in_side1 =
                std::binary_search(part.side1.begin(), part.side1.end(), v);
            candidates = v_in_side1 ? part.side2 : part.side1;
        } else {
            candidates = g.neighbors(u);
        }
        for (int w : candidates) {
            if (w == v) continue;
            if (!critical_from_table(g, c1, table1, w)) continue;
            auto safe = safe_from_table(g, c1, table1, w);
            if (safe.empty()) continue;
            step.recolored.push_back({u, c.colors[u], i});
            step.recolored.push_back({w, c1.colors[w], safe.front()});
            c = std::move(c1);
            c.colors[w] = safe.front();
            return;
        }
        throw AlgorithmInvariantViolated(
            "no critical neighbor of " + std::to_string(u) +
            " with a safe color; input misclassified or implementation bug");
    }
};

}  // namespace

std::optional<Claw> find_claw(const Graph& g) {
    for (int v = 0; v < g.vertex_count; ++v) {
        const auto& nb = g.neighbors(v);
        const int d = static_cast<int>(nb.size());
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) {
                if (g.has_edge(nb[a], nb[b])) continue;
                for (int c = b + 1; c < d; ++c) {
                    if (g.has_edge(nb[a], nb[c]) || g.has_edge(nb[b], nb[c])) continue;
                    return Claw{v, {nb[a], nb[b], nb[c]}};
                }
            }
    }
    return std::nullopt;
}

CliquePartition clique_partition(const Graph& g, int v) {
    g.check_vertex(v);
    const auto& nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    // 2-color the complement of the induced neighborhood
    std::vector<int> side(d, -1);
    CliquePartition part;
    for (int start = 0; start < d; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (int y = 0; y < d; ++y) {
                if (y == x || g.has_edge(nb[x], nb[y])) continue;
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    throw NotQuasiLine(v);
                }
            }
        }
    }
    for (int x = 0; x < d; ++x) (side[x] == 0 ? part.side1 : part.side2).push_back(nb[x]);
    return part;
}

bool is_critical(const Graph& g, const Coloring& c, int w) {
    g.check_vertex(w);
    check_coloring(g, c);
    auto ws = witnesses(g, c, w, Mode::ODD);
    if (ws.size() != 2) return false;
    std::vector<int> left, right;
    for (int x : g.neighbors(w)) {
        if (c.colors[x] == ws[0]) left.push_back(x);
        if (c.colors[x] == ws[1]) right.push_back(x);
    }
    for (int a : left)
        for (int b : right)
            if (!g.has_edge(a, b)) return true;
    return false;
}

std::vector<int> safe_colors(const Graph& g, const Coloring& c, int u) {
    g.check_vertex(u);
    check_coloring(g, c);
    auto table = odd_witness_table(g, c);
    return safe_from_table(g, c, table, u);
}

std::string trace_to_json_lines(const RecolorTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace.steps) {
        nlohmann::json j;
        j["picked"] = step.picked;
        nlohmann::json moves = nlohmann::json::array();
        for (const auto& r : step.recolored)
            moves.push_back({{"vertex", r[0]}, {"old", r[1]}, {"new", r[2]}});
        j["recolored"] = moves;
        j["core_before"] = step.core_before;
        j["core_after"] = step.core_after;
        out << j.dump() << '\n';
    }
    return out.str();
}

std::pair<Coloring, RecolorTrace> pcf_color_claw_free(const Graph& g) {
    Engine engine(g, false);
    return engine.run(6);
}

std::pair<Coloring, RecolorTrace> pcf_color_quasi_line(const Graph& g) {
    Engine engine(g, true);
    return engine.run(4);
}

}  // namespace pcf
