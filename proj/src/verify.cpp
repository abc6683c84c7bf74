#include "pcf/verify.hpp"

#include <algorithm>

#include "pcf/errors.hpp"

namespace pcf {

std::vector<int> witnesses(const Graph& g, const Coloring& c, int v, Mode mode) {
    g.check_vertex(v);
    check_coloring(g, c);
    std::vector<int> count(c.palette_size + 1, 0);
    for (int w : g.neighbors(v)) count[c.colors[w]]++;
    std::vector<int> out;
    for (int w : g.neighbors(v)) {
        int col = c.colors[w];
        if (count[col] == 0) continue;  // already collected
        bool hit = (mode == Mode::PCF) ? count[col] == 1 : (count[col] % 2) == 1;
        if (hit) out.push_back(col);
        count[col] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify(const Graph& g, const Coloring& c, Mode mode) {
    check_coloring(g, c);
    VerificationReport rep;
    rep.witness_sets.assign(g.vertex_count, {});
    std::vector<int> count(c.palette_size + 1, 0);
    std::vector<int> used(c.palette_size + 1, 0);
    for (int v = 0; v < g.vertex_count; ++v) {
        used[c.colors[v]] = 1;
        auto& ws = rep.witness_sets[v];
        for (int w : g.neighbors(v)) {
            if (c.colors[w] == c.colors[v]) rep.is_proper = false;
            count[c.colors[w]]++;
        }
        for (int w : g.neighbors(v)) {
            int col = c.colors[w];
            if (count[col] == 0) continue;
            bool hit = (mode == Mode::PCF) ? count[col] == 1 : (count[col] % 2) == 1;
            if (hit) ws.push_back(col);
            count[col] = 0;
        }
        std::sort(ws.begin(), ws.end());
        if (g.degree(v) > 0 && ws.empty()) rep.core.push_back(v);
    }
    for (int col = 1; col <= c.palette_size; ++col) rep.colors_used += used[col];
    return rep;
}

}  // namespace pcf
