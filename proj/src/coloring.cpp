#include "pcf/coloring.hpp"

#include <algorithm>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

int colors_used(const Coloring& c) {
    std::vector<int> seen(c.palette_size + 1, 0);
    int count = 0;
    for (int col : c.colors)
        if (col >= 1 && col <= c.palette_size && !seen[col]) {
            seen[col] = 1;
            ++count;
        }
    return count;
}

void check_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.vertex_count)
        throw InvalidColor("coloring has " + std::to_string(c.colors.size()) +
                           " entries for a graph on " + std::to_string(g.vertex_count) +
                           " vertices");
    if (c.palette_size < 1) throw InvalidColor("palette size must be positive");
    for (int v = 0; v < g.vertex_count; ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.palette_size)
            throw InvalidColor("color " + std::to_string(c.colors[v]) + " of vertex " +
                               std::to_string(v) + " outside palette [1," +
                               std::to_string(c.palette_size) + "]");
}

bool is_proper(const Graph& g, const Coloring& c) {
    for (int v = 0; v < g.vertex_count; ++v)
        for (int w : g.neighbors(v))
            if (w > v && c.colors[v] == c.colors[w]) return false;
    return true;
}

Coloring recolor_one(const Coloring& c, int u, int i) {
    if (u < 0 || u >= static_cast<int>(c.colors.size()))
        throw InvalidVertex("vertex " + std::to_string(u) + " out of range");
    if (i < 1 || i > c.palette_size)
        throw InvalidColor("color " + std::to_string(i) + " outside palette [1," +
                           std::to_string(c.palette_size) + "]");
    Coloring out = c;
    out.colors[u] = i;
    return out;
}

Coloring greedy_proper_coloring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count;
    if (static_cast<int>(order.size()) != n)
        throw InvalidOrder("order has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v]) throw InvalidOrder("order is not a permutation");
        seen[v] = 1;
    }
    Coloring c;
    c.colors.assign(n, 0);
    std::vector<int> banned(n + 2, -1);
    int max_color = 0;
    for (int v : order) {
        for (int w : g.neighbors(v))
            if (c.colors[w] > 0) banned[c.colors[w]] = v;
        int col = 1;
        while (banned[col] == v) ++col;
        c.colors[v] = col;
        max_color = std::max(max_color, col);
    }
    c.palette_size = std::max(1, max_color);
    return c;
}

}  // namespace pcf
