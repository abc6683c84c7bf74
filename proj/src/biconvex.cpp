#include "pcf/biconvex.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pcf/errors.hpp"
#include "pcf/verify.hpp"

namespace pcf {

BipartiteLayout swapped(const BipartiteLayout& layout) {
    BipartiteLayout out;
    out.graph = layout.graph;
    out.side_a = layout.side_b;
    out.side_b = layout.side_a;
    out.order_a = layout.order_b;
    out.order_b = layout.order_a;
    return out;
}

namespace {

LayoutCheck fail(int v, std::string reason) {
    return LayoutCheck{false, v, std::move(reason)};
}

// positions of the vertices of `order` inside it, -1 elsewhere
std::vector<int> position_map(int n, const std::vector<int>& order) {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    return pos;
}

bool interval_in(const Graph& g, const std::vector<int>& pos, int w) {
    int lo = g.vertex_count, hi = -1, cnt = 0;
    for (int x : g.neighbors(w)) {
        if (pos[x] < 0) return false;  // neighbor outside the opposite side
        lo = std::min(lo, pos[x]);
        hi = std::max(hi, pos[x]);
        ++cnt;
    }
    return cnt == 0 || hi - lo + 1 == cnt;
}

}  // namespace

LayoutCheck check_layout(const BipartiteLayout& layout) {
    const Graph& g = layout.graph;
    std::vector<int> side(g.vertex_count, -1);
    for (int v : layout.side_a) {
        if (v < 0 || v >= g.vertex_count) return fail(v, "side_a vertex out of range");
        if (side[v] != -1) return fail(v, "vertex listed twice in side_a");
        side[v] = 0;
    }
    for (int v : layout.side_b) {
        if (v < 0 || v >= g.vertex_count) return fail(v, "side_b vertex out of range");
        if (side[v] != -1) return fail(v, "vertex in both sides");
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (side[v] == -1) return fail(v, "vertex in neither side");

    auto check_order = [&](const std::vector<int>& order, int expect,
                           const char* name) -> LayoutCheck {
        if (order.size() != (expect == 0 ? layout.side_a.size() : layout.side_b.size()))
            return fail(-1, std::string(name) + " has wrong length");
        std::vector<char> seen(g.vertex_count, 0);
        for (int v : order) {
            if (v < 0 || v >= g.vertex_count || side[v] != expect || seen[v])
                return fail(v, std::string(name) + " is not a permutation of its side");
            seen[v] = 1;
        }
        return {};
    };
    if (auto r = check_order(layout.order_a, 0, "order_a"); !r.ok) return r;
    if (auto r = check_order(layout.order_b, 1, "order_b"); !r.ok) return r;

    for (int v = 0; v < g.vertex_count; ++v)
        for (int w : g.neighbors(v))
            if (side[v] == side[w]) return fail(v, "edge inside one side");

    auto pos_a = position_map(g.vertex_count, layout.order_a);
    auto pos_b = position_map(g.vertex_count, layout.order_b);
    for (int w = 0; w < g.vertex_count; ++w) {
        if (side[w] == 1 && !interval_in(g, pos_a, w))
            return fail(w, "neighborhood not an interval of order_a");
        if (side[w] == 0 && !interval_in(g, pos_b, w))
            return fail(w, "neighborhood not an interval of order_b");
    }
    return {};
}

std::vector<int> interval_witness_coloring(int m,
                                           const std::vector<std::pair<int, int>>& intervals) {
    for (auto [l, r] : intervals)
        if (l < 0 || r >= m || l > r) throw InvalidLayout("interval out of range");
    std::vector<std::pair<int, int>> family = intervals;
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    // widest interval starting at each position
    std::vector<int> reach(m, -1);
    for (auto [l, r] : family) reach[l] = std::max(reach[l], r);

    // disjoint maximal set, scanning left to right
    std::vector<std::pair<int, int>> chosen;
    int covered_to = -1;
    for (int p = 0; p < m; ++p) {
        if (p <= covered_to || reach[p] < 0) continue;
        chosen.emplace_back(p, reach[p]);
        covered_to = reach[p];
    }

    std::vector<int> s_positions;
    for (auto [L, R] : chosen) {
        std::vector<std::pair<int, int>> restricted;
        for (auto [l, r] : family) {
            int lo = std::max(l, L), hi = std::min(r, R);
            if (lo <= hi) restricted.emplace_back(lo, hi);
        }
        std::sort(restricted.begin(), restricted.end());
        restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
        std::vector<std::pair<int, int>> minimal;
        for (const auto& cand : restricted) {
            bool has_proper_subset = false;
            for (const auto& other : restricted)
                if (other != cand && other.first >= cand.first && other.second <= cand.second) {
                    has_proper_subset = true;
                    break;
                }
            if (!has_proper_subset) minimal.push_back(cand);
        }
        if (minimal.size() > 2)
            throw InvalidLayout("restricted interval family has " +
                                std::to_string(minimal.size()) + " inclusion-minimal members");
        int leftmost = m, rightmost = -1;
        for (auto [l, r] : minimal) {
            leftmost = std::min(leftmost, l);
            rightmost = std::max(rightmost, r);
        }
        s_positions.push_back(leftmost);
        if (rightmost != leftmost) s_positions.push_back(rightmost);
    }

    std::sort(s_positions.begin(), s_positions.end());
    std::vector<int> colors(m, 3);
    for (std::size_t idx = 0; idx < s_positions.size(); ++idx)
        colors[s_positions[idx]] = 1 + static_cast<int>(idx % 2);
    return colors;
}

std::vector<int> one_sided_witness_coloring(const BipartiteLayout& layout) {
    auto check = check_layout(layout);
    if (!check.ok)
        throw InvalidLayout("invalid layout: " + check.reason, check.violator);
    const Graph& g = layout.graph;
    auto pos_a = position_map(g.vertex_count, layout.order_a);

    std::vector<std::pair<int, int>> intervals;
    for (int w : layout.side_b) {
        if (g.degree(w) == 0) continue;
        int lo = g.vertex_count, hi = -1;
        for (int x : g.neighbors(w)) {
            lo = std::min(lo, pos_a[x]);
            hi = std::max(hi, pos_a[x]);
        }
        intervals.emplace_back(lo, hi);
    }
    auto by_position = interval_witness_coloring(static_cast<int>(layout.order_a.size()),
                                                 intervals);
    std::vector<int> colors(g.vertex_count, 0);
    for (std::size_t i = 0; i < layout.order_a.size(); ++i)
        colors[layout.order_a[i]] = by_position[i];

    // the one-sided contract is cheap to confirm, so never return an
    // unchecked coloring
    std::vector<int> count(4, 0);
    for (int w : layout.side_b) {
        if (g.degree(w) == 0) continue;
        count[1] = count[2] = count[3] = 0;
        for (int x : g.neighbors(w)) count[colors[x]]++;
        if (count[1] != 1 && count[2] != 1 && count[3] != 1)
            throw AlgorithmInvariantViolated("vertex " + std::to_string(w) +
                                             " has no unique color in its neighborhood");
    }
    return colors;
}

Coloring pcf_color_biconvex(const BipartiteLayout& layout) {
    auto ca = one_sided_witness_coloring(layout);
    auto cb = one_sided_witness_coloring(swapped(layout));
    Coloring c;
    c.colors.assign(layout.graph.vertex_count, 0);
    c.palette_size = 6;
    for (int v : layout.side_a) c.colors[v] = ca[v];
    for (int v : layout.side_b) c.colors[v] = cb[v] + 3;
    return c;
}

void check_nested(const NestedFamily& family) {
    if (family.ground_size < 0) throw InvalidParameter("ground size must be non-negative");
    for (const auto& member : family.members) {
        if (member.empty()) throw InvalidParameter("nested family member is empty");
        for (std::size_t i = 0; i < member.size(); ++i) {
            if (member[i] < 0 || member[i] >= family.ground_size)
                throw InvalidParameter("member element out of range");
            if (i > 0 && member[i] <= member[i - 1])
                throw InvalidParameter("member elements must be sorted and distinct");
        }
    }
    const int k = static_cast<int>(family.members.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& a = family.members[i];
            const auto& b = family.members[j];
            std::vector<int> inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (inter.empty()) continue;
            if (inter.size() != a.size() && inter.size() != b.size()) throw NotNested(i, j);
        }
}

namespace {

// color permutation applied to every element of a span
void apply_mapping(std::vector<int>& colors, const std::vector<int>& span,
                   const std::array<int, 4>& map) {
    for (int e : span) colors[e] = map[colors[e]];
}

}  // namespace

Coloring nested_three_coloring(const NestedFamily& family) {
    check_nested(family);
    std::vector<std::vector<int>> members = family.members;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });

    const int k = static_cast<int>(members.size());
    // parent = smallest strict superset (unique by nestedness)
    std::vector<int> parent(k, -1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || members[j].size() <= members[i].size()) continue;
            if (!std::includes(members[j].begin(), members[j].end(), members[i].begin(),
                               members[i].end()))
                continue;
            if (parent[i] == -1 || members[j].size() < members[parent[i]].size()) parent[i] = j;
        }
    std::vector<std::vector<int>> children(k);
    for (int i = 0; i < k; ++i)
        if (parent[i] != -1) children[parent[i]].push_back(i);

    Coloring c;
    c.colors.assign(family.ground_size, 3);
    c.palette_size = 3;

    // processed in size order, so children are normalized to odd color 1 /
    // even color 2 before their parent runs
    for (int i = 0; i < k; ++i) {
        const auto& elems = members[i];
        std::vector<char> covered_flag(family.ground_size, 0);
        for (int ch : children[i])
            for (int e : members[ch]) covered_flag[e] = 1;

        if (children[i].empty()) {
            for (std::size_t idx = 0; idx < elems.size(); ++idx) c.colors[elems[idx]] = 2;
            c.colors[elems[0]] = 1;
            if (elems.size() % 2 == 0 && elems.size() >= 2) c.colors[elems[1]] = 3;
            continue;
        }

        for (int e : elems)
            if (!covered_flag[e]) c.colors[e] = 3;

        const int q = static_cast<int>(children[i].size());
        int last = children[i][q - 1];
        int p_last = 0;
        for (int e : members[last])
            if (c.colors[e] == 3) p_last ^= 1;

        // last child's contribution (x,y) to the parities of colors 1 and 2
        // must satisfy x + y == q (mod 2); the q-1 earlier children supply
        // (1,0) or (0,1) each.
        std::array<int, 4> last_map;
        int x;
        if (q % 2 == 1) {
            last_map = {0, 1, 2, 3};  // identity: (1,0)
            x = 1;
        } else if (p_last == 1) {
            last_map = {0, 1, 3, 2};  // odd class stays 1, third class feeds 2: (1,1)
            x = 1;
        } else {
            last_map = {0, 3, 1, 2};  // even class feeds 1, third class feeds 2: (0,0)
            x = 0;
        }
        int identity_count = (1 - x + 2) % 2;
        for (int idx = 0; idx < q - 1; ++idx) {
            std::array<int, 4> map = idx < identity_count
                                         ? std::array<int, 4>{0, 1, 2, 3}
                                         : std::array<int, 4>{0, 2, 1, 3};
            apply_mapping(c.colors, members[children[i][idx]], map);
        }
        apply_mapping(c.colors, members[last], last_map);

        int count1 = 0, count2 = 0;
        for (int e : elems) {
            count1 += c.colors[e] == 1;
            count2 += c.colors[e] == 2;
        }
        if (count1 % 2 != 1 || count2 % 2 != 0)
            throw AlgorithmInvariantViolated("nested member lost its parity designation");
    }
    return c;
}

}  // namespace pcf
