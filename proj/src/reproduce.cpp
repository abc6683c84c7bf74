#include "pcf/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pcf/biconvex.hpp"
#include "pcf/constructions.hpp"
#include "pcf/errors.hpp"
#include "pcf/oracle.hpp"
#include "pcf/recolor.hpp"
#include "pcf/reduction.hpp"
#include "pcf/rng.hpp"
#include "pcf/subdivision.hpp"
#include "pcf/verify.hpp"

namespace pcf {

namespace {

// ---------------------------------------------------------------- canon

struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> rows{};

    bool edge(int i, int j) const { return (rows[i] >> j) & 1; }
    void add(int i, int j) {
        rows[i] |= std::uint8_t(1u << j);
        rows[j] |= std::uint8_t(1u << i);
    }
};

// iterated neighbor-class refinement; ranks are isomorphism-invariant
std::vector<int> refine_classes(const SmallGraph& g) {
    std::vector<int> rank(g.n);
    for (int v = 0; v < g.n; ++v) rank[v] = __builtin_popcount(g.rows[v]);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::vector<int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            sig[v].push_back(rank[v]);
            std::vector<int> nb;
            for (int u = 0; u < g.n; ++u)
                if (g.edge(v, u)) nb.push_back(rank[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < g.n; ++v)
            rank[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                       uniq.begin());
    }
    return rank;
}

struct CanonSearch {
    const SmallGraph& g;
    std::vector<int> class_of_position;  // class required at each position
    std::vector<std::vector<int>> members_of_class;
    std::vector<int> perm;
    std::vector<char> used;
    std::vector<int> bits, best;
    bool have_best = false;

    explicit CanonSearch(const SmallGraph& g_) : g(g_), used(g_.n, 0) {
        auto rank = refine_classes(g);
        int classes = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
        members_of_class.assign(classes, {});
        for (int v = 0; v < g.n; ++v) members_of_class[rank[v]].push_back(v);
        for (int c = 0; c < classes; ++c)
            for (std::size_t i = 0; i < members_of_class[c].size(); ++i)
                class_of_position.push_back(c);
    }

    void place(int pos, bool tied) {
        if (pos == g.n) {
            if (!have_best || (tied == false)) {
                best = bits;
                have_best = true;
            }
            return;
        }
        for (int v : members_of_class[class_of_position[pos]]) {
            if (used[v]) continue;
            int added = 0;
            bool worse = false, still_tied = tied;
            for (int j = 0; j < pos; ++j) {
                int bit = g.edge(v, perm[j]) ? 1 : 0;
                bits.push_back(bit);
                ++added;
                if (still_tied && have_best) {
                    int idx = static_cast<int>(bits.size()) - 1;
                    if (bit < best[idx]) {
                        worse = true;
                        break;
                    }
                    if (bit > best[idx]) still_tied = false;
                }
            }
            if (!worse) {
                used[v] = 1;
                perm.push_back(v);
                place(pos + 1, have_best ? still_tied : false);
                perm.pop_back();
                used[v] = 0;
            }
            while (added--) bits.pop_back();
        }
    }
};

std::uint64_t canon_key(const SmallGraph& g) {
    CanonSearch search(g);
    search.place(0, true);
    std::uint64_t key = static_cast<std::uint64_t>(g.n);
    for (int b : search.best) key = (key << 1) | static_cast<std::uint64_t>(b);
    return key;
}

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.vertex_count;
    for (int v = 0; v < g.vertex_count; ++v)
        for (int u : g.neighbors(v))
            if (u > v) s.add(v, u);
    return s;
}

Graph from_small(const SmallGraph& s) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
            if (s.edge(i, j)) edges.emplace_back(i, j);
    return build_graph(edges, s.n);
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.vertex_count > 8) throw InvalidParameter("canonical keys cover at most 8 vertices");
    return canon_key(to_small(g));
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
    if (max_n < 1 || max_n > 8)
        throw InvalidParameter("connected enumeration covers 1..8 vertices");
    std::vector<Graph> out;
    std::vector<SmallGraph> level;
    {
        SmallGraph k1;
        k1.n = 1;
        level.push_back(k1);
        out.push_back(from_small(k1));
    }
    for (int n = 2; n <= max_n; ++n) {
        std::set<std::uint64_t> seen;
        std::vector<SmallGraph> next;
        for (const SmallGraph& parent : level) {
            for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
                SmallGraph child = parent;
                child.n = n;
                for (int j = 0; j < n - 1; ++j)
                    if ((mask >> j) & 1) child.add(n - 1, j);
                std::uint64_t key = canon_key(child);
                if (seen.insert(key).second) {
                    next.push_back(child);
                    out.push_back(from_small(child));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

// ------------------------------------------------------------- suites

namespace {

using Clock = std::chrono::steady_clock;

struct RowTimer {
    Clock::time_point start = Clock::now();
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

struct Suite {
    std::vector<ReproduceRow>& rows;
    std::string suite_name;

    void add(const std::string& label, const std::string& bound, bool pass,
             const std::string& detail, double millis) {
        rows.push_back({suite_name, label, bound, pass, detail, millis});
    }
};

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below_int(i + 1)]);
    return p;
}

Coloring random_proper_coloring(const Graph& g, int palette, SplitMix64& rng) {
    Coloring c = greedy_proper_coloring(g, random_permutation(g.vertex_count, rng));
    c.palette_size = std::max(c.palette_size, palette);
    for (int step = 0; step < 2 * g.vertex_count; ++step) {
        if (g.vertex_count == 0) break;
        int v = rng.below_int(g.vertex_count);
        std::vector<char> banned(c.palette_size + 1, 0);
        for (int w : g.neighbors(v)) banned[c.colors[w]] = 1;
        std::vector<int> options;
        for (int i = 1; i <= c.palette_size; ++i)
            if (!banned[i] && i != c.colors[v]) options.push_back(i);
        if (!options.empty()) c.colors[v] = options[rng.below_int(static_cast<int>(options.size()))];
    }
    return c;
}

std::vector<int> core_of(const Graph& g, const Coloring& c) {
    return verify(g, c, Mode::ODD).core;
}

std::vector<Graph> claw_free_corpus(std::uint64_t seed, std::string* note) {
    std::vector<Graph> out;
    for (int i = 0; i < 150; ++i) {
        const double probs[] = {0.2, 0.3, 0.45, 0.6};
        Graph base = random_graph(5 + (i % 16), probs[i % 4], seed + i);
        Graph lg = line_graph(base);
        if (lg.vertex_count > 0) out.push_back(lg);
    }
    for (int n = 2; n <= 6; ++n) out.push_back(build_cpn(n).graph);
    int found = 0;
    for (std::uint64_t s = 0; s < 4000 && found < 60; ++s) {
        Graph g = random_graph(6 + static_cast<int>(s % 3), 0.2, seed * 31 + s);
        if (g.edge_count() > 0 && !find_claw(g)) {
            out.push_back(g);
            ++found;
        }
    }
    if (note) *note = std::to_string(out.size()) + " instances";
    return out;
}

void suite_clawfree(Suite& suite, std::uint64_t seed) {
    RowTimer timer;
    std::string note;
    auto corpus = claw_free_corpus(seed, &note);
    int checked = 0;
    std::string fail;
    for (const Graph& g : corpus) {
        auto [coloring, trace] = pcf_color_claw_free(g);
        auto rep = verify(g, coloring, Mode::PCF);
        bool ok = rep.valid() && rep.colors_used <= g.max_degree() + 6 &&
                  static_cast<int>(trace.steps.size()) <= g.vertex_count;
        for (const auto& step : trace.steps)
            ok = ok && step.core_after < step.core_before;
        if (!ok) {
            fail = "instance with n=" + std::to_string(g.vertex_count) + " failed";
            break;
        }
        ++checked;
    }
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && checked >= 200 && ms < 10000.0;
    suite.add("corpus of " + std::to_string(checked) + " claw-free graphs", "Delta+6", pass,
              fail.empty() ? note + ", " + std::to_string(static_cast<int>(ms)) + " ms" : fail,
              ms);
}

void suite_quasiline(Suite& suite, std::uint64_t seed) {
    RowTimer timer;
    auto corpus = claw_free_corpus(seed, nullptr);
    int checked = 0;
    std::string fail;
    for (const Graph& g : corpus) {
        bool quasi = true;
        for (int v = 0; v < g.vertex_count && quasi; ++v) {
            try {
                clique_partition(g, v);
            } catch (const NotQuasiLine&) {
                quasi = false;
            }
        }
        if (!quasi) continue;
        auto [coloring, trace] = pcf_color_quasi_line(g);
        auto rep = verify(g, coloring, Mode::PCF);
        bool ok = rep.valid() && rep.colors_used <= g.max_degree() + 4 &&
                  static_cast<int>(trace.steps.size()) <= g.vertex_count;
        for (const auto& step : trace.steps)
            ok = ok && step.core_after < step.core_before;
        if (!ok) {
            fail = "instance with n=" + std::to_string(g.vertex_count) + " failed";
            break;
        }
        ++checked;
    }
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && checked >= 100 && ms < 10000.0;
    suite.add(std::to_string(checked) + " quasi-line graphs", "Delta+4", pass,
              fail.empty() ? std::to_string(static_cast<int>(ms)) + " ms" : fail, ms);
}

bool sets_equal(const std::vector<int>& a, std::vector<int> b) {
    std::sort(b.begin(), b.end());
    return a == b;
}

void suite_lemmas(Suite& suite, std::uint64_t seed) {
    RowTimer timer;
    SplitMix64 rng(seed * 977 + 5);
    long long trials = 0, violations = 0;
    std::string first_violation;

    auto record = [&](bool ok, const std::string& what) {
        ++trials;
        if (!ok) {
            ++violations;
            if (first_violation.empty()) first_violation = what;
        }
    };

    std::vector<Graph> graphs;
    for (int i = 0; i < 120; ++i) {
        const double probs[] = {0.2, 0.35, 0.5};
        graphs.push_back(random_graph(6 + (i % 9), probs[i % 3], seed + 1000 + i));
    }
    for (int i = 0; i < 80; ++i)
        graphs.push_back(line_graph(random_graph(6 + (i % 8), 0.35, seed + 2000 + i)));
    for (int n = 2; n <= 5; ++n) graphs.push_back(build_cpn(n).graph);

    for (const Graph& g : graphs) {
        if (g.vertex_count == 0) continue;
        Coloring c = random_proper_coloring(g, g.max_degree() + 6, rng);
        auto core = core_of(g, c);
        for (int rep = 0; rep < 36; ++rep) {
            int u = rng.below_int(g.vertex_count);
            std::vector<char> banned(c.palette_size + 1, 0);
            banned[c.colors[u]] = 1;
            for (int w : g.neighbors(u)) banned[c.colors[w]] = 1;
            std::vector<int> outside;
            for (int i = 1; i <= c.palette_size; ++i)
                if (!banned[i]) outside.push_back(i);
            if (outside.empty()) continue;
            int i = outside[rng.below_int(static_cast<int>(outside.size()))];

            Coloring ci = recolor_one(c, u, i);
            auto core_i = core_of(g, ci);

            // recoloring u never leaves an unhappy neighbor unhappy
            bool l1 = true;
            for (int v : g.neighbors(u)) {
                bool in_old = std::binary_search(core.begin(), core.end(), v);
                bool in_new = std::binary_search(core_i.begin(), core_i.end(), v);
                if (in_old && in_new) l1 = false;
            }
            record(l1, "core-neighbor overlap after recoloring");

            // new unhappy vertices are exactly the neighbors whose witness
            // pair was {c(u), i}, and safety means there are none
            std::vector<int> fresh;
            for (int v : core_i)
                if (!std::binary_search(core.begin(), core.end(), v)) fresh.push_back(v);
            std::vector<int> expected;
            for (int w : g.neighbors(u)) {
                auto ws = witnesses(g, c, w, Mode::ODD);
                if (ws.size() == 2 && sets_equal(ws, {c.colors[u], i})) expected.push_back(w);
            }
            std::sort(expected.begin(), expected.end());
            record(fresh == expected, "new-core characterization");
            auto safe = safe_colors(g, c, u);
            bool is_safe = std::binary_search(safe.begin(), safe.end(), i);
            record(is_safe == fresh.empty(), "safety vs new-core emptiness");

            if (outside.size() >= 2) {
                int j = outside[rng.below_int(static_cast<int>(outside.size()))];
                if (j != i) {
                    Coloring cj = recolor_one(c, u, j);
                    auto core_j = core_of(g, cj);
                    std::vector<int> fresh_j;
                    for (int v : core_j)
                        if (!std::binary_search(core.begin(), core.end(), v))
                            fresh_j.push_back(v);
                    bool disjoint = true;
                    for (int v : fresh_j)
                        if (std::binary_search(fresh.begin(), fresh.end(), v)) disjoint = false;
                    record(disjoint, "i/j new-core disjointness");
                    bool crit = true;
                    for (int v : fresh_j)
                        if (!is_critical(g, ci, v)) crit = false;
                    record(crit, "cross-criticality");
                }
            }
        }
    }

    // degree laws for critical vertices
    for (int i = 0; i < 60; ++i) {
        Graph g = line_graph(random_graph(6 + (i % 8), 0.4, seed + 3000 + i));
        if (g.vertex_count == 0) continue;
        Coloring c6 = random_proper_coloring(g, g.max_degree() + 6, rng);
        for (int w = 0; w < g.vertex_count; ++w) {
            if (!is_critical(g, c6, w)) continue;
            std::set<int> closed{c6.colors[w]};
            for (int x : g.neighbors(w)) closed.insert(c6.colors[x]);
            record(2 * static_cast<int>(closed.size()) <= g.degree(w) + 4,
                   "claw-free critical degree bound");
        }
        Coloring c4 = random_proper_coloring(g, g.max_degree() + 4, rng);
        for (int w = 0; w < g.vertex_count; ++w) {
            if (!is_critical(g, c4, w)) continue;
            std::set<int> closed{c4.colors[w]};
            for (int x : g.neighbors(w)) closed.insert(c4.colors[x]);
            record(g.degree(w) % 2 == 0, "quasi-line critical even degree");
            record(2 * static_cast<int>(closed.size()) == g.degree(w) + 4,
                   "quasi-line critical palette count");
            for (int x : g.neighbors(w))
                if (is_critical(g, c4, x))
                    record(g.degree(x) == g.degree(w), "adjacent critical equal degree");
        }
    }

    double ms = timer.elapsed_ms();
    bool pass = trials >= 10000 && violations == 0;
    suite.add("randomized recoloring laws", ">= 10^4 trials, zero violations", pass,
              std::to_string(trials) + " trials, " + std::to_string(violations) +
                  " violations" + (first_violation.empty() ? "" : " (" + first_violation + ")"),
              ms);
}

void suite_biconvex(Suite& suite, std::uint64_t seed) {
    RowTimer timer;
    int checked = 0;
    std::string fail;
    auto check_instance = [&](const FamilyInstance& inst) {
        if (!fail.empty()) return;
        const auto& layout = *inst.layout;
        Coloring c = pcf_color_biconvex(layout);
        auto rep = verify(layout.graph, c, Mode::PCF);
        std::set<int> on_a, on_b;
        for (int v : layout.side_a) on_a.insert(c.colors[v]);
        for (int v : layout.side_b) on_b.insert(c.colors[v]);
        bool ok = rep.valid() && on_a.size() <= 3 && on_b.size() <= 3 && c.palette_size == 6;
        for (int col : on_a) ok = ok && col >= 1 && col <= 3;
        for (int col : on_b) ok = ok && col >= 4 && col <= 6;
        if (!ok) fail = inst.label + " failed";
        else ++checked;
    };
    for (int i = 0; i < 520; ++i) {
        int na = 3 + (i % 8), nb = 1 + (i % 7);
        check_instance(random_biconvex(na, nb, seed + 4000 + i));
    }
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) check_instance(complete_bipartite(m, n));
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && checked >= 500 + 64 && ms < 5000.0;
    suite.add(std::to_string(checked) + " biconvex instances", "6 colors, 3 per side", pass,
              fail.empty() ? std::to_string(static_cast<int>(ms)) + " ms" : fail, ms);
}

void suite_permutation(Suite& suite, std::uint64_t seed) {
    RowTimer timer;
    SplitMix64 rng(seed * 131 + 7);
    int checked = 0;
    std::string fail;
    auto check_rep = [&](const PermutationRep& rep, const std::string& label) {
        if (!fail.empty()) return;
        Graph g = comparability_graph(rep);
        Coloring c = pcf_color_permutation(rep);
        auto report = verify(g, c, Mode::PCF);
        int h = static_cast<int>(antichain_partition(rep).layers.size());
        bool ok = report.valid() && report.colors_used <= 3 * std::max(1, h);
        if (ok && rep.n <= 12 && rep.n >= 1) {
            auto opt = exact_chromatic(g, OracleMode::PROPER, std::max(1, rep.n));
            ok = opt.status == OracleStatus::Optimal && opt.value == std::max(1, h);
        }
        if (!ok) fail = label + " failed";
        else ++checked;
    };
    for (int i = 0; i < 110; ++i) {
        int n = 1 + (i * 7) % 40;
        PermutationRep rep;
        rep.n = n;
        rep.pos1 = random_permutation(n, rng);
        rep.pos2 = random_permutation(n, rng);
        check_rep(rep, "random permutation n=" + std::to_string(n));
    }
    for (int n = 2; n <= 6; ++n)
        check_rep(*build_cpn(n).permutation, "CP_" + std::to_string(n));
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && checked >= 110;
    suite.add(std::to_string(checked) + " permutation graphs", "3*chi", pass,
              fail.empty() ? std::to_string(static_cast<int>(ms)) + " ms" : fail, ms);
}

void suite_convexround(Suite& suite, std::uint64_t) {
    RowTimer timer;
    int checked = 0;
    std::string fail;
    auto check = [&](const Graph& g, const std::vector<int>& order, const std::string& label) {
        if (!fail.empty()) return;
        Coloring c = pcf_color_convex_round(g, order);
        auto rep = verify(g, c, Mode::PCF);
        std::vector<int> identity(g.vertex_count);
        std::iota(identity.begin(), identity.end(), 0);
        int layer_count = static_cast<int>(
            layered_refinement(g, greedy_proper_coloring(g, identity)).layers.size());
        bool ok = rep.valid() && rep.colors_used <= 9 * std::max(1, layer_count);
        if (!ok) fail = label + " failed";
        else ++checked;
    };
    for (int n = 2; n <= 6; ++n) {
        auto inst = build_cpn(n);
        check(inst.graph, *inst.circular_order, inst.label);
    }
    for (int n = 3; n <= 12; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        Graph cyc = build_graph(edges, n);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        check(cyc, order, "C_" + std::to_string(n));
    }
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto inst = complete_bipartite(m, n);
            check(inst.graph, *inst.circular_order, inst.label);
        }
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && checked >= 40;
    suite.add(std::to_string(checked) + " convex-round instances", "9*chi", pass,
              fail.empty() ? std::to_string(static_cast<int>(ms)) + " ms" : fail, ms);
}

void suite_subdivision(Suite& suite, std::uint64_t) {
    RowTimer timer;
    std::string fail;
    int pcf_checked = 0, odd_checked = 0;
    auto catalog = connected_graphs_up_to(8);
    for (const Graph& g : catalog) {
        auto chi = exact_chromatic(g, OracleMode::PROPER, std::min(8, std::max(1, g.vertex_count)));
        if (chi.status != OracleStatus::Optimal) {
            fail = "chromatic number did not resolve";
            break;
        }
        SubdividedGraph sg = full_subdivision(g);
        if (chi.value <= 3) {
            Coloring base = *chi.certificate;
            base.palette_size = 3;
            Coloring c = pcf4_subdivision(g, base);
            auto rep = verify(sg.graph, c, Mode::PCF);
            if (!(rep.valid() && rep.colors_used <= 4)) {
                fail = "conflict-free subdivision coloring failed at n=" +
                       std::to_string(g.vertex_count);
                break;
            }
            ++pcf_checked;
        }
        if (chi.value <= 4) {
            Coloring base = *chi.certificate;
            base.palette_size = 4;
            Coloring c = odd4_subdivision(g, base);
            auto rep = verify(sg.graph, c, Mode::ODD);
            if (!(rep.valid() && rep.colors_used <= 4)) {
                fail = "odd subdivision coloring failed at n=" + std::to_string(g.vertex_count);
                break;
            }
            ++odd_checked;
        }
    }
    bool tight = true;
    for (int k : {1, 2}) {
        Graph kb = complete_bipartite(2 * k, 2 * k).graph;
        auto res = exact_chromatic(full_subdivision(kb).graph, OracleMode::ODD, 4);
        tight = tight && res.status == OracleStatus::Optimal && res.value == 4;
    }
    double ms = timer.elapsed_ms();
    bool pass = fail.empty() && tight && pcf_checked > 0 && odd_checked > 0 && ms < 60000.0;
    std::ostringstream detail;
    if (!fail.empty()) detail << fail;
    else
        detail << pcf_checked << " graphs with chi<=3, " << odd_checked
               << " with chi<=4, tightness " << (tight ? "confirmed" : "FAILED") << ", "
               << static_cast<int>(ms) << " ms";
    suite.add("all connected graphs n<=8", "4 colors on subdivisions", pass, detail.str(), ms);
}

void suite_gk(Suite& suite, std::uint64_t) {
    RowTimer timer;
    for (int k = 1; k <= 3; ++k) {
        RowTimer row;
        FamilyInstance inst = build_gk(k);
        const int m = 1 << k;
        long long expect = (1LL << (k + 1)) + static_cast<long long>(m) * (m - 1) / 2;
        bool ok = inst.graph.vertex_count == expect;

        Coloring c = pcf_color_gk(k);
        auto rep = verify(inst.graph, c, Mode::PCF);
        std::set<int> on_a;
        for (int a = 0; a < m; ++a) on_a.insert(c.colors[a]);
        ok = ok && rep.valid() && rep.colors_used <= k + 2 &&
             static_cast<int>(on_a.size()) <= k + 1;

        std::vector<int> a_order(m), b_side;
        std::iota(a_order.begin(), a_order.end(), 0);
        for (int b = m; b < inst.graph.vertex_count; ++b) b_side.push_back(b);
        auto lo = one_sided_feasible(inst.graph, a_order, b_side, k, WitnessKind::ODD);
        auto hi = one_sided_feasible(inst.graph, a_order, b_side, k + 1, WitnessKind::ODD);
        ok = ok && lo.status == OracleStatus::InfeasibleAtMax && !lo.feasible &&
             hi.status == OracleStatus::Optimal && hi.feasible;
        suite.add(inst.label,
                  "k+2 colors, A needs k+1 (k=" + std::to_string(k) + ")", ok,
                  "|V|=" + std::to_string(inst.graph.vertex_count) + ", used " +
                      std::to_string(rep.colors_used),
                  row.elapsed_ms());
    }
    (void)timer;
}

void suite_hk(Suite& suite, std::uint64_t) {
    for (int k = 1; k <= 3; ++k) {
        RowTimer row;
        FamilyInstance inst = build_hk(k);
        const int m = 1 << k;
        long long expect = (1LL << (k + 1)) - 1;
        bool ok = inst.graph.vertex_count == expect;

        Coloring c = odd_color_hk(k);
        auto rep = verify(inst.graph, c, Mode::ODD);
        ok = ok && rep.valid() && rep.colors_used <= 4;

        std::vector<int> a_order(m), b_side;
        std::iota(a_order.begin(), a_order.end(), 0);
        for (int b = m; b < inst.graph.vertex_count; ++b) b_side.push_back(b);
        auto lo = one_sided_feasible(inst.graph, a_order, b_side, k, WitnessKind::UNIQUE);
        auto hi = one_sided_feasible(inst.graph, a_order, b_side, k + 1, WitnessKind::UNIQUE);
        ok = ok && lo.status == OracleStatus::InfeasibleAtMax && !lo.feasible &&
             hi.status == OracleStatus::Optimal && hi.feasible;
        suite.add(inst.label, "odd with 4, unique side needs k+1 (k=" + std::to_string(k) + ")",
                  ok,
                  "|V|=" + std::to_string(inst.graph.vertex_count) + ", used " +
                      std::to_string(rep.colors_used),
                  row.elapsed_ms());
    }
}

void suite_cpn(Suite& suite, std::uint64_t) {
    for (int n = 2; n <= 4; ++n) {
        RowTimer row;
        Graph g = build_cpn(n).graph;
        OracleBudget budget;
        budget.max_nodes = 200000000ULL;
        auto chi = exact_chromatic(g, OracleMode::PROPER, 2 * n, budget);
        auto odd = exact_chromatic(g, OracleMode::ODD, 2 * n, budget);
        bool ok = chi.status == OracleStatus::Optimal && chi.value == n &&
                  odd.status == OracleStatus::Optimal && odd.value >= n + 2;
        suite.add("CP_" + std::to_string(n), "odd needs chi+2 = " + std::to_string(n + 2), ok,
                  "chi=" + std::to_string(chi.value) + ", odd=" + std::to_string(odd.value),
                  row.elapsed_ms());
    }
}

void suite_modechain(Suite& suite, std::uint64_t) {
    RowTimer timer;
    int checked = 0;
    std::string fail;
    for (const Graph& g : connected_graphs_up_to(6)) {
        int cap = std::max(1, g.vertex_count);
        auto chi = exact_chromatic(g, OracleMode::PROPER, cap);
        auto odd = exact_chromatic(g, OracleMode::ODD, cap);
        auto pcf = exact_chromatic(g, OracleMode::PCF, cap);
        bool solved = chi.status == OracleStatus::Optimal &&
                      odd.status == OracleStatus::Optimal && pcf.status == OracleStatus::Optimal;
        bool chain = solved && chi.value <= odd.value && odd.value <= pcf.value;
        bool collapse = !find_claw(g) ? (solved && odd.value == pcf.value) : true;
        if (!(chain && collapse)) {
            fail = "violation on a graph with n=" + std::to_string(g.vertex_count);
            break;
        }
        ++checked;
    }
    suite.add("all connected graphs n<=6", "chi <= odd <= pcf, equal when claw-free",
              fail.empty() && checked > 0,
              fail.empty() ? std::to_string(checked) + " instances" : fail, timer.elapsed_ms());
}

}  // namespace

std::vector<std::string> reproduce_suite_names() {
    return {"clawfree", "quasiline", "lemmas",      "biconvex", "permutation",
            "convexround", "subdivision", "gk",     "hk",       "cpn",
            "modechain", "all"};
}

std::vector<ReproduceRow> run_reproduce_suite(const std::string& suite_name,
                                              std::uint64_t seed) {
    std::vector<ReproduceRow> rows;
    Suite suite{rows, suite_name};
    auto run_one = [&](const std::string& name) {
        suite.suite_name = name;
        if (name == "clawfree") suite_clawfree(suite, seed);
        else if (name == "quasiline") suite_quasiline(suite, seed);
        else if (name == "lemmas") suite_lemmas(suite, seed);
        else if (name == "biconvex") suite_biconvex(suite, seed);
        else if (name == "permutation") suite_permutation(suite, seed);
        else if (name == "convexround") suite_convexround(suite, seed);
        else if (name == "subdivision") suite_subdivision(suite, seed);
        else if (name == "gk") suite_gk(suite, seed);
        else if (name == "hk") suite_hk(suite, seed);
        else if (name == "cpn") suite_cpn(suite, seed);
        else if (name == "modechain") suite_modechain(suite, seed);
        else throw InvalidParameter("unknown suite " + name);
    };
    if (suite_name == "all") {
        for (const auto& name : reproduce_suite_names())
            if (name != "all") run_one(name);
    } else {
        run_one(suite_name);
    }
    return rows;
}

}  // namespace pcf
