#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

struct Claw {
    int center;
    std::array<int, 3> leaves;
};

// Lowest-index vertex with three pairwise non-adjacent neighbors, or absent
// when every neighborhood has independence number at most 2.
std::optional<Claw> find_claw(const Graph& g);

// Partition of N(v) into two cliques.
struct CliquePartition {
    std::vector<int> side1, side2;
};

// Computed by 2-coloring the complement of the subgraph induced on N(v);
// throws NotQuasiLine(v) when that complement has an odd cycle.
CliquePartition clique_partition(const Graph& g, int v);

// w has two non-adjacent, differently colored neighbors whose colors are
// exactly its odd-witness set.
bool is_critical(const Graph& g, const Coloring& c, int w);

// Colors i outside c(N[u]) such that no neighbor w of u has odd-witness set
// {c(u), i}; recoloring u with such an i never creates new unhappy vertices.
std::vector<int> safe_colors(const Graph& g, const Coloring& c, int u);

struct RecolorStep {
    int picked;                                 // unhappy vertex driving the step
    std::vector<std::array<int, 3>> recolored;  // (vertex, old color, new color)
    int core_before = 0;
    int core_after = 0;
};

// One step per outer iteration; the core size strictly decreases.
struct RecolorTrace {
    std::vector<RecolorStep> steps;
};

std::string trace_to_json_lines(const RecolorTrace& trace);

// Proper conflict-free coloring with palette Delta(G)+6 for claw-free
// inputs. Throws NotClawFree when a claw exists and
// AlgorithmInvariantViolated when the guaranteed recoloring step cannot be
// found (a bug or a misclassified input, never silently worked around).
std::pair<Coloring, RecolorTrace> pcf_color_claw_free(const Graph& g);

// Same loop with palette Delta(G)+4 for graphs whose every neighborhood
// splits into two cliques. Throws NotQuasiLine otherwise.
std::pair<Coloring, RecolorTrace> pcf_color_quasi_line(const Graph& g);

}  // namespace pcf
