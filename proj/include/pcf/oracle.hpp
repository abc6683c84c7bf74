#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"

namespace pcf {

enum class OracleMode { PROPER, ODD, PCF };

enum class OracleStatus { Optimal, InfeasibleAtMax, Exhausted };

// Node-count budget rather than wall time, so Exhausted outcomes reproduce.
struct OracleBudget {
    std::uint64_t max_nodes = UINT64_MAX;
};

struct OracleResult {
    OracleStatus status = OracleStatus::InfeasibleAtMax;
    int value = 0;  // optimal color count when status == Optimal
    std::optional<Coloring> certificate;
    std::uint64_t nodes_explored = 0;
    int infeasible_below = 0;  // every t <= this was exhausted and infeasible
};

// Smallest t <= max_t admitting a valid mode-coloring, by backtracking in
// degeneracy order with canonical color symmetry breaking. A vertex whose
// closed neighborhood is fully colored and still witness-free prunes the
// branch (skipped in PROPER mode).
OracleResult exact_chromatic(const Graph& g, OracleMode mode, int max_t,
                             OracleBudget budget = {});

enum class WitnessKind { UNIQUE, ODD };

struct OneSidedResult {
    OracleStatus status = OracleStatus::InfeasibleAtMax;
    bool feasible = false;
    std::optional<std::vector<int>> certificate;  // colors per a_order position
    std::uint64_t nodes_explored = 0;
};

// Does some coloring of the A side with at most t colors give every
// non-isolated B vertex a witness of the stated kind? A is colored along
// a_order; B neighborhoods must lie inside A.
OneSidedResult one_sided_feasible(const Graph& g, const std::vector<int>& a_order,
                                  const std::vector<int>& b_side, int t, WitnessKind kind,
                                  OracleBudget budget = {});

}  // namespace pcf
