#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcf/graph.hpp"

namespace pcf {

// All connected graphs on at most max_n vertices, one per isomorphism
// class (max_n <= 8).
std::vector<Graph> connected_graphs_up_to(int max_n);

// Canonical 64-bit key of a graph on at most 8 vertices; equal exactly for
// isomorphic graphs.
std::uint64_t canonical_key(const Graph& g);

struct ReproduceRow {
    std::string suite;
    std::string label;
    std::string bound;   // symbolic bound with its numeric instantiation
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

std::vector<std::string> reproduce_suite_names();

// Runs one desk-scale experiment suite (or "all") and reports one row per
// instance group; every row must pass.
std::vector<ReproduceRow> run_reproduce_suite(const std::string& suite, std::uint64_t seed);

}  // namespace pcf
