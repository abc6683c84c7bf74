#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcf/biconvex_types.hpp"
#include "pcf/coloring.hpp"
#include "pcf/graph.hpp"
#include "pcf/verify.hpp"

namespace pcf {

struct PermutationRep;

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Everything from '#' to end of line is a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 ASCII encoding, including the ">>graph6<<" prefix and the 4-byte
// long form used from 63 vertices on. Read-only.
Graph read_graph6(const std::string& line);

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& rep, Mode mode);

std::string layout_to_json(const BipartiteLayout& layout);
BipartiteLayout layout_from_json(const std::string& text);

std::string nested_to_json(const NestedFamily& family);
NestedFamily nested_from_json(const std::string& text);

std::string permutation_to_json(const PermutationRep& rep);
PermutationRep permutation_from_json(const std::string& text);

std::string circular_order_to_json(const std::vector<int>& order);
std::vector<int> circular_order_from_json(const std::string& text);

}  // namespace pcf
