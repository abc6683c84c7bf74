#include "pcf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pcf/errors.hpp"
#include "pcf/reduction.hpp"

namespace pcf {

using nlohmann::json;

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (ls >> n) {
                if (!(ls >> m)) throw Error("edge list header must be \"n m\"");
            }
            continue;
        }
        long long u, v;
        if (ls >> u) {
            if (!(ls >> v)) throw Error("edge line must be \"u v\"");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    }
    if (n < 0) throw Error("missing edge list header");
    if (static_cast<long long>(edges.size()) != m)
        throw Error("edge list header promises " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
    return build_graph(edges, static_cast<int>(n));
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    auto es = g.edges();
    out << g.vertex_count << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

Graph read_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw Error("empty graph6 string");
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> long long {
        if (i >= line.size()) throw Error("truncated graph6 string");
        long long b = static_cast<unsigned char>(line[i]) - 63;
        if (b < 0 || b > 63) throw Error("invalid graph6 character");
        return b;
    };
    long long n;
    if (line[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (line.size() > 1 && line[1] != '~') {
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        throw Error("graph6 strings beyond 258047 vertices are not supported");
    }
    std::vector<std::pair<int, int>> edges;
    long long bits = n * (n - 1) / 2;
    long long bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            long long b = byte(pos + bit_index / 6);
            int shift = 5 - static_cast<int>(bit_index % 6);
            if ((b >> shift) & 1) edges.emplace_back(i, j);
            ++bit_index;
        }
    if (pos + (bits + 5) / 6 != line.size())
        throw Error("graph6 string has trailing or missing bytes");
    return build_graph(edges, static_cast<int>(n));
}

std::string coloring_to_json(const Coloring& c) {
    json j;
    j["palette_size"] = c.palette_size;
    j["colors"] = c.colors;
    return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
    json j = json::parse(text);
    Coloring c;
    c.palette_size = j.at("palette_size").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
    return c;
}

std::string report_to_json(const VerificationReport& rep, Mode mode) {
    json j;
    j["proper"] = rep.is_proper;
    j["mode"] = mode == Mode::PCF ? "pcf" : "odd";
    j["core"] = rep.core;
    json w = json::object();
    for (std::size_t v = 0; v < rep.witness_sets.size(); ++v)
        w[std::to_string(v)] = rep.witness_sets[v];
    j["witnesses"] = w;
    j["colors_used"] = rep.colors_used;
    return j.dump();
}

std::string layout_to_json(const BipartiteLayout& layout) {
    json j;
    j["n"] = layout.graph.vertex_count;
    j["side_a"] = layout.side_a;
    j["side_b"] = layout.side_b;
    j["order_a"] = layout.order_a;
    j["order_b"] = layout.order_b;
    json edges = json::array();
    for (auto [u, v] : layout.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump();
}

BipartiteLayout layout_from_json(const std::string& text) {
    json j = json::parse(text);
    BipartiteLayout layout;
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    layout.graph = build_graph(edges, n);
    layout.side_a = j.at("side_a").get<std::vector<int>>();
    layout.side_b = j.at("side_b").get<std::vector<int>>();
    layout.order_a = j.at("order_a").get<std::vector<int>>();
    layout.order_b = j.at("order_b").get<std::vector<int>>();
    return layout;
}

std::string nested_to_json(const NestedFamily& family) {
    json j;
    j["ground"] = family.ground_size;
    j["members"] = family.members;
    return j.dump();
}

NestedFamily nested_from_json(const std::string& text) {
    json j = json::parse(text);
    NestedFamily f;
    f.ground_size = j.at("ground").get<int>();
    f.members = j.at("members").get<std::vector<std::vector<int>>>();
    return f;
}

std::string permutation_to_json(const PermutationRep& rep) {
    json j;
    j["n"] = rep.n;
    j["pos1"] = rep.pos1;
    j["pos2"] = rep.pos2;
    return j.dump();
}

PermutationRep permutation_from_json(const std::string& text) {
    json j = json::parse(text);
    PermutationRep rep;
    rep.n = j.at("n").get<int>();
    rep.pos1 = j.at("pos1").get<std::vector<int>>();
    rep.pos2 = j.at("pos2").get<std::vector<int>>();
    return rep;
}

std::string circular_order_to_json(const std::vector<int>& order) {
    json j;
    j["circular_order"] = order;
    return j.dump();
}

std::vector<int> circular_order_from_json(const std::string& text) {
    json j = json::parse(text);
    return j.at("circular_order").get<std::vector<int>>();
}

}  // namespace pcf
