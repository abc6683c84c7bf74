#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace pcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error {
    using Error::Error;
};

struct SelfLoop : Error {
    using Error::Error;
};

struct InvalidVertex : Error {
    using Error::Error;
};

struct InvalidColor : Error {
    using Error::Error;
};

struct InvalidOrder : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

// A claw witness: a center vertex with three pairwise non-adjacent neighbors.
struct NotClawFree : Error {
    int center;
    std::array<int, 3> leaves;
    NotClawFree(int c, std::array<int, 3> l)
        : Error("graph is not claw-free: vertex " + std::to_string(c) +
                " has independent neighbors " + std::to_string(l[0]) + "," +
                std::to_string(l[1]) + "," + std::to_string(l[2])),
          center(c), leaves(l) {}
};

struct NotQuasiLine : Error {
    int vertex;
    explicit NotQuasiLine(int v)
        : Error("neighborhood of vertex " + std::to_string(v) +
                " does not split into two cliques"),
          vertex(v) {}
};

// The search the theory guarantees to succeed failed: either the input was
// misclassified or there is a bug. Never downgraded to a fallback.
struct AlgorithmInvariantViolated : Error {
    using Error::Error;
};

struct InvalidLayout : Error {
    int vertex = -1;
    explicit InvalidLayout(const std::string& msg, int v = -1) : Error(msg), vertex(v) {}
};

struct NotNested : Error {
    int member_i = -1, member_j = -1;
    NotNested(int i, int j)
        : Error("family is not nested: members " + std::to_string(i) + " and " +
                std::to_string(j) + " intersect but neither contains the other"),
          member_i(i), member_j(j) {}
};

struct ImproperBase : Error {
    using Error::Error;
};

struct SideColorerContractViolated : Error {
    using Error::Error;
};

struct LayoutDerivationFailed : Error {
    using Error::Error;
};

struct NotConvexRound : Error {
    int vertex;
    explicit NotConvexRound(int v)
        : Error("neighborhood of vertex " + std::to_string(v) +
                " is not a contiguous arc in the circular order"),
          vertex(v) {}
};

struct InvalidBaseColoring : Error {
    using Error::Error;
};

struct NotSpanningTree : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

}  // namespace pcf
