#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "epg/geometry.hpp"
#include "epg/graph.hpp"

namespace epg {

// Assignment of one grid path to every vertex of a target graph.
struct Representation {
    std::map<Vertex, GridPath> paths;
};

struct VerifyReport {
    bool ok = false;
    std::size_t max_bends = 0;
    std::vector<Edge> missing_edges; // in target, not realized
    std::vector<Edge> extra_edges;   // realized, not in target
    std::map<Vertex, std::size_t> per_vertex_bends;
};

struct VertexMismatch : std::runtime_error {
    explicit VertexMismatch(const std::string& w) : std::runtime_error(w) {}
};

enum class FourCycleClass { Frame, TruePie, FalsePie, Other };

struct NotInducedFourCycle : std::runtime_error {
    explicit NotInducedFourCycle(const std::string& w) : std::runtime_error(w) {}
};

// Graph with an edge wherever two paths share at least one grid-edge.
Graph intersection_graph(const Representation& rep);

// Exact-match check against a target graph within a bend budget.
VerifyReport verify_representation(const Representation& rep, const Graph& target,
                                   std::size_t budget);

// Classifies a single-bend representation of an induced 4-cycle as a
// frame, true pie, or false pie.
FourCycleClass classify_4cycle(const Representation& rep,
                               const std::array<Vertex, 4>& cycle);

// Order-preserving compression of all used coordinates into
// [0, number of distinct coordinates); the intersection structure is
// unchanged.
Representation compress_coordinates(const Representation& rep);

} // namespace epg
