#pragma once

#include <map>
#include <vector>

#include "epg/graph.hpp"
#include "epg/verify.hpp"

namespace epg {

// Vertex -> set of closed integer intervals on one line.
struct IntervalRepresentation {
    std::map<Vertex, std::vector<std::pair<coord_t, coord_t>>> intervals;
};

struct InvalidOrder : std::runtime_error {
    explicit InvalidOrder(const std::string& w) : std::runtime_error(w) {}
};

// Staircases with family_count-1 bends from a global edge clique cover.
Representation construct_from_global_cover(const Graph& g, const CliqueCover& cover);

// Snakes over one reserved vertical lane per clique; at most
// 2*local_number-2 bends per path.
Representation construct_from_local_cover(const Graph& g, const CliqueCover& cover);

// Insertion along a degeneracy order; at most 2d-1 bends per path
// (1 bend on forests).
Representation construct_degeneracy(const Graph& g, const DegeneracyOrder& order);

// Insertion along a k-tree build sequence; at most 2k-2 bends per path
// for k >= 3, delegating k <= 2 to the other constructors.
Representation construct_treewidth(const Graph& g, const BuildSequence& seq);

// Strings the used grid-lines onto one line; every path becomes
// bends+1 intervals. Two intervals overlap iff they share positive length.
IntervalRepresentation to_interval_representation(const Representation& rep);

// Overlap graph of an interval representation (positive-length overlaps).
Graph interval_overlap_graph(const IntervalRepresentation& ir);

} // namespace epg
