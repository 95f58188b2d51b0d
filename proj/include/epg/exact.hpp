#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "epg/graph.hpp"
#include "epg/verify.hpp"

namespace epg {

struct SearchBudget {
    std::size_t max_k = 1;          // bend bound to search up to
    coord_t grid_width = 0;         // lines per orientation; 0 = auto
    std::uint64_t node_limit = 50'000'000;
    double time_limit_seconds = 120.0;
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& w) : std::runtime_error(w) {}
};

// Interval-graph (0-bend) recognition via maximal cliques and a
// backtracking consecutive-ones ordering. Throws TooLarge beyond the
// clique cap.
bool is_interval_graph(const Graph& g);

struct ExactResult {
    enum Kind { Exact, LowerBoundOnly, Exhausted } kind = Exhausted;
    std::size_t k = 0;
    std::optional<Representation> witness; // for Exact
};

// Exhaustive search for the bend-number of a tiny graph: for k = 0,1,...
// try to place one path per vertex (highest degree first, first path
// canonical) on the normalized grid, pruning on adjacency violations.
ExactResult exact_bend_number(const Graph& g, const SearchBudget& budget);

} // namespace epg
