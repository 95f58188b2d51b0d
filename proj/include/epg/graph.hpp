#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epg {

using Vertex = std::string;
using Edge = std::pair<Vertex, Vertex>; // stored with first < second

inline Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("loop edge");
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

// Finite simple undirected graph with string vertex labels.
class Graph {
public:
    void add_vertex(const Vertex& v) { adj_.try_emplace(v); }
    void add_edge(const Vertex& a, const Vertex& b) {
        Edge e = make_edge(a, b);
        add_vertex(e.first);
        add_vertex(e.second);
        adj_[e.first].insert(e.second);
        adj_[e.second].insert(e.first);
    }
    bool has_vertex(const Vertex& v) const { return adj_.count(v) != 0; }
    bool has_edge(const Vertex& a, const Vertex& b) const {
        auto it = adj_.find(a);
        return it != adj_.end() && it->second.count(b) != 0;
    }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const {
        std::size_t d = 0;
        for (const auto& [v, ns] : adj_) d += ns.size();
        return d / 2;
    }
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (const auto& [v, ns] : adj_) out.push_back(v);
        return out;
    }
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const auto& [v, ns] : adj_)
            for (const auto& w : ns)
                if (v < w) out.emplace_back(v, w);
        return out;
    }
    const std::set<Vertex>& neighbors(const Vertex& v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::out_of_range("unknown vertex: " + v);
        return it->second;
    }
    std::size_t degree(const Vertex& v) const { return neighbors(v).size(); }
    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& [v, ns] : adj_) d = std::max(d, ns.size());
        return d;
    }
    Graph induced(const std::set<Vertex>& keep) const {
        Graph g;
        for (const auto& v : keep)
            if (has_vertex(v)) g.add_vertex(v);
        for (const auto& [v, ns] : adj_)
            if (keep.count(v))
                for (const auto& w : ns)
                    if (v < w && keep.count(w)) g.add_edge(v, w);
        return g;
    }
    bool is_clique(const std::set<Vertex>& vs) const {
        for (auto it = vs.begin(); it != vs.end(); ++it)
            for (auto jt = std::next(it); jt != vs.end(); ++jt)
                if (!has_edge(*it, *jt)) return false;
        return true;
    }
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::map<Vertex, std::set<Vertex>> adj_;
};

// A sequence of families; each family is a set of pairwise vertex-disjoint
// cliques. Every edge of the covered graph lies inside some clique.
struct CliqueCover {
    std::vector<std::vector<std::set<Vertex>>> families;

    std::size_t family_count() const { return families.size(); }
    // Max number of cliques over all families containing one vertex.
    std::size_t local_number() const;
};

// Throws std::invalid_argument when the cover is not valid for g.
void validate_cover(const Graph& g, const CliqueCover& cover);

struct DegeneracyOrder {
    std::vector<Vertex> order; // insertion order; back-neighbors precede
    std::size_t d = 0;         // max back-degree
};

struct BuildSequence {
    std::set<Vertex> base;                                  // (k+1)-clique
    std::vector<std::pair<Vertex, std::set<Vertex>>> steps; // (vertex, k-clique)
    std::size_t k = 0;
};

struct EdgeColoring {
    std::map<Edge, int> color;
    int color_count = 0;
};

Graph gen_complete_bipartite(int m, int n);
Graph gen_octahedron();

// Induced subgraph of the triangular lattice. Vertices t_<i>_<j> for
// 0 <= i <= rows, 0 <= j < cols; adjacency (i,j)~(i,j+1),(i+1,j),(i+1,j-1).
Graph gen_triangular_grid(int rows, int cols,
                          const std::optional<std::set<Vertex>>& mask = std::nullopt);
std::string triangular_vertex(int i, int j);

// The 3-family cover of a triangular-grid patch: upward triangles classed
// by (i-j) mod 3, leftover edges appended as 2-cliques of their own class.
CliqueCover triangular_grid_cover(const Graph& g);

Graph gen_line_graph(const Graph& g); // vertices labeled "a|b" per edge

// Min-degree peeling; order is the reversed removal order.
DegeneracyOrder degeneracy_order(const Graph& g);

// Proper edge coloring with at most max_degree+1 colors (fan recoloring).
EdgeColoring edge_coloring(const Graph& g);

// Edge clique cover minimizing the number of families: exact search for
// graphs with <= 10 vertices, greedy otherwise. A valid hint is returned
// unchanged.
CliqueCover clique_cover_global(const Graph& g,
                                const std::optional<CliqueCover>& hint = std::nullopt);

// Cover with small maximum per-vertex clique membership; exact for small
// graphs, greedy fallback. Families are packed to stay vertex-disjoint.
CliqueCover clique_cover_local(const Graph& g);

struct WidthExceeded : std::runtime_error {
    explicit WidthExceeded(const std::string& w) : std::runtime_error(w) {}
};
struct InvalidSequence : std::runtime_error {
    explicit InvalidSequence(const std::string& w) : std::runtime_error(w) {}
};

// Build sequence of a k-tree that is a supergraph of g. A user-supplied
// sequence is validated; otherwise a min-fill elimination heuristic is
// used and WidthExceeded thrown when it cannot achieve width k.
BuildSequence ktree_sequence(const Graph& g, std::size_t k,
                             const std::optional<BuildSequence>& user_seq = std::nullopt);

// The k-tree described by a build sequence.
Graph ktree_graph(const BuildSequence& seq);

} // namespace epg
