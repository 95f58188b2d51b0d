#include "epg/exact.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace epg {

namespace {

// Bron-Kerbosch with pivoting.
void maximal_cliques(const Graph& g, std::set<Vertex>& R, std::set<Vertex> P,
                     std::set<Vertex> X, std::vector<std::set<Vertex>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    Vertex pivot;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](const Vertex& u) {
        std::size_t c = 0;
        for (const auto& w : g.neighbors(u))
            if (P.count(w)) ++c;
        if (!have || c > best) {
            pivot = u;
            best = c;
            have = true;
        }
    };
    for (const auto& u : P) consider(u);
    for (const auto& u : X) consider(u);
    std::vector<Vertex> ext;
    for (const auto& u : P)
        if (u != pivot && !g.has_edge(pivot, u)) ext.push_back(u);
    if (P.count(pivot)) ext.push_back(pivot);
    for (const auto& u : ext) {
        std::set<Vertex> P2, X2;
        for (const auto& w : g.neighbors(u)) {
            if (P.count(w)) P2.insert(w);
            if (X.count(w)) X2.insert(w);
        }
        R.insert(u);
        maximal_cliques(g, R, P2, X2, out);
        R.erase(u);
        P.erase(u);
        X.insert(u);
    }
}

// Backtracking consecutive-ones check over clique orderings.
bool consecutive_ordering(const std::vector<std::set<Vertex>>& cliques,
                          const std::vector<Vertex>& vertices) {
    const std::size_t m = cliques.size();
    std::vector<bool> used(m, false);
    std::map<Vertex, int> state; // 0 unseen, 1 open, 2 closed
    for (const auto& v : vertices) state[v] = 0;

    std::function<bool(std::size_t)> rec = [&](std::size_t placed) {
        if (placed == m) return true;
        for (std::size_t c = 0; c < m; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (const auto& v : cliques[c])
                if (state.at(v) == 2) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<std::pair<Vertex, int>> undo;
            for (const auto& v : cliques[c])
                if (state.at(v) == 0) {
                    undo.emplace_back(v, 0);
                    state[v] = 1;
                }
            for (auto& [v, s] : state)
                if (s == 1 && !cliques[c].count(v)) {
                    undo.emplace_back(v, 1);
                    s = 2;
                }
            used[c] = true;
            if (rec(placed + 1)) return true;
            used[c] = false;
            for (auto& [v, s] : undo) state[v] = s;
        }
        return false;
    };
    return rec(0);
}

} // namespace

bool is_interval_graph(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<std::set<Vertex>> cliques;
    std::set<Vertex> R, P, X;
    for (const auto& v : g.vertices()) P.insert(v);
    maximal_cliques(g, R, P, X, cliques);
    if (cliques.size() > 12)
        throw TooLarge("too many maximal cliques for the ordering check");
    return consecutive_ordering(cliques, g.vertices());
}

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const Graph& target;
    std::vector<Vertex> order; // highest degree first
    std::uint64_t nodes = 0;
    std::uint64_t node_limit = 0;
    Clock::time_point deadline;
    bool capped = false;

    std::vector<std::vector<GridPath>> candidates; // per level

    bool consistent(const std::vector<GridPath>& placed, const GridPath& cand) const {
        const Vertex& v = order[placed.size()];
        for (std::size_t i = 0; i < placed.size(); ++i) {
            bool want = target.has_edge(order[i], v);
            if (edge_intersects(placed[i], cand) != want) return false;
        }
        return true;
    }

    bool dfs(std::vector<GridPath>& placed, Representation& out) {
        if (placed.size() == order.size()) {
            for (std::size_t i = 0; i < order.size(); ++i)
                out.paths.emplace(order[i], placed[i]);
            return true;
        }
        for (const auto& cand : candidates[placed.size()]) {
            if (++nodes > node_limit || (nodes % 16384 == 0 && Clock::now() > deadline)) {
                capped = true;
                return false;
            }
            if (!consistent(placed, cand)) continue;
            placed.push_back(cand);
            if (dfs(placed, out)) return true;
            placed.pop_back();
            if (capped) return false;
        }
        return false;
    }
};

// All canonical paths with at most max_bends bends inside [0,w) x [0,w).
std::vector<GridPath> all_paths(std::size_t max_bends, coord_t w) {
    std::vector<GridPath> out;
    std::vector<GridPoint> cs;
    std::function<void(bool)> extend = [&](bool horizontal) {
        if (cs.size() >= 2) out.push_back(GridPath(cs));
        if (cs.size() >= max_bends + 2) return;
        GridPoint last = cs.back();
        if (horizontal) {
            for (coord_t x = 0; x < w; ++x) {
                if (x == last.x) continue;
                cs.push_back(GridPoint{x, last.y});
                extend(false);
                cs.pop_back();
            }
        } else {
            for (coord_t y = 0; y < w; ++y) {
                if (y == last.y) continue;
                cs.push_back(GridPoint{last.x, y});
                extend(true);
                cs.pop_back();
            }
        }
    };
    for (coord_t x = 0; x < w; ++x)
        for (coord_t y = 0; y < w; ++y) {
            cs = {GridPoint{x, y}};
            extend(true); // horizontal-first shapes, bends alternate after
            for (coord_t y2 = 0; y2 < w; ++y2) {
                if (y2 == y) continue;
                cs = {GridPoint{x, y}, GridPoint{x, y2}};
                extend(true); // vertical-first shapes
                cs.pop_back();
            }
        }
    return out;
}

// First-path candidates: start pinned mid-window, first segment pointing
// right, first turn (if any) upward.
bool canonical_first(const GridPath& p, coord_t w) {
    const auto& cs = p.corners();
    if (cs.front().x != w / 2 || cs.front().y != w / 2) return false;
    if (cs[1].y != cs[0].y || cs[1].x <= cs[0].x) return false;
    if (cs.size() >= 3 && cs[2].y < cs[1].y) return false;
    return true;
}

enum class LevelOutcome { Found, Empty, Capped };

LevelOutcome search_level(const Graph& g, std::size_t k, coord_t w,
                          const SearchBudget& budget, Representation& out) {
    Searcher s{g};
    s.order = g.vertices();
    std::sort(s.order.begin(), s.order.end(), [&](const Vertex& a, const Vertex& b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    s.node_limit = budget.node_limit;
    s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget.time_limit_seconds));

    std::vector<GridPath> all = all_paths(k, w);
    std::stable_sort(all.begin(), all.end(), [](const GridPath& a, const GridPath& b) {
        return a.bends() < b.bends();
    });
    s.candidates.resize(s.order.size(), all);
    if (!s.candidates.empty()) {
        std::vector<GridPath> first;
        for (const auto& p : all)
            if (canonical_first(p, w)) first.push_back(p);
        s.candidates[0] = std::move(first);
    }

    std::vector<GridPath> placed;
    if (s.dfs(placed, out)) return LevelOutcome::Found;
    return s.capped ? LevelOutcome::Capped : LevelOutcome::Empty;
}

} // namespace

ExactResult exact_bend_number(const Graph& g, const SearchBudget& budget) {
    ExactResult res;
    if (g.vertex_count() == 0) {
        res.kind = ExactResult::Exact;
        res.k = 0;
        res.witness = Representation{};
        return res;
    }
    const coord_t n = static_cast<coord_t>(g.vertex_count());
    bool clean = true;
    for (std::size_t k = 0; k <= budget.max_k; ++k) {
        coord_t full = budget.grid_width > 0
                           ? budget.grid_width
                           : 2 * static_cast<coord_t>(k + 1) * n + 2;
        Representation rep;
        // cheap pass over a small window first, then the sound full window
        coord_t small = std::min<coord_t>(full, n + 3);
        LevelOutcome got = search_level(g, k, small, budget, rep);
        if (got != LevelOutcome::Found && small < full)
            got = search_level(g, k, full, budget, rep);
        if (got == LevelOutcome::Found) {
            VerifyReport check = verify_representation(rep, g, k);
            if (!check.ok) throw std::logic_error("search produced an invalid witness");
            if (clean) {
                res.kind = ExactResult::Exact;
                res.k = k;
                res.witness = rep;
            } else {
                res.kind = ExactResult::Exhausted;
            }
            return res;
        }
        if (got == LevelOutcome::Capped) clean = false;
    }
    if (clean) {
        res.kind = ExactResult::LowerBoundOnly;
        res.k = budget.max_k + 1;
    } else {
        res.kind = ExactResult::Exhausted;
    }
    return res;
}

} // namespace epg
