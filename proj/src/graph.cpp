#include "epg/graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace epg {

std::size_t CliqueCover::local_number() const {
    std::map<Vertex, std::size_t> count;
    for (const auto& fam : families)
        for (const auto& cl : fam)
            for (const auto& v : cl) ++count[v];
    std::size_t best = 0;
    for (const auto& [v, c] : count) best = std::max(best, c);
    return best;
}

void validate_cover(const Graph& g, const CliqueCover& cover) {
    for (const auto& fam : cover.families) {
        std::set<Vertex> seen;
        for (const auto& cl : fam) {
            if (cl.empty()) throw std::invalid_argument("cover: empty clique");
            for (const auto& v : cl) {
                if (!g.has_vertex(v))
                    throw std::invalid_argument("cover: unknown vertex " + v);
                if (!seen.insert(v).second)
                    throw std::invalid_argument("cover: family not vertex-disjoint at " + v);
            }
            if (!g.is_clique(cl))
                throw std::invalid_argument("cover: set is not a clique of the graph");
        }
    }
    for (const auto& [a, b] : g.edges()) {
        bool covered = false;
        for (const auto& fam : cover.families) {
            for (const auto& cl : fam)
                if (cl.count(a) && cl.count(b)) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (!covered)
            throw std::invalid_argument("cover: edge {" + a + "," + b + "} uncovered");
    }
}

Graph gen_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("K_{m,n} needs m,n >= 1");
    Graph g;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            g.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
    return g;
}

Graph gen_octahedron() {
    Graph g;
    const std::vector<Vertex> vs = {"a", "A", "b", "B", "c", "C"};
    auto mate = [](const Vertex& v) {
        std::string m = v;
        m[0] = std::isupper(static_cast<unsigned char>(m[0])) ? std::tolower(m[0])
                                                              : std::toupper(m[0]);
        return m;
    };
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[j] != mate(vs[i])) g.add_edge(vs[i], vs[j]);
    return g;
}

std::string triangular_vertex(int i, int j) {
    return "t" + std::to_string(i) + "_" + std::to_string(j);
}

Graph gen_triangular_grid(int rows, int cols, const std::optional<std::set<Vertex>>& mask) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("triangular grid needs rows,cols >= 1");
    auto keep = [&](int i, int j) {
        if (i < 0 || i > rows || j < 0 || j >= cols) return false;
        return !mask || mask->count(triangular_vertex(i, j)) != 0;
    };
    Graph g;
    for (int i = 0; i <= rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!keep(i, j)) continue;
            g.add_vertex(triangular_vertex(i, j));
            if (keep(i, j + 1)) g.add_edge(triangular_vertex(i, j), triangular_vertex(i, j + 1));
            if (keep(i + 1, j)) g.add_edge(triangular_vertex(i, j), triangular_vertex(i + 1, j));
            if (keep(i + 1, j - 1))
                g.add_edge(triangular_vertex(i, j), triangular_vertex(i + 1, j - 1));
        }
    return g;
}

CliqueCover triangular_grid_cover(const Graph& g) {
    // Recover lattice coordinates from the labels.
    auto parse = [](const Vertex& v) {
        auto us = v.find('_');
        return std::pair<int, int>{std::stoi(v.substr(1, us - 1)), std::stoi(v.substr(us + 1))};
    };
    CliqueCover cover;
    cover.families.resize(3);
    std::set<Edge> covered;
    for (const auto& v : g.vertices()) {
        auto [i, j] = parse(v);
        Vertex right = triangular_vertex(i, j + 1);
        Vertex below = triangular_vertex(i + 1, j);
        if (g.has_vertex(right) && g.has_vertex(below) && g.has_edge(v, right) &&
            g.has_edge(v, below)) {
            int fam = ((i - j) % 3 + 3) % 3;
            cover.families[fam].push_back({v, right, below});
            covered.insert(make_edge(v, right));
            covered.insert(make_edge(v, below));
            covered.insert(make_edge(right, below));
        }
    }
    // Edges whose upward triangle is incomplete go into that triangle's
    // class; the class is free at both endpoints (see the disjointness
    // argument in the cover checker's tests).
    for (const auto& e : g.edges()) {
        if (covered.count(e)) continue;
        auto [i1, j1] = parse(e.first);
        auto [i2, j2] = parse(e.second);
        int ti, tj;
        if (i1 == i2) { // horizontal edge, triangle at (i, min j)
            ti = i1;
            tj = std::min(j1, j2);
        } else if (j1 == j2) { // vertical edge, triangle at (min i, j)
            ti = std::min(i1, i2);
            tj = j1;
        } else { // diagonal (i,j+1)-(i+1,j), triangle at (min i, min j)
            ti = std::min(i1, i2);
            tj = std::min(j1, j2);
        }
        int fam = ((ti - tj) % 3 + 3) % 3;
        cover.families[fam].push_back({e.first, e.second});
    }
    while (!cover.families.empty() && cover.families.back().empty())
        cover.families.pop_back();
    return cover;
}

Graph gen_line_graph(const Graph& g) {
    Graph lg;
    auto es = g.edges();
    auto label = [](const Edge& e) { return e.first + "|" + e.second; };
    for (const auto& e : es) lg.add_vertex(label(e));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& a = es[i];
            const auto& b = es[j];
            if (a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second)
                lg.add_edge(label(a), label(b));
        }
    return lg;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    std::map<Vertex, std::set<Vertex>> adj;
    for (const auto& v : g.vertices()) adj[v] = g.neighbors(v);
    std::vector<Vertex> removal;
    std::size_t d = 0;
    while (!adj.empty()) {
        auto best = adj.begin();
        for (auto it = adj.begin(); it != adj.end(); ++it)
            if (it->second.size() < best->second.size()) best = it;
        d = std::max(d, best->second.size());
        Vertex v = best->first;
        for (const auto& w : best->second) adj[w].erase(v);
        adj.erase(v);
        removal.push_back(v);
    }
    DegeneracyOrder out;
    out.order.assign(removal.rbegin(), removal.rend());
    out.d = d;
    return out;
}

namespace {

class MisraGries {
public:
    explicit MisraGries(const Graph& g) : g_(g), max_colors_(static_cast<int>(g.max_degree()) + 1) {}

    EdgeColoring run() {
        for (const auto& e : g_.edges()) color_edge(e.first, e.second);
        EdgeColoring out;
        int used = 0;
        for (const auto& [e, c] : color_) {
            out.color[e] = c;
            used = std::max(used, c + 1);
        }
        out.color_count = used;
        return out;
    }

private:
    const Graph& g_;
    int max_colors_;
    std::map<Edge, int> color_;

    int color_of(const Vertex& a, const Vertex& b) const {
        auto it = color_.find(make_edge(a, b));
        return it == color_.end() ? -1 : it->second;
    }
    void set_color(const Vertex& a, const Vertex& b, int c) { color_[make_edge(a, b)] = c; }
    bool is_free(const Vertex& v, int c) const {
        for (const auto& w : g_.neighbors(v))
            if (color_of(v, w) == c) return false;
        return true;
    }
    int free_color(const Vertex& v) const {
        for (int c = 0; c < max_colors_; ++c)
            if (is_free(v, c)) return c;
        throw std::logic_error("no free color within max degree + 1");
    }

    std::vector<Vertex> maximal_fan(const Vertex& u, const Vertex& v) {
        std::vector<Vertex> fan = {v};
        std::set<Vertex> in_fan = {v};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& w : g_.neighbors(u)) {
                if (in_fan.count(w)) continue;
                int c = color_of(u, w);
                if (c >= 0 && is_free(fan.back(), c)) {
                    fan.push_back(w);
                    in_fan.insert(w);
                    grew = true;
                    break;
                }
            }
        }
        return fan;
    }

    void invert_path(const Vertex& u, int c, int d) {
        // Maximal path from u alternating colors d, c, d, ...; collect
        // first, then flip, so the walk never follows freshly flipped edges.
        std::vector<Edge> path;
        Vertex cur = u, prev;
        int want = d;
        while (true) {
            Vertex next;
            bool found = false;
            for (const auto& w : g_.neighbors(cur))
                if (w != prev && color_of(cur, w) == want) {
                    next = w;
                    found = true;
                    break;
                }
            if (!found) break;
            path.push_back(make_edge(cur, next));
            prev = cur;
            cur = next;
            want = want == d ? c : d;
        }
        for (const auto& e : path) color_[e] = color_[e] == c ? d : c;
    }

    bool fan_prefix_valid(const Vertex& u, const std::vector<Vertex>& fan, std::size_t end) {
        for (std::size_t i = 1; i <= end; ++i) {
            int c = color_of(u, fan[i]);
            if (c < 0 || !is_free(fan[i - 1], c)) return false;
        }
        return true;
    }

    void color_edge(const Vertex& u, const Vertex& v) {
        // Cheap first: the smallest color free at both ends.
        for (int c = 0; c < max_colors_; ++c)
            if (is_free(u, c) && is_free(v, c)) {
                set_color(u, v, c);
                return;
            }
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto fan = maximal_fan(u, v);
            int c = free_color(u);
            int d = free_color(fan.back());
            if (c != d) invert_path(u, c, d);
            for (std::size_t i = 0; i < fan.size(); ++i) {
                if (!is_free(fan[i], d)) continue;
                if (!fan_prefix_valid(u, fan, i)) continue;
                if (!is_free(u, d)) break; // inversion did not end as expected
                for (std::size_t j = 0; j < i; ++j)
                    set_color(u, fan[j], color_of(u, fan[j + 1]));
                set_color(u, fan[i], d);
                return;
            }
        }
        throw std::logic_error("edge coloring did not converge");
    }
};

} // namespace

EdgeColoring edge_coloring(const Graph& g) {
    if (g.edge_count() == 0) return {};
    EdgeColoring ec = MisraGries(g).run();
    // Proper coloring within max_degree + 1 colors; callers rely on it.
    for (const auto& v : g.vertices()) {
        std::set<int> seen;
        for (const auto& w : g.neighbors(v))
            if (!seen.insert(ec.color.at(make_edge(v, w))).second)
                throw std::logic_error("improper edge coloring");
    }
    return ec;
}

namespace {

// Families as partial partitions into cliques, for the exact cover search.
struct FamilyState {
    std::map<Vertex, int> part_of;
    std::vector<std::set<Vertex>> parts;
};

class ExactGlobalCover {
public:
    ExactGlobalCover(const Graph& g, std::size_t k) : g_(g), k_(k) { fams_.resize(k); }

    bool solve(CliqueCover& out) {
        edges_ = g_.edges();
        if (dfs(0)) {
            out.families.clear();
            for (const auto& f : fams_) {
                std::vector<std::set<Vertex>> fam;
                for (const auto& p : f.parts)
                    if (p.size() >= 1) fam.push_back(p);
                out.families.push_back(fam);
            }
            while (!out.families.empty() && out.families.back().empty())
                out.families.pop_back();
            return true;
        }
        return false;
    }

private:
    const Graph& g_;
    std::size_t k_;
    std::vector<FamilyState> fams_;
    std::vector<Edge> edges_;

    bool covered(const Edge& e) const {
        for (const auto& f : fams_) {
            auto iu = f.part_of.find(e.first);
            auto iv = f.part_of.find(e.second);
            if (iu != f.part_of.end() && iv != f.part_of.end() && iu->second == iv->second)
                return true;
        }
        return false;
    }

    bool clique_with(const std::set<Vertex>& part, const Vertex& v) const {
        for (const auto& w : part)
            if (!g_.has_edge(v, w)) return false;
        return true;
    }
    bool clique_union(const std::set<Vertex>& a, const std::set<Vertex>& b) const {
        for (const auto& v : a)
            for (const auto& w : b)
                if (!g_.has_edge(v, w)) return false;
        return true;
    }

    bool dfs(std::size_t edge_idx) {
        while (edge_idx < edges_.size() && covered(edges_[edge_idx])) ++edge_idx;
        if (edge_idx == edges_.size()) return true;
        const Edge& e = edges_[edge_idx];

        std::size_t first_untouched = 0;
        while (first_untouched < k_ && !fams_[first_untouched].parts.empty()) ++first_untouched;

        for (std::size_t f = 0; f < std::min(k_, first_untouched + 1); ++f) {
            FamilyState& fam = fams_[f];
            auto iu = fam.part_of.find(e.first);
            auto iv = fam.part_of.find(e.second);
            if (iu == fam.part_of.end() && iv == fam.part_of.end()) {
                int id = static_cast<int>(fam.parts.size());
                fam.parts.push_back({e.first, e.second});
                fam.part_of[e.first] = id;
                fam.part_of[e.second] = id;
                if (dfs(edge_idx)) return true;
                fam.parts.pop_back();
                fam.part_of.erase(e.first);
                fam.part_of.erase(e.second);
            } else if (iu != fam.part_of.end() && iv == fam.part_of.end()) {
                int id = iu->second;
                if (clique_with(fam.parts[id], e.second)) {
                    fam.parts[id].insert(e.second);
                    fam.part_of[e.second] = id;
                    if (dfs(edge_idx)) return true;
                    fam.parts[id].erase(e.second);
                    fam.part_of.erase(e.second);
                }
            } else if (iu == fam.part_of.end() && iv != fam.part_of.end()) {
                int id = iv->second;
                if (clique_with(fam.parts[id], e.first)) {
                    fam.parts[id].insert(e.first);
                    fam.part_of[e.first] = id;
                    if (dfs(edge_idx)) return true;
                    fam.parts[id].erase(e.first);
                    fam.part_of.erase(e.first);
                }
            } else if (iu->second != iv->second) {
                int a = iu->second, b = iv->second;
                if (clique_union(fam.parts[a], fam.parts[b])) {
                    std::set<Vertex> saved = fam.parts[b];
                    for (const auto& w : saved) {
                        fam.parts[a].insert(w);
                        fam.part_of[w] = a;
                    }
                    fam.parts[b].clear();
                    if (dfs(edge_idx)) return true;
                    for (const auto& w : saved) {
                        fam.parts[a].erase(w);
                        fam.part_of[w] = b;
                    }
                    fam.parts[b] = saved;
                }
            }
        }
        return false;
    }
};

std::set<Vertex> grow_maximal_clique(const Graph& g, std::set<Vertex> clique,
                                     const std::set<Vertex>& forbidden) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& v : g.vertices()) {
            if (clique.count(v) || forbidden.count(v)) continue;
            bool ok = true;
            for (const auto& w : clique)
                if (!g.has_edge(v, w)) {
                    ok = false;
                    break;
                }
            if (ok) {
                clique.insert(v);
                grew = true;
            }
        }
    }
    return clique;
}

CliqueCover greedy_global_cover(const Graph& g) {
    std::set<Edge> uncovered;
    for (const auto& e : g.edges()) uncovered.insert(e);
    CliqueCover cover;
    while (!uncovered.empty()) {
        std::vector<std::set<Vertex>> family;
        std::set<Vertex> used;
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& e : uncovered) {
                if (used.count(e.first) || used.count(e.second)) continue;
                auto cl = grow_maximal_clique(g, {e.first, e.second}, used);
                family.push_back(cl);
                used.insert(cl.begin(), cl.end());
                for (auto it = uncovered.begin(); it != uncovered.end();) {
                    if (cl.count(it->first) && cl.count(it->second))
                        it = uncovered.erase(it);
                    else
                        ++it;
                }
                progress = true;
                break;
            }
        }
        cover.families.push_back(family);
    }
    return cover;
}

} // namespace

CliqueCover clique_cover_global(const Graph& g, const std::optional<CliqueCover>& hint) {
    if (hint) {
        validate_cover(g, *hint);
        return *hint;
    }
    if (g.edge_count() == 0) return {};
    if (g.vertex_count() <= 10) {
        std::size_t kmax = g.max_degree() + 1; // edge coloring always works
        for (std::size_t k = 1; k <= kmax; ++k) {
            ExactGlobalCover search(g, k);
            CliqueCover out;
            if (search.solve(out)) {
                validate_cover(g, out);
                return out;
            }
        }
        throw std::logic_error("global cover search failed below the coloring bound");
    }
    CliqueCover out = greedy_global_cover(g);
    validate_cover(g, out);
    return out;
}

namespace {

// All cliques containing both endpoints of e, grown inside their common
// neighborhood (tiny graphs only).
void cliques_through(const Graph& g, const Edge& e, std::vector<std::set<Vertex>>& out) {
    std::vector<Vertex> common;
    for (const auto& v : g.neighbors(e.first))
        if (g.has_edge(v, e.second)) common.push_back(v);
    std::function<void(std::size_t, std::set<Vertex>&)> rec = [&](std::size_t i,
                                                                  std::set<Vertex>& cur) {
        out.push_back(cur);
        for (std::size_t j = i; j < common.size(); ++j) {
            bool ok = true;
            for (const auto& w : cur)
                if (w != e.first && w != e.second && !g.has_edge(common[j], w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.insert(common[j]);
            rec(j + 1, cur);
            cur.erase(common[j]);
        }
    };
    std::set<Vertex> base = {e.first, e.second};
    rec(0, base);
}

class ExactLocalCover {
public:
    ExactLocalCover(const Graph& g, std::size_t ell) : g_(g), ell_(ell) {}

    bool solve(std::vector<std::set<Vertex>>& out) {
        edges_ = g_.edges();
        if (!dfs(0)) return false;
        out = chosen_;
        return true;
    }

private:
    const Graph& g_;
    std::size_t ell_;
    std::vector<Edge> edges_;
    std::vector<std::set<Vertex>> chosen_;
    std::map<Vertex, std::size_t> membership_;
    std::set<Edge> covered_;

    bool dfs(std::size_t idx) {
        while (idx < edges_.size() && covered_.count(edges_[idx])) ++idx;
        if (idx == edges_.size()) return true;
        std::vector<std::set<Vertex>> candidates;
        cliques_through(g_, edges_[idx], candidates);
        // Larger cliques first: they cover more while costing each member one.
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (const auto& cl : candidates) {
            bool fits = true;
            for (const auto& v : cl)
                if (membership_[v] + 1 > ell_) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            std::vector<Edge> newly;
            for (auto it = cl.begin(); it != cl.end(); ++it)
                for (auto jt = std::next(it); jt != cl.end(); ++jt) {
                    Edge e = make_edge(*it, *jt);
                    if (covered_.insert(e).second) newly.push_back(e);
                }
            for (const auto& v : cl) ++membership_[v];
            chosen_.push_back(cl);
            if (dfs(idx)) return true;
            chosen_.pop_back();
            for (const auto& v : cl) --membership_[v];
            for (const auto& e : newly) covered_.erase(e);
        }
        return false;
    }
};

CliqueCover pack_into_families(const std::vector<std::set<Vertex>>& cliques) {
    CliqueCover cover;
    for (const auto& cl : cliques) {
        bool placed = false;
        for (auto& fam : cover.families) {
            bool disjoint = true;
            for (const auto& existing : fam)
                for (const auto& v : cl)
                    if (existing.count(v)) {
                        disjoint = false;
                        break;
                    }
            if (disjoint) {
                fam.push_back(cl);
                placed = true;
                break;
            }
        }
        if (!placed) cover.families.push_back({cl});
    }
    return cover;
}

} // namespace

CliqueCover clique_cover_local(const Graph& g) {
    if (g.edge_count() == 0) return {};
    if (g.vertex_count() <= 12) {
        for (std::size_t ell = 1; ell <= g.max_degree(); ++ell) {
            ExactLocalCover search(g, ell);
            std::vector<std::set<Vertex>> cliques;
            if (search.solve(cliques)) {
                CliqueCover out = pack_into_families(cliques);
                validate_cover(g, out);
                return out;
            }
        }
        throw std::logic_error("local cover search failed below the degree bound");
    }
    // Greedy: maximal cliques by uncovered-edge gain.
    std::set<Edge> uncovered;
    for (const auto& e : g.edges()) uncovered.insert(e);
    std::vector<std::set<Vertex>> cliques;
    while (!uncovered.empty()) {
        Edge e = *uncovered.begin();
        auto cl = grow_maximal_clique(g, {e.first, e.second}, {});
        cliques.push_back(cl);
        for (auto it = uncovered.begin(); it != uncovered.end();) {
            if (cl.count(it->first) && cl.count(it->second))
                it = uncovered.erase(it);
            else
                ++it;
        }
    }
    CliqueCover out = pack_into_families(cliques);
    validate_cover(g, out);
    return out;
}

Graph ktree_graph(const BuildSequence& seq) {
    Graph kt;
    for (const auto& v : seq.base) kt.add_vertex(v);
    for (const auto& a : seq.base)
        for (const auto& b : seq.base)
            if (a < b) kt.add_edge(a, b);
    for (const auto& [v, clique] : seq.steps)
        for (const auto& w : clique) kt.add_edge(v, w);
    return kt;
}

namespace {

void validate_sequence(const Graph& g, std::size_t k, const BuildSequence& seq) {
    if (seq.k != k) throw InvalidSequence("sequence width mismatch");
    if (seq.base.size() > k + 1) throw InvalidSequence("base larger than k+1");
    Graph kt;
    for (const auto& v : seq.base) kt.add_vertex(v);
    for (const auto& a : seq.base)
        for (const auto& b : seq.base)
            if (a < b) kt.add_edge(a, b);
    for (const auto& [v, clique] : seq.steps) {
        if (kt.has_vertex(v)) throw InvalidSequence("vertex inserted twice: " + v);
        if (clique.size() != k) throw InvalidSequence("attachment clique size != k");
        for (const auto& w : clique)
            if (!kt.has_vertex(w)) throw InvalidSequence("attachment vertex missing: " + w);
        if (!kt.is_clique(clique)) throw InvalidSequence("attachment set is not a clique");
        for (const auto& w : clique) kt.add_edge(v, w);
    }
    for (const auto& v : g.vertices())
        if (!kt.has_vertex(v)) throw InvalidSequence("graph vertex missing from k-tree: " + v);
    for (const auto& [a, b] : g.edges())
        if (!kt.has_edge(a, b)) throw InvalidSequence("graph edge missing from k-tree");
}

} // namespace

BuildSequence ktree_sequence(const Graph& g, std::size_t k,
                             const std::optional<BuildSequence>& user_seq) {
    if (k < 1) throw WidthExceeded("k must be >= 1");
    if (user_seq) {
        validate_sequence(g, k, *user_seq);
        return *user_seq;
    }

    BuildSequence seq;
    seq.k = k;

    auto vs = g.vertices();
    if (vs.size() <= k + 1) {
        seq.base.insert(vs.begin(), vs.end());
        for (std::size_t i = 0; seq.base.size() < k + 1; ++i)
            seq.base.insert("_pad" + std::to_string(i));
        return seq;
    }

    // Min-fill elimination down to k+1 vertices.
    std::map<Vertex, std::set<Vertex>> adj;
    for (const auto& v : vs) adj[v] = g.neighbors(v);
    std::vector<std::pair<Vertex, std::set<Vertex>>> eliminated;
    while (adj.size() > k + 1) {
        Vertex best;
        long best_fill = -1;
        std::size_t best_deg = 0;
        for (const auto& [v, ns] : adj) {
            if (ns.size() > k) continue; // would exceed width
            long fill = 0;
            for (auto it = ns.begin(); it != ns.end(); ++it)
                for (auto jt = std::next(it); jt != ns.end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best_fill < 0 || fill < best_fill ||
                (fill == best_fill && ns.size() < best_deg)) {
                best = v;
                best_fill = fill;
                best_deg = ns.size();
            }
        }
        if (best_fill < 0)
            throw WidthExceeded("elimination heuristic exceeded width " + std::to_string(k));
        auto ns = adj[best];
        for (auto it = ns.begin(); it != ns.end(); ++it)
            for (auto jt = std::next(it); jt != ns.end(); ++jt) {
                adj[*it].insert(*jt);
                adj[*jt].insert(*it);
            }
        for (const auto& w : ns) adj[w].erase(best);
        adj.erase(best);
        eliminated.emplace_back(best, ns);
    }
    for (const auto& [v, ns] : adj) seq.base.insert(v);

    // Rebuild in reverse, padding attachment cliques to exactly k inside
    // the k-tree built so far.
    Graph kt;
    for (const auto& a : seq.base)
        for (const auto& b : seq.base)
            if (a < b) kt.add_edge(a, b);
    for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
        std::set<Vertex> clique = it->second;
        while (clique.size() < k) {
            bool extended = false;
            for (const auto& v : kt.vertices()) {
                if (clique.count(v)) continue;
                bool ok = true;
                for (const auto& w : clique)
                    if (!kt.has_edge(v, w)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    clique.insert(v);
                    extended = true;
                    break;
                }
            }
            if (!extended)
                throw WidthExceeded("could not pad attachment clique to size k");
        }
        seq.steps.emplace_back(it->first, clique);
        for (const auto& w : clique) kt.add_edge(it->first, w);
    }
    validate_sequence(g, k, seq);
    return seq;
}

} // namespace epg
