#include "epg/verify.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace epg {

Graph intersection_graph(const Representation& rep) {
    Graph g;
    std::vector<std::pair<Vertex, std::vector<Segment>>> segs;
    for (const auto& [v, p] : rep.paths) {
        g.add_vertex(v);
        segs.emplace_back(v, p.segments());
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            bool hit = false;
            for (const auto& a : segs[i].second) {
                for (const auto& b : segs[j].second)
                    if (a.shares_edge_with(b)) {
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
            if (hit) g.add_edge(segs[i].first, segs[j].first);
        }
    return g;
}

VerifyReport verify_representation(const Representation& rep, const Graph& target,
                                   std::size_t budget) {
    for (const auto& [v, p] : rep.paths)
        if (!target.has_vertex(v))
            throw VertexMismatch("representation has unknown vertex " + v);
    for (const auto& v : target.vertices())
        if (!rep.paths.count(v)) throw VertexMismatch("missing path for vertex " + v);

    VerifyReport report;
    Graph got = intersection_graph(rep);
    for (const auto& e : target.edges())
        if (!got.has_edge(e.first, e.second)) report.missing_edges.push_back(e);
    for (const auto& e : got.edges())
        if (!target.has_edge(e.first, e.second)) report.extra_edges.push_back(e);
    for (const auto& [v, p] : rep.paths) {
        report.per_vertex_bends[v] = p.bends();
        report.max_bends = std::max(report.max_bends, p.bends());
    }
    report.ok = report.missing_edges.empty() && report.extra_edges.empty() &&
                report.max_bends <= budget;
    return report;
}

namespace {

bool path_contains(const GridPath& p, const GridPoint& z) {
    for (const auto& s : p.segments())
        if (s.contains_point(z)) return true;
    return p.corners().size() == 1 && p.corners().front() == z;
}

std::optional<GridPoint> bend_point(const GridPath& p) {
    if (p.corners().size() != 3) return std::nullopt;
    return p.corners()[1];
}

// A point shared by all paths, if one exists. Candidates are corners and
// perpendicular crossing points; a nonempty common region always exposes
// one of those on its boundary.
std::optional<GridPoint> common_point(const std::vector<const GridPath*>& paths) {
    std::set<GridPoint> candidates;
    for (const auto* p : paths)
        for (const auto& c : p->corners()) candidates.insert(c);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            for (const auto& a : paths[i]->segments())
                for (const auto& b : paths[j]->segments()) {
                    if (a.orientation == b.orientation) continue;
                    const Segment& h = a.orientation == Orientation::Horizontal ? a : b;
                    const Segment& v = a.orientation == Orientation::Horizontal ? b : a;
                    if (h.lo <= v.line && v.line <= h.hi && v.lo <= h.line && h.line <= v.hi)
                        candidates.insert(GridPoint{v.line, h.line});
                }
    for (const auto& z : candidates) {
        bool in_all = true;
        for (const auto* p : paths)
            if (!path_contains(*p, z)) {
                in_all = false;
                break;
            }
        if (in_all) return z;
    }
    return std::nullopt;
}

} // namespace

FourCycleClass classify_4cycle(const Representation& rep, const std::array<Vertex, 4>& cycle) {
    std::vector<const GridPath*> paths;
    for (const auto& v : cycle) {
        auto it = rep.paths.find(v);
        if (it == rep.paths.end()) throw NotInducedFourCycle("missing path for " + v);
        if (it->second.bends() > 1)
            throw NotInducedFourCycle("path for " + v + " has more than one bend");
        paths.push_back(&it->second);
    }
    // The four vertices must induce a 4-cycle in the intersection graph.
    int adj[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            adj[i][j] = adj[j][i] = edge_intersects(*paths[i], *paths[j]) ? 1 : 0;
    for (int i = 0; i < 4; ++i) {
        int deg = adj[i][0] + adj[i][1] + adj[i][2] + adj[i][3];
        if (deg != 2) throw NotInducedFourCycle("vertices do not induce a 4-cycle");
    }

    if (auto z = common_point(paths)) {
        int bends_here = 0, straight_here = 0;
        for (const auto* p : paths) {
            auto b = bend_point(*p);
            if (b && *b == *z)
                ++bends_here;
            else
                ++straight_here;
        }
        if (bends_here == 4) return FourCycleClass::TruePie;
        if (bends_here == 2 && straight_here == 2) return FourCycleClass::FalsePie;
        return FourCycleClass::Other;
    }

    // Frame: four pairwise distinct bend points forming an axis-aligned
    // rectangle.
    std::set<GridPoint> bends_set;
    std::set<coord_t> xs, ys;
    for (const auto* p : paths) {
        auto b = bend_point(*p);
        if (!b) return FourCycleClass::Other;
        bends_set.insert(*b);
        xs.insert(b->x);
        ys.insert(b->y);
    }
    if (bends_set.size() == 4 && xs.size() == 2 && ys.size() == 2)
        return FourCycleClass::Frame;
    return FourCycleClass::Other;
}

Representation compress_coordinates(const Representation& rep) {
    std::set<coord_t> xs, ys;
    for (const auto& [v, p] : rep.paths)
        for (const auto& c : p.corners()) {
            xs.insert(c.x);
            ys.insert(c.y);
        }
    std::map<coord_t, coord_t> xmap, ymap;
    coord_t k = 0;
    for (coord_t x : xs) xmap[x] = k++;
    k = 0;
    for (coord_t y : ys) ymap[y] = k++;
    Representation out;
    for (const auto& [v, p] : rep.paths) {
        std::vector<GridPoint> cs = p.corners();
        for (auto& c : cs) c = GridPoint{xmap[c.x], ymap[c.y]};
        out.paths.emplace(v, GridPath(std::move(cs)));
    }
    return out;
}

} // namespace epg
