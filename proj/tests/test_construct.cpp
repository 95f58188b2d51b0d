#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epg/construct.hpp"

using namespace epg;

namespace {

Graph complete_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

Graph random_tree(std::mt19937& rng, int n) {
    Graph g;
    g.add_vertex("v0");
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(pick(rng)));
    }
    return g;
}

Graph random_graph(std::mt19937& rng, int n, int percent) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < percent)
                g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    return g;
}

// Random k-tree on n vertices plus a random subgraph of it.
std::pair<Graph, BuildSequence> random_ktree(std::mt19937& rng, std::size_t k, int n,
                                             int keep_percent) {
    BuildSequence seq;
    seq.k = k;
    std::vector<std::set<Vertex>> cliques;
    std::set<Vertex> base;
    for (std::size_t i = 0; i <= k; ++i) base.insert("v" + std::to_string(i));
    seq.base = base;
    for (const auto& u : base) {
        std::set<Vertex> c = base;
        c.erase(u);
        cliques.push_back(c);
    }
    for (int i = static_cast<int>(k) + 1; i < n; ++i) {
        Vertex v = "v" + std::to_string(i);
        std::set<Vertex> W = cliques[rng() % cliques.size()];
        seq.steps.emplace_back(v, W);
        for (const auto& u : W) {
            std::set<Vertex> c = W;
            c.erase(u);
            c.insert(v);
            cliques.push_back(c);
        }
    }
    Graph kt = ktree_graph(seq);
    Graph g;
    for (const auto& v : kt.vertices()) g.add_vertex(v);
    for (const auto& e : kt.edges())
        if (static_cast<int>(rng() % 100) < keep_percent) g.add_edge(e.first, e.second);
    return {g, seq};
}

} // namespace

TEST_CASE("global cover: triangle is an interval graph") {
    Graph tri = complete_graph(3);
    CliqueCover cover;
    cover.families = {{{"v0", "v1", "v2"}}};
    Representation rep = construct_from_global_cover(tri, cover);
    VerifyReport r = verify_representation(rep, tri, 0);
    CHECK(r.ok);
    CHECK(r.max_bends == 0);
}

TEST_CASE("global cover: triangular grid patches in two bends") {
    for (auto [rows, cols] : {std::pair{2, 3}, {3, 4}, {5, 6}}) {
        Graph g = gen_triangular_grid(rows, cols);
        CliqueCover cover = triangular_grid_cover(g);
        Representation rep = construct_from_global_cover(g, cover);
        VerifyReport r = verify_representation(rep, g, cover.family_count() - 1);
        CHECK(r.ok);
        // staircases by construction
        for (const auto& [v, p] : rep.paths) CHECK(is_staircase(p));
    }
}

TEST_CASE("global cover: masked triangular grids") {
    std::mt19937 rng(77);
    for (int it = 0; it < 10; ++it) {
        std::set<Vertex> mask;
        for (int i = 0; i <= 5; ++i)
            for (int j = 0; j < 6; ++j)
                if (rng() % 5 != 0) mask.insert(triangular_vertex(i, j));
        Graph g = gen_triangular_grid(5, 6, mask);
        if (g.vertex_count() == 0) continue;
        CliqueCover cover = triangular_grid_cover(g);
        Representation rep = construct_from_global_cover(g, cover);
        CHECK(verify_representation(rep, g, 2).ok);
    }
}

TEST_CASE("global cover: line graph of a bipartite graph is single-bend") {
    Graph lb = gen_line_graph(gen_complete_bipartite(3, 4));
    // two families: stars of the two sides
    CliqueCover cover;
    cover.families.resize(2);
    for (int i = 1; i <= 3; ++i) {
        std::set<Vertex> star;
        for (int j = 1; j <= 4; ++j)
            star.insert("a" + std::to_string(i) + "|b" + std::to_string(j));
        cover.families[0].push_back(star);
    }
    for (int j = 1; j <= 4; ++j) {
        std::set<Vertex> star;
        for (int i = 1; i <= 3; ++i)
            star.insert("a" + std::to_string(i) + "|b" + std::to_string(j));
        cover.families[1].push_back(star);
    }
    Representation rep = construct_from_global_cover(lb, cover);
    CHECK(verify_representation(rep, lb, 1).ok);
}

TEST_CASE("global cover via edge coloring stays within chi' - 1 bends") {
    std::mt19937 rng(123);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_graph(rng, 5 + it % 8, 40);
        if (g.edge_count() == 0) continue;
        EdgeColoring ec = edge_coloring(g);
        CliqueCover cover;
        cover.families.resize(ec.color_count);
        for (const auto& [e, c] : ec.color) cover.families[c].push_back({e.first, e.second});
        Representation rep = construct_from_global_cover(g, cover);
        CHECK(verify_representation(rep, g, ec.color_count - 1).ok);
    }
}

TEST_CASE("local cover constructions") {
    Graph tri = complete_graph(3);
    CliqueCover one;
    one.families = {{{"v0", "v1", "v2"}}};
    Representation rep = construct_from_local_cover(tri, one);
    VerifyReport r = verify_representation(rep, tri, 0);
    CHECK(r.ok); // one clique per vertex: zero bends

    Graph lk4 = gen_line_graph(complete_graph(4));
    CliqueCover lc = clique_cover_local(lk4);
    REQUIRE(lc.local_number() == 2);
    Representation rep2 = construct_from_local_cover(lk4, lc);
    CHECK(verify_representation(rep2, lk4, 2 * lc.local_number() - 2).ok);

    // K4 covered by 3 perfect matchings: per-vertex membership 3.
    Graph k4 = complete_graph(4);
    EdgeColoring ec = edge_coloring(k4);
    CliqueCover matchings;
    matchings.families.resize(ec.color_count);
    for (const auto& [e, c] : ec.color) matchings.families[c].push_back({e.first, e.second});
    Representation rep3 = construct_from_local_cover(k4, matchings);
    CHECK(verify_representation(rep3, k4, 2 * matchings.local_number() - 2).ok);
}

TEST_CASE("degeneracy construction: trees in one bend") {
    std::mt19937 rng(31);
    for (int n : {1, 2, 3, 5, 8, 10}) {
        for (int it = 0; it < 8; ++it) {
            Graph t = random_tree(rng, n);
            DegeneracyOrder ord = degeneracy_order(t);
            REQUIRE(ord.d <= 1);
            Representation rep = construct_degeneracy(t, ord);
            CHECK(verify_representation(rep, t, 1).ok);
        }
    }
}

TEST_CASE("degeneracy construction: stars and forests") {
    Graph star = gen_complete_bipartite(1, 9);
    Representation rep = construct_degeneracy(star, degeneracy_order(star));
    CHECK(verify_representation(rep, star, 1).ok);

    Graph forest;
    forest.add_edge("a", "b");
    forest.add_edge("b", "c");
    forest.add_edge("x", "y");
    forest.add_vertex("lone");
    Representation rep2 = construct_degeneracy(forest, degeneracy_order(forest));
    CHECK(verify_representation(rep2, forest, 1).ok);
}

TEST_CASE("degeneracy construction: K_{3,10} within five bends") {
    Graph g = gen_complete_bipartite(3, 10);
    DegeneracyOrder ord = degeneracy_order(g);
    REQUIRE(ord.d == 3);
    Representation rep = construct_degeneracy(g, ord);
    CHECK(verify_representation(rep, g, 2 * ord.d - 1).ok);
}

TEST_CASE("degeneracy construction: random graphs at 2d-1") {
    std::mt19937 rng(4242);
    int done = 0;
    for (int it = 0; it < 200 && done < 60; ++it) {
        Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 15), 25);
        DegeneracyOrder ord = degeneracy_order(g);
        if (ord.d < 2 || ord.d > 4) continue;
        ++done;
        Representation rep = construct_degeneracy(g, ord);
        CHECK(verify_representation(rep, g, 2 * ord.d - 1).ok);
    }
    CHECK(done >= 40);
}

TEST_CASE("degeneracy rejects bad orders") {
    Graph g = complete_graph(4);
    DegeneracyOrder bad;
    bad.order = g.vertices();
    bad.d = 1; // K4 needs back-degree 3
    CHECK_THROWS_AS(construct_degeneracy(g, bad), InvalidOrder);
}

TEST_CASE("treewidth construction: K4 as a 3-tree base") {
    Graph k4 = complete_graph(4);
    BuildSequence seq = ktree_sequence(k4, 3);
    Representation rep = construct_treewidth(k4, seq);
    CHECK(verify_representation(rep, k4, 4).ok);
}

TEST_CASE("treewidth construction: K_{2,5} via the k=2 delegation") {
    Graph g = gen_complete_bipartite(2, 5);
    BuildSequence seq = ktree_sequence(g, 2);
    Representation rep = construct_treewidth(g, seq);
    CHECK(verify_representation(rep, g, 2).ok);
}

TEST_CASE("treewidth construction: random k-trees and subgraphs") {
    std::mt19937 rng(999);
    for (std::size_t k : {3, 4, 5}) {
        for (int it = 0; it < 8; ++it) {
            auto [g, seq] = random_ktree(rng, k, 10 + static_cast<int>(rng() % 9),
                                         it % 2 == 0 ? 100 : 60);
            Representation rep = construct_treewidth(g, seq);
            CHECK(verify_representation(rep, g, 2 * k - 2).ok);
        }
    }
}

TEST_CASE("interval export") {
    // zero-bend representation -> one interval per vertex
    Graph tri = complete_graph(3);
    CliqueCover cover;
    cover.families = {{{"v0", "v1", "v2"}}};
    Representation rep = construct_from_global_cover(tri, cover);
    IntervalRepresentation ir = to_interval_representation(rep);
    for (const auto& [v, iv] : ir.intervals) CHECK(iv.size() == 1);
    CHECK(interval_overlap_graph(ir) == intersection_graph(rep));

    // general: overlap graph equals the intersection graph, interval count
    // bounded by bends + 1
    std::mt19937 rng(5150);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(rng, 9, 35);
        DegeneracyOrder ord = degeneracy_order(g);
        Representation r2 = construct_degeneracy(g, ord);
        IntervalRepresentation ir2 = to_interval_representation(r2);
        CHECK(interval_overlap_graph(ir2) == intersection_graph(r2));
        for (const auto& [v, p] : r2.paths)
            CHECK(ir2.intervals.at(v).size() <= p.bends() + 1);
    }
}
