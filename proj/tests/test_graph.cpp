#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "epg/graph.hpp"

using namespace epg;

namespace {

Graph cycle_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    return g;
}

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

std::size_t max_back_degree(const Graph& g, const std::vector<Vertex>& order) {
    std::set<Vertex> before;
    std::size_t worst = 0;
    for (const auto& v : order) {
        std::size_t back = 0;
        for (const auto& w : g.neighbors(v))
            if (before.count(w)) ++back;
        worst = std::max(worst, back);
        before.insert(v);
    }
    return worst;
}

} // namespace

TEST_CASE("complete bipartite generator") {
    Graph c4 = gen_complete_bipartite(2, 2);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(gen_complete_bipartite(3, 10).edge_count() == 30);
    Graph star = gen_complete_bipartite(1, 5);
    CHECK(star.degree("a1") == 5);
    CHECK(star.edge_count() == 5);
}

TEST_CASE("octahedron generator") {
    Graph o = gen_octahedron();
    CHECK(o.vertex_count() == 6);
    CHECK(o.edge_count() == 12);
    CHECK_FALSE(o.has_edge("a", "A"));
    CHECK_FALSE(o.has_edge("b", "B"));
    CHECK_FALSE(o.has_edge("c", "C"));
    Graph four = o.induced({"b", "C", "B", "c"});
    CHECK(four.edge_count() == 4);
    for (const auto& v : four.vertices()) CHECK(four.degree(v) == 2);
}

TEST_CASE("triangular grid patches") {
    Graph pair = gen_triangular_grid(1, 2);
    CHECK(pair.vertex_count() == 4);
    CHECK(pair.edge_count() == 5); // two triangles sharing an edge

    Graph single = gen_triangular_grid(2, 3, std::set<Vertex>{triangular_vertex(0, 0)});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph patch = gen_triangular_grid(3, 4);
    CHECK(patch.vertex_count() == 16);
    // interior vertices of the lattice have degree 6
    CHECK(patch.degree(triangular_vertex(1, 1)) == 6);
}

TEST_CASE("triangular grid cover has at most three families") {
    for (auto [r, c] : {std::pair{1, 2}, {2, 3}, {3, 4}, {5, 6}}) {
        Graph g = gen_triangular_grid(r, c);
        CliqueCover cover = triangular_grid_cover(g);
        CHECK(cover.family_count() <= 3);
        validate_cover(g, cover);
    }
    // masked patches stay coverable
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        std::set<Vertex> mask;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j < 5; ++j)
                if (rng() % 4 != 0) mask.insert(triangular_vertex(i, j));
        Graph g = gen_triangular_grid(4, 5, mask);
        CliqueCover cover = triangular_grid_cover(g);
        CHECK(cover.family_count() <= 3);
        validate_cover(g, cover);
    }
}

TEST_CASE("degeneracy order") {
    std::mt19937 rng(17);
    Graph tree = random_tree(rng, 9);
    DegeneracyOrder t = degeneracy_order(tree);
    CHECK(t.d == 1);
    CHECK(max_back_degree(tree, t.order) <= t.d);

    CHECK(degeneracy_order(complete_graph(5)).d == 4);
    CHECK(degeneracy_order(gen_complete_bipartite(3, 10)).d == 3);
}

TEST_CASE("degeneracy is minimal over all orders on small graphs") {
    std::mt19937 rng(23);
    for (int it = 0; it < 6; ++it) {
        Graph g;
        int n = 6;
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        DegeneracyOrder dg = degeneracy_order(g);
        CHECK(max_back_degree(g, dg.order) <= dg.d);
        std::vector<Vertex> perm = g.vertices();
        std::size_t best = n;
        std::sort(perm.begin(), perm.end());
        do {
            best = std::min(best, max_back_degree(g, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(best == dg.d);
    }
}

TEST_CASE("edge coloring basics") {
    EdgeColoring even = edge_coloring(cycle_graph(6));
    CHECK(even.color_count == 2);

    EdgeColoring k4 = edge_coloring(complete_graph(4));
    CHECK(k4.color_count >= 3);
    CHECK(k4.color_count <= 4);

    EdgeColoring star = edge_coloring(gen_complete_bipartite(1, 6));
    CHECK(star.color_count == 6);
}

TEST_CASE("edge coloring is proper within max degree + 1 on random graphs") {
    std::mt19937 rng(99);
    for (int it = 0; it < 30; ++it) {
        Graph g;
        int n = 4 + static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        if (g.edge_count() == 0) continue;
        EdgeColoring ec = edge_coloring(g);
        CHECK(ec.color_count <= static_cast<int>(g.max_degree()) + 1);
        for (const auto& v : g.vertices()) {
            std::set<int> seen;
            for (const auto& w : g.neighbors(v))
                CHECK(seen.insert(ec.color.at(make_edge(v, w))).second);
        }
    }
}

TEST_CASE("global clique cover") {
    Graph tri = complete_graph(3);
    CliqueCover c1 = clique_cover_global(tri);
    CHECK(c1.family_count() == 1);
    validate_cover(tri, c1);

    Graph patch = gen_triangular_grid(2, 3);
    CliqueCover hinted = clique_cover_global(patch, triangular_grid_cover(patch));
    CHECK(hinted.family_count() <= 3);

    CliqueCover c5 = clique_cover_global(cycle_graph(5));
    CHECK(c5.family_count() == 3);
    validate_cover(cycle_graph(5), c5);

    CliqueCover c6 = clique_cover_global(cycle_graph(6));
    CHECK(c6.family_count() == 2); // even cycle: two perfect matchings
}

TEST_CASE("local clique cover") {
    Graph tri = complete_graph(3);
    CHECK(clique_cover_local(tri).local_number() == 1);

    Graph lk4 = gen_line_graph(complete_graph(4));
    CliqueCover lc = clique_cover_local(lk4);
    validate_cover(lk4, lc);
    CHECK(lc.local_number() == 2);

    // Line graphs of bipartite graphs: stars of the two sides.
    Graph lb = gen_line_graph(gen_complete_bipartite(2, 3));
    CliqueCover lbc = clique_cover_local(lb);
    validate_cover(lb, lbc);
    CHECK(lbc.local_number() <= 2);
}

TEST_CASE("ktree sequences") {
    Graph k4 = complete_graph(4);
    BuildSequence s = ktree_sequence(k4, 3);
    CHECK(s.base.size() == 4);
    CHECK(s.steps.empty());

    std::mt19937 rng(3);
    Graph tree = random_tree(rng, 8);
    BuildSequence ts = ktree_sequence(tree, 1);
    Graph kt = ktree_graph(ts);
    for (const auto& e : tree.edges()) CHECK(kt.has_edge(e.first, e.second));
    CHECK(ts.steps.size() == tree.vertex_count() - 2);

    Graph k25 = gen_complete_bipartite(2, 5);
    BuildSequence bs = ktree_sequence(k25, 2);
    Graph kt2 = ktree_graph(bs);
    for (const auto& e : k25.edges()) CHECK(kt2.has_edge(e.first, e.second));
    CHECK_NOTHROW(ktree_sequence(k25, 2, bs));

    BuildSequence bad = bs;
    REQUIRE(!bad.steps.empty());
    bad.steps.front().second.erase(bad.steps.front().second.begin());
    CHECK_THROWS_AS(ktree_sequence(k25, 2, bad), InvalidSequence);

    CHECK_THROWS_AS(ktree_sequence(complete_graph(5), 2), WidthExceeded);
}

TEST_CASE("cover validation catches bad covers") {
    Graph tri = complete_graph(3);
    CliqueCover missing;
    missing.families = {{{"v0", "v1"}}};
    CHECK_THROWS_AS(validate_cover(tri, missing), std::invalid_argument);

    CliqueCover overlap;
    overlap.families = {{{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}}};
    CHECK_THROWS_AS(validate_cover(tri, overlap), std::invalid_argument);

    Graph p3;
    p3.add_edge("a", "b");
    p3.add_edge("b", "c");
    CliqueCover notclique;
    notclique.families = {{{"a", "b", "c"}}};
    CHECK_THROWS_AS(validate_cover(p3, notclique), std::invalid_argument);
}
