#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "epg/verify.hpp"

using namespace epg;

namespace {

GridPath path_of(std::initializer_list<GridPoint> pts) {
    return normalize_path(std::vector<GridPoint>(pts));
}

Representation frame_rep() {
    Representation r;
    r.paths.emplace("p1", path_of({{0, 0}, {0, 3}, {4, 3}}));
    r.paths.emplace("p2", path_of({{0, 3}, {4, 3}, {4, 0}}));
    r.paths.emplace("p3", path_of({{4, 3}, {4, 0}, {0, 0}}));
    r.paths.emplace("p4", path_of({{4, 0}, {0, 0}, {0, 3}}));
    return r;
}

Representation true_pie_rep() {
    Representation r;
    r.paths.emplace("p1", path_of({{0, 3}, {0, 0}, {3, 0}}));
    r.paths.emplace("p2", path_of({{5, 0}, {0, 0}, {0, -5}}));
    r.paths.emplace("p3", path_of({{0, -3}, {0, 0}, {-3, 0}}));
    r.paths.emplace("p4", path_of({{-5, 0}, {0, 0}, {0, 5}}));
    return r;
}

Representation false_pie_rep() {
    Representation r;
    r.paths.emplace("s1", path_of({{-4, 0}, {4, 0}}));
    r.paths.emplace("s2", path_of({{0, -4}, {0, 4}}));
    r.paths.emplace("b1", path_of({{0, 3}, {0, 0}, {3, 0}}));
    r.paths.emplace("b2", path_of({{0, -3}, {0, 0}, {-3, 0}}));
    return r;
}

GridPath random_path(std::mt19937& rng, int bend_count, int span) {
    std::uniform_int_distribution<int> coord(-span, span);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<GridPoint> cs;
    GridPoint at{coord(rng), coord(rng)};
    cs.push_back(at);
    bool horizontal = flip(rng) == 1;
    for (int i = 0; i <= bend_count; ++i) {
        int d = len(rng) * (flip(rng) ? 1 : -1);
        if (horizontal)
            at.x += d;
        else
            at.y += d;
        cs.push_back(at);
        horizontal = !horizontal;
    }
    return normalize_path(cs);
}

} // namespace

TEST_CASE("intersection graph basics") {
    Representation r;
    r.paths.emplace("a", path_of({{0, 0}, {5, 0}}));
    r.paths.emplace("b", path_of({{0, 2}, {5, 2}}));
    r.paths.emplace("c", path_of({{0, 4}, {5, 4}}));
    Graph g = intersection_graph(r);
    CHECK(g.edge_count() == 0); // pairwise disjoint

    Representation touch;
    touch.paths.emplace("a", path_of({{0, 0}, {5, 0}}));
    touch.paths.emplace("b", path_of({{3, -2}, {3, 2}}));
    CHECK(intersection_graph(touch).edge_count() == 0); // point contact only

    Representation over;
    over.paths.emplace("a", path_of({{0, 0}, {5, 0}}));
    over.paths.emplace("b", path_of({{4, 0}, {9, 0}}));
    CHECK(intersection_graph(over).has_edge("a", "b"));
}

TEST_CASE("verify_representation reports differences") {
    Graph c4;
    c4.add_edge("p1", "p2");
    c4.add_edge("p2", "p3");
    c4.add_edge("p3", "p4");
    c4.add_edge("p4", "p1");

    VerifyReport rep = verify_representation(frame_rep(), c4, 1);
    CHECK(rep.ok);
    CHECK(rep.max_bends == 1);

    VerifyReport tight = verify_representation(frame_rep(), c4, 0);
    CHECK_FALSE(tight.ok); // budget exceeded

    Graph k4 = c4;
    k4.add_edge("p1", "p3");
    k4.add_edge("p2", "p4");
    VerifyReport miss = verify_representation(frame_rep(), k4, 1);
    CHECK_FALSE(miss.ok);
    CHECK(miss.missing_edges.size() == 2);

    Graph small = c4;
    Representation broken = frame_rep();
    broken.paths.erase("p4");
    CHECK_THROWS_AS(verify_representation(broken, small, 1), VertexMismatch);
}

TEST_CASE("four cycle classification") {
    CHECK(classify_4cycle(frame_rep(), {"p1", "p2", "p3", "p4"}) == FourCycleClass::Frame);
    CHECK(classify_4cycle(true_pie_rep(), {"p1", "p2", "p3", "p4"}) == FourCycleClass::TruePie);
    CHECK(classify_4cycle(false_pie_rep(), {"s1", "b1", "s2", "b2"}) == FourCycleClass::FalsePie);

    // Not an induced 4-cycle: all paths on one line.
    Representation clique;
    clique.paths.emplace("a", path_of({{0, 0}, {9, 0}}));
    clique.paths.emplace("b", path_of({{1, 0}, {8, 0}}));
    clique.paths.emplace("c", path_of({{2, 0}, {7, 0}}));
    clique.paths.emplace("d", path_of({{3, 0}, {6, 0}}));
    CHECK_THROWS_AS(classify_4cycle(clique, {"a", "b", "c", "d"}), NotInducedFourCycle);
}

TEST_CASE("compression preserves the intersection graph") {
    Representation sparse;
    sparse.paths.emplace("a", path_of({{0, 0}, {1000000, 0}}));
    sparse.paths.emplace("b", path_of({{100, 0}, {100, 777}}));
    sparse.paths.emplace("c", path_of({{99, 0}, {1000001, 0}}));
    Representation small = compress_coordinates(sparse);
    CHECK(intersection_graph(small) == intersection_graph(sparse));
    coord_t maxc = 0;
    for (const auto& [v, p] : small.paths)
        for (const auto& pt : p.corners()) maxc = std::max({maxc, pt.x, pt.y});
    CHECK(maxc < 8);

    Representation twice = compress_coordinates(small);
    for (const auto& [v, p] : small.paths) CHECK(twice.paths.at(v) == p);

    std::mt19937 rng(41);
    for (int it = 0; it < 50; ++it) {
        Representation r;
        for (int i = 0; i < 6; ++i)
            r.paths.emplace("v" + std::to_string(i), random_path(rng, 1 + it % 4, 12));
        Representation z = compress_coordinates(r);
        CHECK(intersection_graph(z) == intersection_graph(r));
        // crossings preserved pairwise as well
        for (const auto& [v, p] : r.paths)
            for (const auto& [w, q] : r.paths)
                if (v < w)
                    CHECK(crossings(p, q) == crossings(z.paths.at(v), z.paths.at(w)));
    }
}

TEST_CASE("intersection graph is invariant under rigid motions") {
    std::mt19937 rng(43);
    for (int it = 0; it < 30; ++it) {
        Representation r;
        for (int i = 0; i < 5; ++i)
            r.paths.emplace("v" + std::to_string(i), random_path(rng, 2, 10));
        Graph base = intersection_graph(r);
        Representation moved, rot, refl;
        for (const auto& [v, p] : r.paths) {
            moved.paths.emplace(v, p.translated(13, -7));
            rot.paths.emplace(v, p.rotated90());
            refl.paths.emplace(v, p.reflected_x());
        }
        CHECK(intersection_graph(moved) == base);
        CHECK(intersection_graph(rot) == base);
        CHECK(intersection_graph(refl) == base);
    }
}
