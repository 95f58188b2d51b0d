#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/bounds.hpp"

using namespace epg;

TEST_CASE("lower bound lemma I") {
    CHECK(lbl1_min_k(4, 4) == 2);
    CHECK(lbl1_min_k(6, 6) == 3);
    for (int m = 3; m <= 8; ++m)
        CHECK(lbl1_min_k(m, (m - 1) * (m - 1)) >= m - 1);
    for (int m = 3; m <= 20; ++m)
        CHECK(lbl1_min_k(m, m) == (m + 1) / 2);
}

TEST_CASE("lower bound lemma II") {
    CHECK(lbl2_min_k(3, 61) == 4);
    CHECK(lbl2_min_k(3, 60) <= 3);
    for (int m = 3; m <= 5; ++m) {
        std::int64_t mm = m;
        std::int64_t n = mm * mm * mm * mm - 2 * mm * mm * mm + 5 * mm * mm - 4 * mm + 1;
        CHECK(lbl2_min_k(m, n) == 2 * m - 2);
    }
}

TEST_CASE("max crossings bound") {
    CHECK(max_crossings_bound(9) == 30);
    CHECK(max_crossings_bound(0) == 2);
    CHECK(max_crossings_bound(1) == 2);
    CHECK(max_crossings_bound(3) == 6);
    CHECK(max_crossings_bound(4) == 12); // even rule: bound for 5-bend paths
}

TEST_CASE("c inequality") {
    CHECK(c_inequality_check(3, 39, 3, 17));
    CHECK(c_inequality_check(5, 1000, 8, 0)); // k = 2m-2 makes the LHS vanish
    CHECK_FALSE(c_inequality_check(3, 100, 3, 17));
}

TEST_CASE("paper thresholds") {
    CHECK(kmm3_n(6) == 34);
    CHECK(kmm3_n(5) == 10);
    CHECK(kmm3_n(4) == 8);
    CHECK(m4_n(3) == 39);
    CHECK(m4_n(4) == 156);
}

TEST_CASE("kmn bend bounds") {
    auto at = [](int m, int n) {
        BoundResult r = kmn_bend_bounds(m, n);
        return std::pair<int, int>{r.lower, r.upper};
    };
    CHECK(at(2, 4) == std::pair{1, 1});
    CHECK(at(2, 2) == std::pair{1, 1});
    CHECK(at(2, 5) == std::pair{2, 2});
    CHECK(at(1, 9) == std::pair{0, 0});
    CHECK(at(3, 40) == std::pair{3, 4});
    CHECK(at(3, 10) == std::pair{2, 2});
    CHECK(at(3, 11) == std::pair{3, 3});
    CHECK(at(3, 39) == std::pair{3, 3});
    CHECK(at(3, 61) == std::pair{4, 4});

    for (int m = 1; m <= 8; ++m)
        for (int n = m; n <= 200; ++n) {
            BoundResult r = kmn_bend_bounds(m, n);
            CHECK(r.lower <= r.upper);
        }
}

TEST_CASE("interval and track numbers of complete bipartite graphs") {
    CHECK(reference_interval_track(3, 10) == std::pair<std::int64_t, std::int64_t>{3, 3});
    CHECK(reference_interval_track(1, 1) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(reference_interval_track(4, 4) == std::pair<std::int64_t, std::int64_t>{3, 3});
}
