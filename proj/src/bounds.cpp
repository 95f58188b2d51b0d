#include "epg/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace epg {

namespace {

using i64 = std::int64_t;

// (k+1)(m+n) >= mn + sqrt(2k(m+n)), compared by squaring.
bool lbl1_feasible(i64 m, i64 n, i64 k) {
    i64 lhs = (k + 1) * (m + n) - m * n;
    if (lhs < 0) return false;
    return lhs * lhs >= 2 * k * (m + n);
}

i64 ceil_div(i64 a, i64 b) { return (a + b - 1) / b; }

bool lbl2_feasible(i64 m, i64 n, i64 k) {
    i64 lhs = n * (2 * m - k - 2);
    i64 rhs = m * (m - 1) * ceil_div(k + 1, 2) * ceil_div(k + 3, 2) + 2 * (k + 1) * m;
    return lhs <= rhs;
}

} // namespace

int lbl1_min_k(i64 m, i64 n) {
    if (m < 3 || n < m) throw std::invalid_argument("lbl1_min_k needs 3 <= m <= n");
    for (i64 k = 0;; ++k) {
        if (lbl1_feasible(m, n, k)) {
            // Feasibility is monotone in k from here on.
            for (i64 t = std::max<i64>(k, 1); t < k + 8; ++t)
                if (!lbl1_feasible(m, n, t + 1) && lbl1_feasible(m, n, t))
                    throw std::logic_error("lbl1 feasibility not monotone");
            return static_cast<int>(k);
        }
        if (k > 4 * (m + n)) throw std::logic_error("lbl1 scan ran away");
    }
}

int lbl2_min_k(i64 m, i64 n) {
    if (m < 1 || n < m) throw std::invalid_argument("lbl2_min_k needs 1 <= m <= n");
    for (i64 k = 0;; ++k) {
        if (lbl2_feasible(m, n, k)) return static_cast<int>(k);
        if (k > 2 * m) throw std::logic_error("lbl2 scan ran away"); // vacuous at 2m-2
    }
}

i64 max_crossings_bound(i64 k) {
    if (k < 0) throw std::invalid_argument("bend count must be >= 0");
    i64 j = (k % 2 == 1) ? (k + 1) / 2 : (k + 2) / 2;
    return j * (j + 1);
}

bool c_inequality_check(i64 m, i64 n, i64 k, i64 c) {
    if (c < 0) throw std::invalid_argument("crossing count must be >= 0");
    return n * (2 * m - k - 2) <= 2 * c + 2 * (k + 1) * m;
}

i64 kmm3_n(int m) {
    i64 mm = m;
    if (m % 2 == 0) return (mm * mm * mm - 2 * mm * mm - 4 * mm + 16) / 4;
    return (mm * mm * mm - 4 * mm * mm + 3 * mm) / 4;
}

i64 m4_n(int m) {
    // floor(m^4 - 2m^3 + 5/2 m^2 - 2m - 4) in exact integers.
    i64 mm = m;
    i64 twice = 2 * mm * mm * mm * mm - 4 * mm * mm * mm + 5 * mm * mm - 4 * mm - 8;
    return twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
}

BoundResult kmn_bend_bounds(int m, int n) {
    if (m < 1 || n < m) throw std::invalid_argument("kmn_bend_bounds needs 1 <= m <= n");
    BoundResult r;
    if (m == 1) { // stars are interval graphs
        r.lower = r.upper = 0;
        r.witnesses.emplace_back("trivial", 0);
        return r;
    }
    if (m == 2) {
        int b = n <= 1 ? 0 : (n <= 4 ? 1 : 2);
        r.lower = r.upper = b;
        r.witnesses.emplace_back("K2-ladder", b);
        return r;
    }

    int lo = lbl1_min_k(m, n);
    r.witnesses.emplace_back("LBL1", lo);
    int lo2 = lbl2_min_k(m, n);
    r.witnesses.emplace_back("LBL2", lo2);
    lo = std::max(lo, lo2);
    if (m == 3 && n >= 11) { // cited ladder fact, not derived from either lemma
        r.witnesses.emplace_back("K3-ladder", 3);
        lo = std::max(lo, 3);
    }

    int up = 2 * m - 2;
    r.witnesses.emplace_back("comb", up);
    if (static_cast<i64>(n) <= m4_n(m)) {
        r.witnesses.emplace_back("m4", 2 * m - 3);
        up = std::min(up, 2 * m - 3);
    }
    if (m >= 4 && static_cast<i64>(n) <= kmm3_n(m)) {
        r.witnesses.emplace_back("kmm3", m - 1);
        up = std::min(up, m - 1);
    }
    if (m == 3 && n <= 10) { // deletions from the 2-bend K_{3,10}
        r.witnesses.emplace_back("K3-ladder", 2);
        up = std::min(up, 2);
    }

    r.lower = lo;
    r.upper = up;
    return r;
}

std::pair<i64, i64> reference_interval_track(i64 m, i64 n) {
    if (m < 1 || n < 1) throw std::invalid_argument("need m,n >= 1");
    return {ceil_div(m * n + 1, m + n), ceil_div(m * n, m + n - 1)};
}

} // namespace epg
