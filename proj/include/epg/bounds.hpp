#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epg {

struct BoundResult {
    int lower = 0;
    int upper = 0;
    // (source tag, bound value); tags among LBL1, LBL2, K2-ladder,
    // K3-ladder, comb, kmm3, m4, trivial.
    std::vector<std::pair<std::string, int>> witnesses;
};

// Smallest k >= 0 with (k+1)(m+n) >= mn + sqrt(2k(m+n)); requires 3 <= m <= n.
// The square root is compared in exact integer arithmetic.
int lbl1_min_k(std::int64_t m, std::int64_t n);

// Smallest k >= 0 with n(2m-k-2) <= m(m-1)*ceil((k+1)/2)*ceil((k+3)/2) + 2(k+1)m.
int lbl2_min_k(std::int64_t m, std::int64_t n);

// Max crossings of two k-bend paths: j(j+1) with j=(k+1)/2 for odd k; the
// bound for k+1 when k is even.
std::int64_t max_crossings_bound(std::int64_t k);

// n(2m-k-2) <= 2c + 2(k+1)m.
bool c_inequality_check(std::int64_t m, std::int64_t n, std::int64_t k, std::int64_t c);

// Best-known lower and upper bounds on the bend-number of K_{m,n}.
BoundResult kmn_bend_bounds(int m, int n);

// i(K_{m,n}) = ceil((mn+1)/(m+n)), t(K_{m,n}) = ceil(mn/(m+n-1)).
std::pair<std::int64_t, std::int64_t> reference_interval_track(std::int64_t m, std::int64_t n);

// The paper's n thresholds for the bipartite constructions.
std::int64_t kmm3_n(int m); // m even: m^3/4 - m^2/2 - m + 4; odd: m^3/4 - m^2 + 3m/4
std::int64_t m4_n(int m);   // floor(m^4 - 2m^3 + 5/2 m^2 - 2m - 4)

} // namespace epg
