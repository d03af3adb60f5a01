#pragma once

#include <vector>

#include "slgen/numth.hpp"

namespace slgen {

struct AllowedDegrees {
    unsigned long q;
    ZZ m;
    int n;
    std::vector<int> degrees; // {d <= n : q^d - 1 | m}, ascending
};
AllowedDegrees allowed_degrees(unsigned long q, const ZZ& m, int n);

// Probability that every cycle length of a uniform permutation of n points
// lies in the degree set, via n a_n = sum_{d in D, d <= n} a_{n-d}.
QQ cycle_prob_exact(const std::vector<int>& degrees, int n);

struct McEstimate {
    double estimate;
    double stderr_;
    std::uint64_t trials;
    std::uint64_t hits;
    std::uint64_t seed;
};
McEstimate cycle_prob_montecarlo(const std::vector<int>& degrees, int n, std::uint64_t trials,
                                 std::uint64_t seed);

struct D123 {
    int d1 = 0, d2 = 0, d3 = 0;
    bool empty = false;       // no degree qualifies (possible only for q > 2)
    std::vector<int> degrees; // full D_m over 1..max{d : q^d - 1 <= m}
};
// d1 = max D_m; d2 = largest element not dividing 6 d1 (else 0); d3 = largest
// dividing neither 6 d1 nor 6 d2 (else 0).
D123 d123(unsigned long q, const ZZ& m);

// r^{-n} exp(sum_{d in D} r^d / d), r > 0.
double saddle_bound(const std::vector<int>& degrees, int n, double r);
// The choice r = n^{1 / log_q(m+1)}.
double paper_r(unsigned long q, const ZZ& m, int n);

} // namespace slgen
