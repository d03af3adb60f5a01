#include "doctest.h"

#include <cmath>

#include "slgen/permcyc.hpp"

using namespace slgen;

namespace {

// Independent oracle: exact cycle-type probability by exhaustive permutation
// enumeration for small n.
QQ cycle_prob_brute(const std::vector<int>& degrees, int n) {
    std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 0);
    for (int d : degrees)
        if (d <= n) allowed[std::size_t(d)] = 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    long total = 0, good = 0;
    do {
        ++total;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (seen[std::size_t(i)]) continue;
            int len = 0, j = i;
            while (!seen[std::size_t(j)]) {
                seen[std::size_t(j)] = 1;
                j = perm[std::size_t(j)];
                ++len;
            }
            if (!allowed[std::size_t(len)]) ok = false;
        }
        if (ok) ++good;
    } while (std::next_permutation(perm.begin(), perm.end()));
    QQ r(good, total);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("allowed_degrees") {
    auto d1 = allowed_degrees(2, ZZ(21), 10);
    CHECK(d1.degrees == std::vector<int>{1, 2, 3});
    auto d2 = allowed_degrees(2, ZZ(1), 10);
    CHECK(d2.degrees == std::vector<int>{1});
    auto d3 = allowed_degrees(3, ZZ(8), 10);
    CHECK(d3.degrees == std::vector<int>{1, 2});
    CHECK(allowed_degrees(3, ZZ(3), 10).degrees.empty());
    CHECK_THROWS_AS(allowed_degrees(2, ZZ(0), 5), std::invalid_argument);
}

TEST_CASE("cycle_prob_exact") {
    CHECK(cycle_prob_exact({1, 2, 3, 4}, 4) == QQ(1));
    CHECK(cycle_prob_exact({1, 2, 3}, 4) == QQ(3) / 4);
    QQ p13 = cycle_prob_exact({1}, 3);
    CHECK(p13 == QQ(1) / 6);
    CHECK(cycle_prob_exact({}, 0) == QQ(1));
    CHECK(cycle_prob_exact({}, 3) == QQ(0));
    // brute-force oracle over all n! permutations
    for (int n = 1; n <= 7; ++n) {
        CHECK(cycle_prob_exact({1, 2, 3}, n) == cycle_prob_brute({1, 2, 3}, n));
        CHECK(cycle_prob_exact({2, 3}, n) == cycle_prob_brute({2, 3}, n));
        CHECK(cycle_prob_exact({1, 4}, n) == cycle_prob_brute({1, 4}, n));
    }
}

TEST_CASE("cycle_prob_montecarlo vs exact at 3 sigma") {
    auto full = cycle_prob_montecarlo({1, 2, 3, 4, 5}, 5, 2000, 1);
    CHECK(full.estimate == 1.0);

    for (auto [degrees, n] : {std::pair<std::vector<int>, int>{{1, 2, 3}, 4},
                              {{1}, 3},
                              {{1, 2}, 6},
                              {{2, 4}, 8}}) {
        double p = mpq_get_d(cycle_prob_exact(degrees, n).get_mpq_t());
        auto mc = cycle_prob_montecarlo(degrees, n, 100000, 123);
        double sigma = std::sqrt(p * (1 - p) / double(mc.trials));
        CHECK(std::abs(mc.estimate - p) <= 3 * sigma + 1e-12);
    }
}

TEST_CASE("d123 examples") {
    auto a = d123(2, ZZ(21));
    CHECK(a.d1 == 3);
    CHECK(a.d2 == 0);
    CHECK(a.d3 == 0);
    auto b = d123(2, ZZ(1));
    CHECK(b.d1 == 1);
    CHECK(b.d2 == 0);
    // recomputed: D_{651} over q=2 is {1,2,3,5}; all of {1,2,3} divide 30
    auto c = d123(2, ZZ(651));
    CHECK(c.degrees == std::vector<int>{1, 2, 3, 5});
    CHECK(c.d1 == 5);
    CHECK(c.d2 == 0);
    CHECK(c.d3 == 0);
    auto e = d123(3, ZZ(2));
    CHECK(e.d1 == 1);
    CHECK(!e.empty);
    auto f = d123(3, ZZ(5));
    CHECK(f.empty);
}

TEST_CASE("d3 bound and trichotomy for all m <= 60000, q in {2,3,4,5}") {
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
        for (long m = 1; m <= 60000; ++m) {
            D123 d = d123(q, ZZ(m));
            if (d.empty) continue;
            // every degree divides 6d1, divides 6d2, or is at most d3
            for (int deg : d.degrees) {
                bool ok = (6 * d.d1) % deg == 0 || (d.d2 && (6 * d.d2) % deg == 0) || deg <= d.d3;
                CHECK(ok);
            }
            if (d.d2 && d.d3) {
                // 9 d3 <= 4 log_q m, exactly: q^{9 d3} <= m^4
                CHECK(zz_pow(q, unsigned(9 * d.d3)) <= zz_pow(ZZ(m), 4));
            }
        }
    }
}

TEST_CASE("saddle point bound dominates the exact probability") {
    // direct evaluations
    CHECK(saddle_bound({1}, 3, 2.0) == doctest::Approx(std::exp(2.0) / 8.0));
    CHECK(saddle_bound({1, 2, 3}, 4, 1.0) >= 1.0);

    for (auto [degrees, n] : {std::pair<std::vector<int>, int>{{1}, 3},
                              {{1, 2, 3}, 4},
                              {{1, 2}, 9},
                              {{2, 3}, 7},
                              {{1, 3, 5}, 12}}) {
        double p = mpq_get_d(cycle_prob_exact(degrees, n).get_mpq_t());
        for (double r = 1.0; r <= 8.01; r += 0.25)
            CHECK(p <= saddle_bound(degrees, n, r) * (1 + 1e-12));
    }
}

TEST_CASE("paper_r choice") {
    // log_2(21+1) = log2(22); r = n^{1/log2(22)}
    double r = paper_r(2, ZZ(21), 16);
    CHECK(r == doctest::Approx(std::pow(16.0, std::log(2.0) / std::log(22.0))));
    CHECK(paper_r(2, ZZ(1), 7) == doctest::Approx(7.0)); // log_2 2 = 1
    // the bound at the chosen r still dominates
    auto D = allowed_degrees(2, ZZ(21), 16);
    double p = mpq_get_d(cycle_prob_exact(D.degrees, 16).get_mpq_t());
    CHECK(p <= saddle_bound(D.degrees, 16, paper_r(2, ZZ(21), 16)));
}
