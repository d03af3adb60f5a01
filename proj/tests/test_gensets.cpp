#include "doctest.h"

#include <set>

#include "slgen/gensets.hpp"

using namespace slgen;

TEST_CASE("in_C1 examples") {
    const Fq& F2 = Fq::get(2, 1);
    CHECK(in_C1(Mat::companion(F2, Poly{1, 1, 0, 1}))); // order 7 = (8-1)/1
    CHECK(!in_C1(Mat::identity(F2, 3)));
    CHECK(!in_C1(Mat::companion(F2, Poly{1, 1, 1, 1, 1}))); // order 5 != 15
    Mat notsl(F2, 2);
    CHECK_THROWS_AS(in_C1(notsl), std::invalid_argument);
}

TEST_CASE("in_C2 examples") {
    const Fq& F2 = Fq::get(2, 1);
    Mat one(F2, 1);
    one.at(0, 0) = 1;
    Mat g2 = Mat::block_diag(one, Mat::companion(F2, Poly{1, 1, 1}));
    CHECK(in_C2(g2));
    CHECK(!in_C2(Mat::identity(F2, 3)));
    // C1 members split nothing: membership is exclusive for n >= 3
    CHECK(!in_C2(Mat::companion(F2, Poly{1, 1, 0, 1})));
}

TEST_CASE("densities match exhaustive membership counts") {
    CHECK(density_C1(3, Fq::get(2, 1)) == make_q(2, 7));
    CHECK(density_C1(2, Fq::get(2, 1)) == make_q(1, 3));
    CHECK(density_C1(4, Fq::get(2, 1)) == make_q(2, 15));
    CHECK(density_C2(3, Fq::get(2, 1)) == make_q(1, 3));
    CHECK(density_C2(4, Fq::get(2, 1)) == make_q(2, 7));
    CHECK(density_C2(3, Fq::get(3, 1)) == make_q(1, 4));
    CHECK_THROWS_AS(density_C2(2, Fq::get(3, 1)), std::invalid_argument);

    // exhaustive counts; C1 at the n=2 instances as well
    for (auto [n, q, c2also] : {std::tuple<int, unsigned long, bool>{2, 2, false},
                                {2, 3, false},
                                {2, 5, false},
                                {3, 2, true},
                                {3, 3, true},
                                {4, 2, true}}) {
        const Fq& F = Fq::get(q, 1);
        long count1 = 0, count2 = 0, total = 0;
        for_each_sl(F, n, [&](const Mat& g) {
            ++total;
            if (in_C1(g)) ++count1;
            if (c2also && in_C2(g)) ++count2;
        });
        CHECK(make_q(count1, total) == density_C1(n, F));
        if (c2also) CHECK(make_q(count2, total) == density_C2(n, F));
    }
}

TEST_CASE("C1 and C2 are disjoint at (3,2); density lower bound is recorded") {
    const Fq& F2 = Fq::get(2, 1);
    for_each_sl(F2, 3, [&](const Mat& g) { CHECK(!(in_C1(g) && in_C2(g))); });

    // |C_i|/|SL| * n log log(q^n) stays bounded away from zero
    double min_seen = 1e9;
    for (auto [n, q] : {std::pair<int, unsigned long>{3, 2}, {3, 3}, {4, 2}, {5, 2}, {4, 3}}) {
        const Fq& F = Fq::get(q, 1);
        double scale = double(n) * std::log(std::log(std::pow(double(q), n)));
        for (QQ d : {density_C1(n, F), density_C2(n, F)})
            min_seen = std::min(min_seen, mpq_get_d(d.get_mpq_t()) * scale);
    }
    CHECK(min_seen > 0.1);
}

TEST_CASE("sample_member returns members") {
    const Fq& F2 = Fq::get(2, 1);
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        CHECK(in_C1(sample_member(GenSetKind::C1, 3, F2, rng)));
        CHECK(in_C2(sample_member(GenSetKind::C2, 3, F2, rng)));
    }
    // (C1,2,2): exactly the two elements of order 3 in SL(2,2)
    std::set<std::uint64_t> seen;
    for (int t = 0; t < 200; ++t) seen.insert(sample_member(GenSetKind::C1, 2, F2, rng).encode());
    CHECK(seen.size() == 2);
}

TEST_CASE("generation_verify preconditions and outcomes") {
    const Fq& F2 = Fq::get(2, 1);
    Mat g1 = Mat::companion(F2, Poly{1, 1, 0, 1});
    Mat one(F2, 1);
    one.at(0, 0) = 1;
    Mat g2 = Mat::block_diag(one, Mat::companion(F2, Poly{1, 1, 1}));
    // this aligned pair generates only the order-21 Frobenius group
    CHECK(!generation_verify(g1, g2));
    Mat t = Mat::identity(F2, 3);
    t.at(0, 1) = 1;
    CHECK(generation_verify(g1, mul(mul(t, g2), inverse(t))));

    CHECK_THROWS_WITH_AS(generation_verify(g2, g2), "generation_verify: g1 not in C1",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(generation_verify(g1, Mat::identity(F2, 3)),
                         "generation_verify: g2 not in C2", std::invalid_argument);

    // sampled pairs generate at (3,3) and (4,2)
    for (auto [n, q] : {std::pair<int, unsigned long>{3, 3}, {4, 2}}) {
        const Fq& F = Fq::get(q, 1);
        Rng rng(5000 + q);
        for (int i = 0; i < 25; ++i) {
            Mat a = sample_member(GenSetKind::C1, n, F, rng);
            Mat b = sample_member(GenSetKind::C2, n, F, rng);
            CHECK(generation_verify(a, b));
        }
    }
}
