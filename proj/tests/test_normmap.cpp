#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "slgen/normmap.hpp"

using namespace slgen;

TEST_CASE("norm basics") {
    const Fq& F3 = Fq::get(3, 1);
    const ExtField& E = ExtField::get(F3, 2); // GF(9)
    CHECK(norm(E, 1) == 1);
    CHECK(norm(E, 0) == 0);
    // generator g: N(g) = g^4 has order 2, i.e. the base element 2
    CHECK(norm(E, E.generator()) == 2);
    // q = 2: norm of any nonzero element is 1
    const ExtField& E8 = ExtField::get(Fq::get(2, 1), 3);
    for (std::uint32_t x = 1; x < 8; ++x) CHECK(norm(E8, fq_t(x)) == 1);
}

TEST_CASE("norm_image_on: full field, subfield counterexample, big subspace") {
    const Fq& F3 = Fq::get(3, 1);
    const ExtField& E9 = ExtField::get(F3, 2);
    CHECK(norm_image_on(full_subspace(E9)) == std::vector<fq_t>{0, 1, 2});
    // W = GF(3) inside GF(9): norms are squares only
    CHECK(norm_image_on(subfield_subspace(E9, 1)) == std::vector<fq_t>{0, 1});

    // dim >= n/2 + 1 instance: a hyperplane of GF(3^4)
    const ExtField& E81 = ExtField::get(F3, 4);
    auto hyper = enumerate_hyperplanes(E81);
    REQUIRE(hyper.size() == (81 * 3 - 1) / 2 / 1u + 0u); // (3^4-1)/(3-1) = 40
    CHECK(hyper.size() == 40);
    CHECK(norm_image_on(hyper[0]) == std::vector<fq_t>{0, 1, 2});
}

TEST_CASE("hyperplane counts and dimensions") {
    const ExtField& E9 = ExtField::get(Fq::get(3, 1), 2);
    auto h1 = enumerate_hyperplanes(E9);
    CHECK(h1.size() == 4); // (9-1)/2
    for (const auto& w : h1) CHECK(w.dim() == 1);

    const ExtField& E8 = ExtField::get(Fq::get(2, 1), 3);
    auto h2 = enumerate_hyperplanes(E8);
    CHECK(h2.size() == 7);
    for (const auto& w : h2) CHECK(w.dim() == 2);
    // hyperplanes are pairwise distinct as sets
    std::set<std::vector<fq_t>> sets;
    for (const auto& w : h2) {
        auto e = subspace_elements(w);
        std::sort(e.begin(), e.end());
        sets.insert(e);
    }
    CHECK(sets.size() == 7);
}

TEST_CASE("hyperplanes are norm-surjective (3 <= n <= 6, q^n <= 4096), incl (3,4)") {
    for (auto [p, e, n] : {std::tuple<unsigned long, unsigned, unsigned>{2, 1, 3},
                           {2, 1, 6},
                           {3, 1, 3},
                           {3, 1, 5},
                           {2, 2, 3}, // the (n,q) = (3,4) direct check
                           {5, 1, 4}}) {
        const Fq& F = Fq::get(p, e);
        const ExtField& E = ExtField::get(F, n);
        for (const auto& w : enumerate_hyperplanes(E)) CHECK(norm_surjective_on(w));
    }
}

TEST_CASE("subfield counterexamples are not surjective") {
    for (auto [q, n] : {std::pair<unsigned long, unsigned>{3, 2}, {5, 2}, {3, 4}}) {
        const ExtField& E = ExtField::get(Fq::get(q, 1), n);
        Subspace w = subfield_subspace(E, n / 2);
        CHECK(!norm_surjective_on(w));
        // the image misses exactly the non-squares of the base field
        auto img = norm_image_on(w);
        const Fq& F = E.base();
        for (fq_t v = 1; v < F.q(); ++v) {
            bool is_square = F.log(v) % 2 == 0;
            bool in_img = std::find(img.begin(), img.end(), v) != img.end();
            CHECK(in_img == is_square);
        }
    }
}

TEST_CASE("random large subspaces are surjective") {
    Rng rng(314159);
    for (auto [p, e, n] : {std::tuple<unsigned long, unsigned, unsigned>{2, 1, 5},
                           {2, 1, 6},
                           {3, 1, 4},
                           {3, 1, 5},
                           {5, 1, 3},
                           {2, 2, 3}}) {
        const ExtField& E = ExtField::get(Fq::get(p, e), n);
        unsigned dim = n / 2 + 1;
        for (int t = 0; t < 40; ++t) CHECK(norm_surjective_on(random_subspace(E, dim, rng)));
        // case (2): dim (n+1)/2 with gcd(n, q-1) < sqrt(q) + 1
        const Fq& F = Fq::get(p, e);
        if (n % 2 == 1 && std::gcd((unsigned long)n, F.q() - 1ul) < std::sqrt(double(F.q())) + 1) {
            for (int t = 0; t < 40; ++t)
                CHECK(norm_surjective_on(random_subspace(E, (n + 1) / 2, rng)));
        }
    }
}

TEST_CASE("multiplicative characters") {
    const Fq& F5 = Fq::get(5, 1);
    MultChar chi2 = mult_char_of_order(F5, 2);
    CHECK(chi2.order() == 2);
    CHECK(!chi2.trivial());
    CHECK(mult_char_of_order(F5, 1).trivial());
    CHECK_THROWS_AS(mult_char_of_order(F5, 3), std::invalid_argument);
    // multiplicativity
    for (fq_t a = 1; a < 5; ++a)
        for (fq_t b = 1; b < 5; ++b) {
            Cplx lhs = chi2.value(F5.mul(a, b));
            Cplx rhs = chi2.value(a) * chi2.value(b);
            CHECK(std::abs(lhs - rhs) < 1e-15L);
        }
    CHECK(all_mult_chars(F5).size() == 4);
}

TEST_CASE("character_sum_on_subspace: trivial character and vanishing") {
    const Fq& F3 = Fq::get(3, 1);
    const ExtField& E9 = ExtField::get(F3, 2);
    // trivial chi with chi(0)=0 counts elements of nonzero norm
    Cplx s = character_sum_on_subspace(full_subspace(E9), mult_char_of_order(F3, 1));
    CHECK(std::abs(s - Cplx(8, 0)) < 1e-12L);
    // with the other convention zero contributes too
    Cplx s1 =
        character_sum_on_subspace(full_subspace(E9), mult_char_of_order(F3, 1), ZeroConvention::one);
    CHECK(std::abs(s1 - Cplx(9, 0)) < 1e-12L);

    // order(chi) does not divide n: the sum vanishes on every subspace
    const Fq& F5 = Fq::get(5, 1);
    const ExtField& E125 = ExtField::get(F5, 3);
    MultChar chi2 = mult_char_of_order(F5, 2);
    CHECK(std::abs(character_sum_on_subspace(full_subspace(E125), chi2)) < 1e-9L);
    for (const auto& w : enumerate_hyperplanes(E125))
        CHECK(std::abs(character_sum_on_subspace(w, chi2)) < 1e-9L);
    Rng rng(8);
    for (int t = 0; t < 10; ++t)
        CHECK(std::abs(character_sum_on_subspace(random_subspace(E125, 2, rng), chi2)) < 1e-9L);
    // W = {0}
    Subspace zero{&E125, {}};
    CHECK(std::abs(character_sum_on_subspace(zero, chi2)) == 0.0L);
}

TEST_CASE("gauss_sum_magnitude equals q^{n/2}") {
    for (auto [q, n] : {std::pair<unsigned long, unsigned>{3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
        const Fq& F = Fq::get(q, 1);
        const ExtField& E = ExtField::get(F, n);
        long double expect = std::pow((long double)q, n / 2.0L);
        for (unsigned r = 2; r <= F.q() - 1; ++r) {
            if ((F.q() - 1) % r != 0) continue;
            MultChar chi = mult_char_of_order(F, r);
            for (fq_t b : {fq_t(1), E.generator()}) {
                AddChar theta{&E, b};
                long double got = gauss_sum_magnitude(E, chi, theta);
                CHECK(std::abs(got - expect) <= 1e-9L * expect);
            }
        }
    }
    const Fq& F3 = Fq::get(3, 1);
    const ExtField& E9 = ExtField::get(F3, 2);
    CHECK_THROWS_AS(gauss_sum_magnitude(E9, mult_char_of_order(F3, 1), AddChar{&E9, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_magnitude(E9, mult_char_of_order(F3, 2), AddChar{&E9, 0}),
                    std::invalid_argument);
}

TEST_CASE("count_by_norm matches the character formula and known fibers") {
    const Fq& F3 = Fq::get(3, 1);
    const ExtField& E9 = ExtField::get(F3, 2);
    CHECK(count_by_norm(subfield_subspace(E9, 1), 2) == 0);
    CHECK(count_by_norm(subfield_subspace(E9, 1), 1) == 2);
    // full field: every nonzero fiber has (q^n-1)/(q-1) elements
    for (auto [q, n] : {std::pair<unsigned long, unsigned>{3, 2}, {2, 4}, {5, 2}}) {
        const ExtField& E = ExtField::get(Fq::get(q, 1), n);
        ZZ fiber_z = (zz_pow(q, n) - 1) / (q - 1);
        long fiber = fiber_z.get_si();
        for (fq_t a = 1; a < E.base().q(); ++a)
            CHECK(count_by_norm(full_subspace(E), a) == fiber);
    }
    // character formula agreement with rounding gap
    Rng rng(77);
    for (auto [q, n] : {std::pair<unsigned long, unsigned>{3, 3}, {5, 2}, {2, 5}}) {
        const ExtField& E = ExtField::get(Fq::get(q, 1), n);
        std::vector<Subspace> spaces = enumerate_hyperplanes(E);
        spaces.push_back(full_subspace(E));
        for (int t = 0; t < 5; ++t) spaces.push_back(random_subspace(E, (n + 1) / 2, rng));
        for (const auto& w : spaces)
            for (fq_t a = 1; a < E.base().q(); ++a) {
                long exact = count_by_norm(w, a);
                long double formula = count_by_norm_character_formula(w, a);
                CHECK(std::abs(formula - (long double)exact) < 0.4L);
                CHECK(std::llround((double)formula) == exact);
            }
    }
    CHECK_THROWS_AS(count_by_norm(full_subspace(E9), 0), std::invalid_argument);
}
