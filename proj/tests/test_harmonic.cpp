#include "doctest.h"

#include "slgen/harmonic.hpp"
#include "slgen/pisigma.hpp"

using namespace slgen;

TEST_CASE("eta_cyclic examples and direct-summation oracle") {
    CHECK(eta_cyclic(ZZ(1)) == QQ(1));
    CHECK(eta_cyclic(ZZ(2)) == make_q(3, 4));
    CHECK(eta_cyclic(ZZ(6)) == make_q(5, 12));
    // direct sum over elements: ord(k in C_n) = n/gcd(n,k)
    for (long n : {1L, 2L, 12L, 30L, 97L, 360L}) {
        QQ s = 0;
        for (long k = 0; k < n; ++k) s += make_q(ZZ(std::gcd(n, k == 0 ? n : k)), ZZ(n));
        CHECK(eta_cyclic(ZZ(n)) == s / QQ(static_cast<unsigned long>(n)));
    }
    // eta_cyclic(n) <= sigma0(n)/n on a sample
    for (long n : {2L, 6L, 12L, 97L, 100L, 1024L, 3600L})
        CHECK(eta_cyclic(ZZ(n)) <= make_q(sigma0(ZZ(n)), ZZ(n)));
    CHECK_THROWS_AS(eta_cyclic(ZZ(0)), std::invalid_argument);
}

TEST_CASE("eta_bruteforce examples") {
    CHECK(eta_bruteforce(GroupKind::GL, 1, Fq::get(2, 1)).eta == QQ(1));
    EtaReport r = eta_bruteforce(GroupKind::GL, 2, Fq::get(2, 1));
    CHECK(r.eta == make_q(19, 36));
    CHECK(r.element_count == 6);
    CHECK(eta_bruteforce(GroupKind::SL, 2, Fq::get(3, 1)).eta == make_q(7, 24));
}

TEST_CASE("eta_classbased equals brute force") {
    CHECK(eta_classbased(2, Fq::get(2, 1)).eta == make_q(19, 36));
    for (unsigned long q : {2ul, 3ul, 5ul})
        CHECK(eta_classbased(1, Fq::get(q, 1)).eta == eta_cyclic(ZZ(q - 1)));
    CHECK(eta_classbased(3, Fq::get(2, 1)).eta == eta_bruteforce(GroupKind::GL, 3, Fq::get(2, 1)).eta);
    CHECK(eta_classbased(2, Fq::get(2, 2)).eta == eta_bruteforce(GroupKind::GL, 2, Fq::get(2, 2)).eta);
}

TEST_CASE("projective eta: PGL(2,2), PSL(2,3), and the explicit quotient oracle") {
    CHECK(eta_projective_bruteforce(GroupKind::PGL, 2, Fq::get(2, 1)).eta == make_q(19, 36));

    // PGL(2,3) via fiber-uniform averaging equals eta of the explicit
    // 24-element quotient group GL(2,3)/{±1}.
    const Fq& F3 = Fq::get(3, 1);
    SmallGroup gl23 = SmallGroup::from_matrix_group(F3, 2, false);
    std::vector<int> scalars;
    for (int i = 0; i < gl23.order(); ++i)
        if (gl23.mats()[std::size_t(i)].is_scalar()) scalars.push_back(i);
    REQUIRE(scalars.size() == 2);
    SmallGroup pgl = SmallGroup::quotient(gl23, scalars);
    CHECK(pgl.order() == 24);
    CHECK(eta_projective_bruteforce(GroupKind::PGL, 2, F3).eta == pgl.eta());

    // PSL(2,3) from SL(2,3) with projective orders
    SmallGroup sl23 = SmallGroup::from_matrix_group(F3, 2, true);
    std::vector<int> sc2;
    for (int i = 0; i < sl23.order(); ++i)
        if (sl23.mats()[std::size_t(i)].is_scalar()) sc2.push_back(i);
    REQUIRE(sc2.size() == 2);
    SmallGroup psl = SmallGroup::quotient(sl23, sc2);
    CHECK(psl.order() == 12);
    CHECK(eta_projective_bruteforce(GroupKind::PSL, 2, F3).eta == psl.eta());
}

TEST_CASE("subgroup / quotient / PSL inequalities on small instances") {
    for (auto [n, q] : {std::pair<int, unsigned long>{2, 2}, {2, 3}, {3, 2}}) {
        const Fq& F = Fq::get(q, 1);
        QQ egl = eta_bruteforce(GroupKind::GL, n, F).eta;
        QQ esl = eta_bruteforce(GroupKind::SL, n, F).eta;
        QQ epgl = eta_projective_bruteforce(GroupKind::PGL, n, F).eta;
        QQ epsl = eta_projective_bruteforce(GroupKind::PSL, n, F).eta;
        CHECK(esl <= QQ(ZZ(q - 1)) * egl);
        CHECK(egl <= epgl);
        CHECK(epgl <= QQ(ZZ(q - 1)) * egl);
        CHECK(epsl <= QQ(2) * esl);
    }
}

TEST_CASE("bound_curve rows") {
    auto rows = bound_curve(2, 5, Fq::get(2, 1));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].eta == make_q(19, 36));
    for (const auto& r : rows) {
        CHECK(r.eta > 0);
        CHECK(r.eta <= 1);
        CHECK(r.minus_log_eta > 0);
        CHECK(r.threshold > 0);
        CHECK(r.ratio > 0);
        CHECK(std::isfinite(r.ratio));
    }
}
