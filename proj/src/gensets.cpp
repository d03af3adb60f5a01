#include "slgen/gensets.hpp"

#include <stdexcept>

namespace slgen {

bool in_C1(const Mat& g) {
    if (det(g) != 1) throw std::invalid_argument("in_C1: determinant must be 1");
    const Fq& F = *g.F;
    Poly cp = char_poly(g);
    if (!pol::is_irreducible(F, cp)) return false;
    ZZ target = (zz_pow(F.q(), unsigned(g.n)) - 1) / (F.q() - 1);
    return pol::order(F, cp) == target;
}

bool in_C2(const Mat& g) {
    if (det(g) != 1) throw std::invalid_argument("in_C2: determinant must be 1");
    const Fq& F = *g.F;
    int n = g.n;
    if (n < 2) return false;
    ElementaryDivisors ed = invariant_factors(g);
    if (ed.divs.size() != 2) return false;
    if (ed.divs[0].second != 1 || ed.divs[1].second != 1) return false;
    ZZ target = zz_pow(F.q(), unsigned(n - 1)) - 1;
    for (int which = 0; which < 2; ++which) {
        const Poly& line = ed.divs[std::size_t(which)].first;
        const Poly& hyper = ed.divs[std::size_t(1 - which)].first;
        if (pol::deg(line) != 1 || pol::deg(hyper) != n - 1) continue;
        if (pol::order(F, hyper) != target) continue;
        if (lcm(pol::order(F, line), target) == target) return true;
    }
    return false;
}

QQ density_C1(int n, const Fq& F) {
    if (n < 2) throw std::invalid_argument("density_C1: n must be >= 2");
    ZZ qn1 = zz_pow(F.q(), unsigned(n)) - 1;
    return make_q(ZZ(F.q() - 1) * euler_phi(qn1 / (F.q() - 1)), ZZ(n) * qn1);
}

QQ density_C2(int n, const Fq& F) {
    if (n < 3) {
        if (n == 2 && F.q() == 3)
            throw std::invalid_argument("density_C2: (n,q) = (2,3) is excluded");
        throw std::invalid_argument("density_C2: n must be >= 3");
    }
    ZZ qm1 = zz_pow(F.q(), unsigned(n - 1)) - 1;
    return make_q(euler_phi(qm1), ZZ(n - 1) * qm1);
}

Mat sample_member(GenSetKind kind, int n, const Fq& F, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sample_member: n must be >= 2");
    for (;;) {
        Mat g = random_sl(F, n, rng);
        if (kind == GenSetKind::C1 ? in_C1(g) : in_C2(g)) return g;
    }
}

bool generation_verify(const Mat& g1, const Mat& g2) {
    if (g1.F != g2.F || g1.n != g2.n)
        throw std::invalid_argument("generation_verify: mismatched matrices");
    const Fq& F = *g1.F;
    int n = g1.n;
    if (!in_C1(g1)) throw std::invalid_argument("generation_verify: g1 not in C1");
    if (!in_C2(g2)) throw std::invalid_argument("generation_verify: g2 not in C2");
    if (n < 3) throw std::invalid_argument("generation_verify: n must be >= 3");
    if (n == 3 && F.q() == 4)
        throw std::invalid_argument("generation_verify: (n,q) = (3,4) is excluded");
    return generated_group_order({g1, g2}) == group_order(GroupKind::SL, n, F.q());
}

} // namespace slgen
