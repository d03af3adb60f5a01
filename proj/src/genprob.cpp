#include "slgen/genprob.hpp"

#include <cmath>
#include <stdexcept>

namespace slgen {

GenProbExact generation_probability_exact(int n, const Fq& F, std::uint64_t closure_limit) {
    if (n < 1) throw std::invalid_argument("generation_probability_exact: n must be >= 1");
    ZZ size = group_order(GroupKind::SL, n, F.q());
    if (n == 1) return {n, F.q(), size, QQ(1), QQ(0), "trivial"};
    if (size <= ZZ(static_cast<unsigned long>(closure_limit))) {
        SmallGroup g = SmallGroup::from_matrix_group(F, n, /*sl=*/true, closure_limit + 1);
        PairClosures pc(g);
        QQ p = pc.generation_probability();
        return {n, F.q(), size, p, QQ(1) - p, "closure"};
    }
    if (size <= 5000) {
        // P depends on pi only through its class: average over (rep, sigma).
        auto classes = conjugacy_classes_brute(F, n, /*sl_only=*/true, 5000);
        std::vector<Mat> elems;
        for (const auto& cls : classes)
            for (const Mat& m : cls) elems.push_back(m);
        QQ p = 0;
        for (const auto& cls : classes) {
            long gen = 0;
            for (const Mat& sigma : elems)
                if (generated_group_order({cls[0], sigma}) == size) ++gen;
            p += make_q(ZZ(static_cast<unsigned long>(cls.size())) * gen,
                        size * size);
        }
        return {n, F.q(), size, p, QQ(1) - p, "class-reduction"};
    }
    throw limit_error("generation_probability_exact: group too large");
}

GenerationTrialReport generation_probability_mc(int n, const Fq& F, std::uint64_t trials,
                                                std::uint64_t seed, bool with_exact) {
    if (n < 1 || trials < 1)
        throw std::invalid_argument("generation_probability_mc: bad parameters");
    ZZ size = group_order(GroupKind::SL, n, F.q());
    ZZ points = zz_pow(F.q(), unsigned(n)) - 1;
    if (points > ZZ(static_cast<unsigned long>(schreier_sims_point_limit())))
        throw limit_error("generation_probability_mc: point set exceeds limit");
    Rng rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Mat pi = random_sl(F, n, rng);
        Mat sigma = random_sl(F, n, rng);
        if (generated_group_order({pi, sigma}) == size) ++successes;
    }
    double est = double(successes) / double(trials);
    GenerationTrialReport rep;
    rep.n = n;
    rep.q = F.q();
    rep.trials = trials;
    rep.successes = successes;
    rep.estimate = est;
    rep.stderr_ = std::sqrt(est * (1.0 - est) / double(trials));
    if (with_exact) rep.exact = generation_probability_exact(n, F).p_generate;
    rep.kantor_benchmark = 2.0 * std::pow(double(F.q()), -double(n));
    rep.seed = seed;
    return rep;
}

WitnessReport witness_strategy_check(int n, const Fq& F, std::uint64_t trials,
                                     std::uint64_t seed) {
    if (n < 2 || trials < 1)
        throw std::invalid_argument("witness_strategy_check: bad parameters");
    ZZ size = group_order(GroupKind::SL, n, F.q());
    ZZ points = zz_pow(F.q(), unsigned(n)) - 1;
    if (points > ZZ(static_cast<unsigned long>(schreier_sims_point_limit())))
        throw limit_error("witness_strategy_check: point set exceeds limit");
    Rng rng(seed);
    WitnessReport rep{};
    rep.n = n;
    rep.q = F.q();
    rep.trials = trials;
    rep.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Mat pi = random_sl(F, n, rng);
        Mat sigma = random_sl(F, n, rng);
        ZZ ord = element_order_direct(sigma);
        bool c1 = false, c2 = false;
        Mat x = pi;
        for (ZZ i = 0; i < ord; ++i) {
            if (!c1 && in_C1(x)) c1 = true;
            if (!c2 && in_C2(x)) c2 = true;
            if (c1 && c2) break;
            x = mul(x, sigma);
        }
        if (c1) ++rep.hit_c1;
        if (c2) ++rep.hit_c2;
        if (c1 && c2) {
            ++rep.hit_both;
            if (generated_group_order({pi, sigma}) == size) ++rep.generated_given_both;
        }
    }
    rep.conditional_generation_rate =
        rep.hit_both ? double(rep.generated_given_both) / double(rep.hit_both) : 0.0;
    return rep;
}

} // namespace slgen
