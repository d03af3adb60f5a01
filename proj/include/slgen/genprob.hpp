#pragma once

#include <optional>
#include <string>

#include "slgen/gensets.hpp"
#include "slgen/pisigma.hpp"

namespace slgen {

struct GenProbExact {
    int n;
    unsigned long q;
    ZZ group_size;
    QQ p_generate; // exact P(<pi,sigma> = SL(n,q)) over uniform pairs
    QQ p_miss;     // 1 - p_generate
    std::string method;
};
// All-pairs closure for |SL| <= closure_limit (default ~500); conjugacy
// reduction with a stabilizer chain per (class representative, sigma) pair
// for |SL| <= 5000.
GenProbExact generation_probability_exact(int n, const Fq& F,
                                          std::uint64_t closure_limit = 500);

struct GenerationTrialReport {
    int n;
    unsigned long q;
    std::uint64_t trials;
    std::uint64_t successes;
    double estimate; // generation rate successes/trials
    double stderr_;
    std::optional<QQ> exact;
    double kantor_benchmark; // 2 q^{-n}, benchmark for the non-generation rate
    std::uint64_t seed;
};
GenerationTrialReport generation_probability_mc(int n, const Fq& F, std::uint64_t trials,
                                                std::uint64_t seed, bool with_exact = false);

struct WitnessReport {
    int n;
    unsigned long q;
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t hit_c1;   // trials where some pi sigma^i lies in C1
    std::uint64_t hit_c2;   // ... in C2
    std::uint64_t hit_both; // both sets were hit along the scan
    std::uint64_t generated_given_both;
    double conditional_generation_rate; // generated_given_both / hit_both
};
// Scans pi sigma^i for i = 0..ord(sigma)-1 per random pair and reports hit
// frequencies plus the generation rate conditioned on hitting both sets.
WitnessReport witness_strategy_check(int n, const Fq& F, std::uint64_t trials,
                                     std::uint64_t seed);

} // namespace slgen
