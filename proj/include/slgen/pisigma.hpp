#pragma once

#include <string>
#include <vector>

#include "slgen/matgrp.hpp"

namespace slgen {

// A fully tabulated finite group: elements 0..order-1, identity at index 0.
// Group laws are spot-checked at construction.
class SmallGroup {
  public:
    static SmallGroup cyclic(unsigned m);
    static SmallGroup dihedral(unsigned m); // order 2m
    static SmallGroup from_matrix_group(const Fq& F, int n, bool sl,
                                        std::uint64_t max_order = 2000);
    // Quotient by a normal subgroup given as element indices (validated).
    static SmallGroup quotient(const SmallGroup& G, const std::vector<int>& normal);

    int order() const { return int(mul_.size() == 0 ? 0 : n_); }
    int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + std::size_t(b)]; }
    int inv(int a) const { return inv_[std::size_t(a)]; }
    long elem_order(int a) const { return ord_[std::size_t(a)]; }
    int cls(int a) const { return cls_[std::size_t(a)]; }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::string& name() const { return name_; }
    // Matrices backing a from_matrix_group instance (empty otherwise).
    const std::vector<Mat>& mats() const { return mats_; }

    QQ eta() const; // (1/|G|) sum 1/ord

  private:
    std::size_t n_ = 0;
    std::vector<int> mul_, inv_, cls_;
    std::vector<long> ord_;
    std::vector<std::vector<int>> classes_;
    std::vector<Mat> mats_;
    std::string name_;

    void finalize();
};

// Exact class function eta(g) = sum_{sigma : g in <sigma>} 1/ord(sigma).
std::vector<QQ> eta_class_function(const SmallGroup& G);

// r_i(x) = #{sigma : sigma^i = x}.
long power_count(const SmallGroup& G, unsigned long i, int x);

struct WeightedPowerSum {
    QQ sum;    // sum_{i=1}^{N} 2(N-i) r_i(x)
    QQ n2_eta; // N^2 eta(x)
    QQ gap;    // |sum - n2_eta|
};
WeightedPowerSum weighted_power_sum_check(const SmallGroup& G, int x, unsigned long N);

// Memoized generated-subgroup bitsets for all unordered pairs.
class PairClosures {
  public:
    explicit PairClosures(const SmallGroup& G);
    // P over uniform ordered pairs that <pi,sigma> misses C entirely.
    QQ miss_probability(const std::vector<char>& in_c) const;
    // P over uniform ordered pairs that <pi,sigma> is the whole group.
    QQ generation_probability() const;

  private:
    const SmallGroup* G_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_; // closure bitset per unordered pair
    std::size_t pair_index(int a, int b) const;
};

// Limiting second-moment ratio (|G|/|C|)^2 (1/|G|^2) sum_{pi,g in C}
// eta(pi^{-1} g) - 1 for a nonempty conjugation-invariant C.
QQ second_moment_limit(const SmallGroup& G, const std::vector<char>& in_c);

// Convenience single-shot miss probability (builds the pair closures).
QQ miss_probability(const SmallGroup& G, const std::vector<char>& in_c);

} // namespace slgen
