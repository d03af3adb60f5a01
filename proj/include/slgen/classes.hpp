#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "slgen/matgrp.hpp"

namespace slgen {

// Canonicalizing rational constructor (mpq_class(num, den) does not reduce).
inline QQ make_q(const ZZ& num, const ZZ& den) {
    QQ r(num, den);
    r.canonicalize();
    return r;
}

// A GL(n,q) conjugacy class: each monic irreducible polynomial f != X that
// occurs carries a nonempty partition (parts descending). Polynomials are
// kept in canonical order, so labels compare by ==.
struct ClassLabel {
    std::vector<std::pair<Poly, std::vector<unsigned>>> nu;
    bool operator==(const ClassLabel&) const = default;
};

// Irreducibles != X by degree (index d in [1, maxdeg]), with their orders.
struct IrredTable {
    const Fq* F;
    std::vector<std::vector<Poly>> polys;
    std::vector<std::vector<ZZ>> orders;
    IrredTable(const Fq& F, unsigned maxdeg);
};

// Streams every GL(n,q) class label exactly once, deterministic order:
// degrees ascending, polynomials in canonical order within a degree,
// partitions largest-part-first.
void enumerate_class_labels(const Fq& F, int n, const std::function<void(const ClassLabel&)>& fn);
std::vector<ClassLabel> class_labels(const Fq& F, int n);

ClassLabel label_of(const Mat& g); // g invertible

ZZ centralizer_order(const ClassLabel& label, const Fq& F);
ZZ class_order(const ClassLabel& label, const Fq& F);

// Restriction of the class sum to multiplicity-one labels: sum over
// multisets {f_1,...,f_l} of irreducibles != X with total degree n of
// 1/lcm(ord f_1, ..., ord f_l).
QQ eta1_exact(int n, const Fq& F);

// Number of labels with every multiplicity >= 2.
ZZ eta2_exact(int n, const Fq& F);

struct LowerBoundContribution {
    QQ exact;       // sum over (n/d)-subsets of distinct degree-d irreducibles
    QQ closed_form; // binom(|F_d|, n/d) / ((q^d-1)^{n/d} (q^d-1))
};
// Contribution to eta_{GL(n,q)} from classes whose characteristic polynomial
// splits into n/d distinct irreducible factors of degree d. Requires d | n.
LowerBoundContribution lower_bound_contribution(int n, const Fq& F, int d);

} // namespace slgen
