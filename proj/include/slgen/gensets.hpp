#pragma once

#include "slgen/classes.hpp"

namespace slgen {

enum class GenSetKind { C1, C2 };

// Irreducible characteristic polynomial and element order (q^n-1)/(q-1).
// Rejects matrices with det != 1.
bool in_C1(const Mat& g);

// Elementary divisors {(X-lambda, 1), (f, 1)} with f of degree n-1 and
// order q^{n-1}-1, and element order q^{n-1}-1 (a line (+) hyperplane split).
bool in_C2(const Mat& g);

// |C1| / |SL(n,q)| = (q-1) phi((q^n-1)/(q-1)) / (n (q^n-1)).
QQ density_C1(int n, const Fq& F);

// |C2| / |SL(n,q)| = phi(q^{n-1}-1) / ((n-1)(q^{n-1}-1)). Requires n >= 3:
// for n = 2 the class/polynomial bijection behind the formula degenerates
// ((2,3) being the case the formula's source singles out).
QQ density_C2(int n, const Fq& F);

// Uniform member by rejection from SL(n,q).
Mat sample_member(GenSetKind kind, int n, const Fq& F, Rng& rng);

// Requires g1 in C1 and g2 in C2 (distinct errors otherwise), n >= 3 and
// (n,q) != (3,4); true iff <g1,g2> has the full SL(n,q) order.
bool generation_verify(const Mat& g1, const Mat& g2);

} // namespace slgen
