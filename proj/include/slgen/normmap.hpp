#pragma once

#include <complex>
#include <vector>

#include "slgen/ff.hpp"
#include "slgen/util.hpp"

namespace slgen {

using Cplx = std::complex<long double>;

// F_q-linear subspace of GF(q^n), given by an independent basis.
struct Subspace {
    const ExtField* E = nullptr;
    std::vector<fq_t> basis;
    unsigned dim() const { return unsigned(basis.size()); }
};

Subspace make_subspace(const ExtField& E, std::vector<fq_t> basis); // checks independence
Subspace full_subspace(const ExtField& E);
Subspace subfield_subspace(const ExtField& E, unsigned k); // GF(q^k), k | n
// All (q^n-1)/(q-1) hyperplanes, as kernels of x -> Tr(a x) with a ranging
// over coset representatives of F_{q^n}^x / F_q^x.
std::vector<Subspace> enumerate_hyperplanes(const ExtField& E);
Subspace random_subspace(const ExtField& E, unsigned dim, Rng& rng);

std::vector<fq_t> subspace_elements(const Subspace& W); // all q^dim, deterministic order

// N(x) = x^{(q^n-1)/(q-1)}, into the base field; N(0) = 0.
fq_t norm(const ExtField& E, fq_t x);

std::vector<fq_t> norm_image_on(const Subspace& W); // sorted distinct values
bool norm_surjective_on(const Subspace& W);

// chi(0) convention: 'zero' sets chi(0) = 0 for every character (this is the
// convention under which the norm-count identity is exact); 'one' makes the
// trivial character count 0 as well (chi_0(0) = 1).
enum class ZeroConvention { zero, one };

struct MultChar {
    const Fq* F = nullptr;
    unsigned t = 0; // chi(g^j) = exp(2 pi i t j / (q-1))
    unsigned order() const;
    bool trivial() const { return t % (F->q() - 1) == 0; }
    Cplx value(fq_t x, ZeroConvention conv = ZeroConvention::zero) const;
};
MultChar mult_char_of_order(const Fq& F, unsigned r); // r | q-1
std::vector<MultChar> all_mult_chars(const Fq& F);    // the q-1 characters of F_q^x

struct AddChar {
    const ExtField* E = nullptr;
    fq_t b = 0; // theta_b(x) = exp(2 pi i Tr(b x) / p), absolute trace
    bool trivial() const { return b == 0; }
    Cplx value(fq_t x) const;
};

// sum_{x in W} chi(N(x)) under the chosen convention (Kahan-summed in a
// fixed order).
Cplx character_sum_on_subspace(const Subspace& W, const MultChar& chi,
                               ZeroConvention conv = ZeroConvention::zero);

// |sum_{x in GF(q^n)} theta(x) chi(N(x))|; chi and theta must be nontrivial.
long double gauss_sum_magnitude(const ExtField& E, const MultChar& chi, const AddChar& theta);

// Exact #{x in W : N(x) = a} by enumeration; a != 0.
long count_by_norm(const Subspace& W, fq_t a);
// The same count via (1/(q-1)) sum_chi sum_{x in W} chi(N(x)) conj(chi(a)).
long double count_by_norm_character_formula(const Subspace& W, fq_t a);

} // namespace slgen
