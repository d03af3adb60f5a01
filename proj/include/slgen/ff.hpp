#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slgen/numth.hpp"

namespace slgen {

// A field element, encoded as an integer index. For GF(p^e) the index of
// sum c_i X^i is sum c_i p^i; extension fields over GF(q) use base-q digits
// the same way. JSON/CSV output uses these canonical integer encodings.
using fq_t = std::uint32_t;

// GF(p^e) with a fixed, documented modulus: the lexicographically smallest
// monic irreducible of degree e over GF(p) (polynomials ordered by integer
// encoding). Multiplication, inverse and powers go through exp/log tables,
// so the field size is capped at kMaxCard.
class Fq {
  public:
    static constexpr std::uint64_t kMaxCard = 1ull << 20;

    // Cached registry; returned references stay valid for program lifetime.
    static const Fq& get(unsigned long p, unsigned e);

    unsigned long p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint32_t q() const { return q_; }
    // Modulus coefficients over GF(p), ascending degree, length e+1, monic.
    const std::vector<fq_t>& modulus() const { return modulus_; }

    fq_t of_int(long v) const;
    fq_t add(fq_t a, fq_t b) const;
    fq_t neg(fq_t a) const;
    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const;
    fq_t inv(fq_t a) const;
    fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }
    fq_t pow_u(fq_t a, std::uint64_t k) const;
    fq_t pow(fq_t a, const ZZ& k) const;

    fq_t generator() const { return gen_; }
    std::uint32_t log(fq_t a) const;
    fq_t exp_log(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
    fq_t frobenius(fq_t a) const; // a^p
    unsigned long trace_to_prime(fq_t a) const;
    std::vector<fq_t> prime_digits(fq_t a) const;

    Fq(const Fq&) = delete;
    Fq& operator=(const Fq&) = delete;

  private:
    Fq(unsigned long p, unsigned e);

    unsigned long p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<fq_t> modulus_;
    fq_t gen_ = 1;
    std::vector<fq_t> exp_;          // size q-1: generator^k
    std::vector<std::uint32_t> log_; // size q; log_[0] undefined
};

// Polynomials over GF(q): coefficients ascending, normalized (no trailing
// zeros; the zero polynomial is the empty vector).
using Poly = std::vector<fq_t>;

namespace pol {

int deg(const Poly& f);
Poly normalized(Poly f);
bool is_zero(const Poly& f);
bool is_monic(const Poly& f);
Poly x_poly();
Poly constant(fq_t c);
// X - c as a monic linear polynomial.
Poly linear_root(const Fq& F, fq_t c);

Poly add(const Fq& F, const Poly& a, const Poly& b);
Poly sub(const Fq& F, const Poly& a, const Poly& b);
Poly mul(const Fq& F, const Poly& a, const Poly& b);
Poly scalar_mul(const Fq& F, fq_t c, const Poly& a);
Poly monic(const Fq& F, const Poly& a);
std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b);
Poly mod(const Fq& F, const Poly& a, const Poly& b);
Poly gcd(const Fq& F, Poly a, Poly b);
Poly powmod(const Fq& F, Poly base, const ZZ& e, const Poly& m);
fq_t eval(const Fq& F, const Poly& f, fq_t x);
Poly derivative(const Fq& F, const Poly& f);

// Canonical order: by degree, then by integer encoding of the coefficients.
bool less(const Poly& a, const Poly& b);

// Rabin irreducibility test; f must be monic of degree >= 1.
bool is_irreducible(const Fq& F, const Poly& f);

// All monic irreducibles of degree d, in canonical order, by scanning the
// q^d candidates. Throws limit_error beyond the enumeration cap.
std::vector<Poly> enumerate_irreducibles(const Fq& F, unsigned d, bool exclude_x);

// Necklace count (1/d) sum_{e|d} mu(e) q^{d/e} of monic irreducibles of
// degree d (X included when d = 1).
ZZ irreducible_count(const Fq& F, unsigned d);

// Multiplicative order of X in GF(q)[X]/(f); f monic irreducible, f != X.
ZZ order(const Fq& F, const Poly& f);

// Complete factorization into monic irreducibles with multiplicities,
// canonical order. Squarefree split + distinct-degree + Cantor-Zassenhaus
// with an internally seeded deterministic RNG.
std::vector<std::pair<Poly, unsigned>> factor(const Fq& F, const Poly& f);

std::string to_string(const Fq& F, const Poly& f);

} // namespace pol

// GF(q^d) presented over a base GF(q) as base[Y]/(h), h the canonical
// smallest monic irreducible of degree d over the base. Element indices use
// base-q digits for the power-basis coordinates, so base elements embed as
// themselves (indices < q).
class ExtField {
  public:
    static const ExtField& get(const Fq& base, unsigned d);

    const Fq& base() const { return *base_; }
    unsigned degree() const { return d_; }
    std::uint32_t card() const { return card_; }
    const Poly& modulus() const { return modulus_; }

    fq_t add(fq_t a, fq_t b) const;
    fq_t neg(fq_t a) const;
    fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
    fq_t mul(fq_t a, fq_t b) const;
    fq_t inv(fq_t a) const;
    fq_t pow_u(fq_t a, std::uint64_t k) const;
    fq_t pow(fq_t a, const ZZ& k) const;
    fq_t generator() const { return gen_; }
    std::uint32_t log(fq_t a) const;
    fq_t exp_log(std::uint64_t k) const { return exp_[k % (card_ - 1)]; }

    bool in_base(fq_t x) const { return x < base_->q(); }
    fq_t scalar_mul(fq_t c_base, fq_t x) const { return mul(c_base, x); }
    std::vector<fq_t> coords(fq_t x) const; // length d, over the base field
    fq_t from_coords(const std::vector<fq_t>& c) const;

    fq_t frobenius_q(fq_t x) const; // x^q
    fq_t norm_to_base(fq_t x) const;
    fq_t trace_to_base(fq_t x) const;
    unsigned long abs_trace(fq_t x) const; // absolute trace into GF(p)
    unsigned element_degree(fq_t x) const; // degree over the base field
    Poly min_poly(fq_t x) const;           // over the base field

    ExtField(const ExtField&) = delete;
    ExtField& operator=(const ExtField&) = delete;

  private:
    ExtField(const Fq& base, unsigned d);

    const Fq* base_;
    unsigned d_;
    std::uint32_t card_;
    Poly modulus_;
    fq_t gen_ = 1;
    std::vector<fq_t> exp_;
    std::vector<std::uint32_t> log_;
};

} // namespace slgen
