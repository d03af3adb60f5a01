#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "slgen/util.hpp"

namespace slgen {

// Exact arbitrary-precision naturals and rationals.
using ZZ = mpz_class;
using QQ = mpq_class;

inline ZZ zz_pow(const ZZ& base, unsigned long e) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZZ zz_pow(unsigned long base, unsigned long e) { return zz_pow(ZZ(base), e); }

struct Factorization {
    // (prime, exponent), primes strictly increasing.
    std::vector<std::pair<ZZ, unsigned>> prime_powers;

    ZZ value() const;
};

// Deterministic primality: Miller-Rabin with a proven base set below
// 3.3e24, BPSW-style fallback above (desk scale rarely goes there).
bool is_prime(const ZZ& n);

// Complete factorization of n >= 1. Trial division by primes < 1e6, then
// Pollard-Brent rho on what remains.
Factorization factorize(const ZZ& n);

// Number of positive divisors of n >= 1.
ZZ sigma0(const ZZ& n);

// Euler totient of n >= 1.
ZZ euler_phi(const ZZ& n);

// Partition function p(n), n >= 0, by the pentagonal-number recurrence.
ZZ partition_count(long n);

// Least k >= 1 with x^k = 1 mod modulus. group_order_fact must factor the
// multiplicative group order or any multiple of the true order of x;
// an inconsistent factorization (x^value != 1) is rejected.
ZZ multiplicative_order(const ZZ& x, const ZZ& modulus, const Factorization& group_order_fact);

// All divisors of the factored value, ascending.
std::vector<ZZ> divisors_sorted(const Factorization& f);

} // namespace slgen
