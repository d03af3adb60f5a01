#include "slgen/numth.hpp"

#include <algorithm>
#include <stdexcept>

namespace slgen {

namespace {

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t kLimit = 1'000'000;
        std::vector<bool> composite(kLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(const ZZ& n, const ZZ& a, const ZZ& d, unsigned long s) {
    ZZ x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true; // composite witness
}

// Pollard-Brent rho; n odd composite, not a prime power of a small prime.
ZZ pollard_brent(const ZZ& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        ZZ x = 2, y = 2, d = 1, q = 1, ys = 0;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const ZZ& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            d = 1;
            while (d == 1) {
                ys = f(ys);
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
        // cycle degenerated for this c; retry with the next increment
    }
}

void factor_rec(const ZZ& n, std::vector<ZZ>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    ZZ d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

ZZ Factorization::value() const {
    ZZ v = 1;
    for (const auto& [p, e] : prime_powers) v *= zz_pow(p, e);
    return v;
}

bool is_prime(const ZZ& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    ZZ d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    // Deterministic for n < 3.317e24 (Sorenson-Webster base set).
    static const ZZ kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit) {
        for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
            if (miller_rabin_witness(n, ZZ(a), d, s)) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

Factorization factorize(const ZZ& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    Factorization out;
    if (n == 1) return out;
    ZZ rest = n;
    for (std::uint32_t p : small_primes()) {
        if (ZZ(p) * p > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        out.prime_powers.emplace_back(ZZ(p), e);
    }
    if (rest > 1) {
        std::vector<ZZ> primes;
        factor_rec(rest, primes);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.prime_powers.emplace_back(primes[i], unsigned(j - i));
            i = j;
        }
    }
    std::sort(out.prime_powers.begin(), out.prime_powers.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

ZZ sigma0(const ZZ& n) {
    Factorization f = factorize(n);
    ZZ r = 1;
    for (const auto& [p, e] : f.prime_powers) r *= e + 1;
    return r;
}

ZZ euler_phi(const ZZ& n) {
    Factorization f = factorize(n);
    ZZ r = 1;
    for (const auto& [p, e] : f.prime_powers) r *= zz_pow(p, e - 1) * (p - 1);
    return r;
}

ZZ partition_count(long n) {
    if (n < 0) throw std::invalid_argument("partition_count: argument must be >= 0");
    std::vector<ZZ> p(std::size_t(n) + 1);
    p[0] = 1;
    for (long i = 1; i <= n; ++i) {
        ZZ acc = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            ZZ term = 0;
            if (g1 <= i) term += p[i - g1];
            if (g2 <= i) term += p[i - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[i] = acc;
    }
    return p[std::size_t(n)];
}

ZZ multiplicative_order(const ZZ& x, const ZZ& modulus, const Factorization& group_order_fact) {
    if (modulus < 1) throw std::invalid_argument("multiplicative_order: modulus must be >= 1");
    if (modulus == 1) return 1;
    ZZ xr = x % modulus;
    if (xr < 0) xr += modulus;
    if (gcd(xr, modulus) != 1)
        throw std::invalid_argument("multiplicative_order: x not coprime to modulus");
    ZZ m = group_order_fact.value();
    ZZ t;
    mpz_powm(t.get_mpz_t(), xr.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
    if (t != 1)
        throw std::invalid_argument(
            "multiplicative_order: inconsistent factorization (x^claimed != 1)");
    ZZ ord = m;
    for (const auto& [p, e] : group_order_fact.prime_powers) {
        for (unsigned i = 0; i < e; ++i) {
            if (!mpz_divisible_p(ord.get_mpz_t(), p.get_mpz_t())) break;
            ZZ cand = ord / p;
            mpz_powm(t.get_mpz_t(), xr.get_mpz_t(), cand.get_mpz_t(), modulus.get_mpz_t());
            if (t != 1) break;
            ord = cand;
        }
    }
    return ord;
}

std::vector<ZZ> divisors_sorted(const Factorization& f) {
    std::vector<ZZ> divs{ZZ(1)};
    for (const auto& [p, e] : f.prime_powers) {
        std::size_t base = divs.size();
        ZZ pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace slgen
