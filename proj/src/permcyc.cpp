#include "slgen/permcyc.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "slgen/classes.hpp"
#include "slgen/util.hpp"

namespace slgen {

AllowedDegrees allowed_degrees(unsigned long q, const ZZ& m, int n) {
    if (q < 2 || m < 1 || n < 1) throw std::invalid_argument("allowed_degrees: bad parameters");
    AllowedDegrees out{q, m, n, {}};
    ZZ qd = 1;
    for (int d = 1; d <= n; ++d) {
        qd *= q;
        if (qd - 1 > m) break; // q^d - 1 | m needs q^d - 1 <= m
        if (mpz_divisible_p(m.get_mpz_t(), ZZ(qd - 1).get_mpz_t())) out.degrees.push_back(d);
    }
    return out;
}

QQ cycle_prob_exact(const std::vector<int>& degrees, int n) {
    if (n < 0) throw std::invalid_argument("cycle_prob_exact: n must be >= 0");
    std::vector<QQ> a(std::size_t(n) + 1, QQ(0));
    a[0] = 1;
    for (int k = 1; k <= n; ++k) {
        QQ s = 0;
        for (int d : degrees)
            if (d <= k) s += a[std::size_t(k - d)];
        a[std::size_t(k)] = s / QQ(static_cast<unsigned long>(k));
    }
    return a[std::size_t(n)];
}

McEstimate cycle_prob_montecarlo(const std::vector<int>& degrees, int n, std::uint64_t trials,
                                 std::uint64_t seed) {
    if (n < 1 || trials < 1) throw std::invalid_argument("cycle_prob_montecarlo: bad parameters");
    std::vector<char> allowed(std::size_t(n) + 1, 0);
    for (int d : degrees)
        if (d <= n) allowed[std::size_t(d)] = 1;
    Rng rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[std::size_t(i)], perm[rng.below(std::uint64_t(i) + 1)]);
        std::fill(seen.begin(), seen.end(), 0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (seen[std::size_t(i)]) continue;
            int len = 0, j = i;
            while (!seen[std::size_t(j)]) {
                seen[std::size_t(j)] = 1;
                j = perm[std::size_t(j)];
                ++len;
            }
            if (!allowed[std::size_t(len)]) ok = false;
        }
        if (ok) ++hits;
    }
    double est = double(hits) / double(trials);
    return {est, std::sqrt(est * (1.0 - est) / double(trials)), trials, hits, seed};
}

D123 d123(unsigned long q, const ZZ& m) {
    if (q < 2 || m < 1) throw std::invalid_argument("d123: bad parameters");
    D123 out;
    ZZ qd = 1;
    for (int d = 1;; ++d) {
        qd *= q;
        if (qd - 1 > m) break;
        if (mpz_divisible_p(m.get_mpz_t(), ZZ(qd - 1).get_mpz_t())) out.degrees.push_back(d);
    }
    if (out.degrees.empty()) {
        out.empty = true;
        return out;
    }
    out.d1 = out.degrees.back();
    for (auto it = out.degrees.rbegin(); it != out.degrees.rend(); ++it)
        if (6 * out.d1 % *it != 0) {
            out.d2 = *it;
            break;
        }
    if (out.d2)
        for (auto it = out.degrees.rbegin(); it != out.degrees.rend(); ++it)
            if (6 * out.d1 % *it != 0 && 6 * out.d2 % *it != 0) {
                out.d3 = *it;
                break;
            }
    return out;
}

double saddle_bound(const std::vector<int>& degrees, int n, double r) {
    if (r <= 0) throw std::invalid_argument("saddle_bound: r must be positive");
    long double s = 0;
    for (int d : degrees) s += std::pow((long double)r, d) / d;
    return double(std::exp(s - n * std::log((long double)r)));
}

double paper_r(unsigned long q, const ZZ& m, int n) {
    if (n < 1) throw std::invalid_argument("paper_r: n must be >= 1");
    double logq_m1 = std::log(mpz_get_d(ZZ(m + 1).get_mpz_t())) / std::log(double(q));
    return std::exp(std::log(double(n)) / logq_m1);
}

} // namespace slgen
