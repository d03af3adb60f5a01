#include "slgen/ff.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "slgen/util.hpp"

namespace slgen {

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Fq

const Fq& Fq::get(unsigned long p, unsigned e) {
    static std::recursive_mutex mu;
    static std::map<std::pair<unsigned long, unsigned>, std::unique_ptr<Fq>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Fq>(new Fq(p, e))).first;
    return *it->second;
}

Fq::Fq(unsigned long p, unsigned e) : p_(p), e_(e) {
    if (e < 1) throw std::invalid_argument("Fq: extension degree must be >= 1");
    if (!is_prime(ZZ(p))) throw std::invalid_argument("Fq: characteristic must be prime");
    ZZ qz = zz_pow(p, e);
    if (qz > ZZ(static_cast<unsigned long>(kMaxCard)))
        throw limit_error("Fq: field size exceeds table limit");
    q_ = static_cast<std::uint32_t>(qz.get_ui());

    if (e_ == 1) {
        modulus_ = {0, 1}; // X
    } else {
        const Fq& Fp = Fq::get(p, 1);
        for (std::uint64_t v = 0;; ++v) {
            Poly f(e_ + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < e_; ++i) {
                f[i] = fq_t(t % p);
                t /= p;
            }
            f[e_] = 1;
            if (pol::is_irreducible(Fp, f)) {
                modulus_ = f;
                break;
            }
        }
    }

    // Element arithmetic on GF(p)-digit vectors, used only to build tables.
    auto decode = [&](fq_t a) {
        std::vector<std::uint64_t> d(e_);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = a % p_;
            a = fq_t(a / p_);
        }
        return d;
    };
    auto encode = [&](const std::vector<std::uint64_t>& d) {
        std::uint64_t v = 0, m = 1;
        for (unsigned i = 0; i < e_; ++i) {
            v += d[i] * m;
            m *= p_;
        }
        return fq_t(v);
    };
    auto mul_slow = [&](fq_t a, fq_t b) -> fq_t {
        auto da = decode(a), db = decode(b);
        std::vector<std::uint64_t> v(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i)
            for (unsigned j = 0; j < e_; ++j) v[i + j] = (v[i + j] + da[i] * db[j]) % p_;
        for (unsigned i = 2 * e_ - 2; i >= e_ && i < 2 * e_; --i) {
            std::uint64_t c = v[i];
            if (!c) continue;
            v[i] = 0;
            for (unsigned j = 0; j < e_; ++j)
                v[i - e_ + j] = (v[i - e_ + j] + (p_ - modulus_[j]) % p_ * c) % p_;
        }
        v.resize(e_);
        return encode(v);
    };
    auto pow_slow = [&](fq_t a, std::uint64_t k) {
        fq_t r = 1;
        while (k) {
            if (k & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            k >>= 1;
        }
        return r;
    };

    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0);
    if (q_ == 2) {
        gen_ = 1;
        log_[1] = 0;
        return;
    }
    Factorization fo = factorize(ZZ(q_ - 1));
    for (fq_t cand = 2;; ++cand) {
        bool ok = true;
        for (const auto& [pr, ex] : fo.prime_powers) {
            (void)ex;
            if (pow_slow(cand, (q_ - 1) / pr.get_ui()) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = cand;
            break;
        }
    }
    for (std::uint32_t k = 1; k < q_ - 1; ++k) exp_[k] = mul_slow(exp_[k - 1], gen_);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

fq_t Fq::of_int(long v) const {
    long r = v % long(p_);
    if (r < 0) r += long(p_);
    return fq_t(r);
}

fq_t Fq::add(fq_t a, fq_t b) const {
    if (p_ == 2) return a ^ b;
    fq_t r = 0, m = 1;
    while (a || b) {
        r += fq_t((a % p_ + b % p_) % p_) * m;
        a = fq_t(a / p_);
        b = fq_t(b / p_);
        m = fq_t(m * p_);
    }
    return r;
}

fq_t Fq::neg(fq_t a) const {
    if (p_ == 2) return a;
    fq_t r = 0, m = 1;
    while (a) {
        fq_t d = fq_t(a % p_);
        r += (d ? fq_t(p_ - d) : 0) * m;
        a = fq_t(a / p_);
        m = fq_t(m * p_);
    }
    return r;
}

fq_t Fq::mul(fq_t a, fq_t b) const {
    if (!a || !b) return 0;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

fq_t Fq::inv(fq_t a) const {
    if (!a) throw std::invalid_argument("Fq::inv: zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

fq_t Fq::pow_u(fq_t a, std::uint64_t k) const {
    if (!a) return k == 0 ? 1 : 0;
    return exp_[std::uint64_t(log_[a]) * (k % (q_ - 1)) % (q_ - 1)];
}

fq_t Fq::pow(fq_t a, const ZZ& k) const {
    if (k < 0) throw std::invalid_argument("Fq::pow: negative exponent");
    if (!a) return k == 0 ? 1 : 0;
    ZZ r = k % (q_ - 1);
    return pow_u(a, r.get_ui());
}

std::uint32_t Fq::log(fq_t a) const {
    if (!a) throw std::invalid_argument("Fq::log: zero");
    return log_[a];
}

fq_t Fq::frobenius(fq_t a) const {
    if (!a) return 0;
    return exp_[std::uint64_t(log_[a]) * (p_ % (q_ - 1)) % (q_ - 1)];
}

unsigned long Fq::trace_to_prime(fq_t a) const {
    fq_t acc = 0, x = a;
    for (unsigned i = 0; i < e_; ++i) {
        acc = add(acc, x);
        x = frobenius(x);
    }
    if (acc >= p_) throw std::logic_error("Fq::trace_to_prime: trace not in prime field");
    return acc;
}

std::vector<fq_t> Fq::prime_digits(fq_t a) const {
    std::vector<fq_t> d(e_);
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = fq_t(a % p_);
        a = fq_t(a / p_);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace pol {

int deg(const Poly& f) { return int(f.size()) - 1; }

Poly normalized(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

bool is_zero(const Poly& f) { return f.empty(); }

bool is_monic(const Poly& f) { return !f.empty() && f.back() == 1; }

Poly x_poly() { return {0, 1}; }

Poly constant(fq_t c) { return c ? Poly{c} : Poly{}; }

Poly linear_root(const Fq& F, fq_t c) { return {F.neg(c), 1}; }

Poly add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        fq_t x = i < a.size() ? a[i] : 0;
        fq_t y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    return normalized(std::move(r));
}

Poly sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        fq_t x = i < a.size() ? a[i] : 0;
        fq_t y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    return normalized(std::move(r));
}

Poly mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return normalized(std::move(r));
}

Poly scalar_mul(const Fq& F, fq_t c, const Poly& a) {
    if (!c) return {};
    Poly r = a;
    for (auto& x : r) x = F.mul(c, x);
    return normalized(std::move(r));
}

Poly monic(const Fq& F, const Poly& a) {
    if (a.empty() || a.back() == 1) return a;
    return scalar_mul(F, F.inv(a.back()), a);
}

std::pair<Poly, Poly> divmod(const Fq& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw std::invalid_argument("pol::divmod: division by zero polynomial");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly rem = a;
    Poly quo(a.size() - b.size() + 1, 0);
    fq_t lead_inv = F.inv(b.back());
    for (std::size_t i = a.size(); i-- >= b.size() && i < a.size();) {
        if (!rem[i]) continue;
        fq_t c = F.mul(rem[i], lead_inv);
        quo[i - b.size() + 1] = c;
        rem[i] = 0;
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            rem[i - b.size() + 1 + j] = F.sub(rem[i - b.size() + 1 + j], F.mul(c, b[j]));
    }
    return {normalized(std::move(quo)), normalized(std::move(rem))};
}

Poly mod(const Fq& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly gcd(const Fq& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly powmod(const Fq& F, Poly base, const ZZ& e, const Poly& m) {
    if (e < 0) throw std::invalid_argument("pol::powmod: negative exponent");
    base = mod(F, base, m);
    Poly r = mod(F, constant(1), m);
    if (e == 0) return r;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod(F, mul(F, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(F, mul(F, r, base), m);
    }
    return r;
}

fq_t eval(const Fq& F, const Poly& f, fq_t x) {
    fq_t r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

Poly derivative(const Fq& F, const Poly& f) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1, 0);
    for (std::size_t i = 1; i < f.size(); ++i) {
        fq_t c = 0;
        for (unsigned long k = 0; k < i % F.p(); ++k) c = F.add(c, f[i]);
        r[i - 1] = c;
    }
    return normalized(std::move(r));
}

bool less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

bool is_irreducible(const Fq& F, const Poly& f) {
    if (!is_monic(f)) throw std::invalid_argument("pol::is_irreducible: input must be monic");
    int d = deg(f);
    if (d < 1) throw std::invalid_argument("pol::is_irreducible: degree must be >= 1");
    if (d == 1) return true;
    // Rabin: X^{q^d} = X mod f, and gcd(X^{q^{d/r}} - X, f) = 1 for primes r | d.
    std::vector<unsigned> checks;
    for (const auto& [pr, ex] : factorize(ZZ(d)).prime_powers) {
        (void)ex;
        checks.push_back(unsigned(d) / unsigned(pr.get_ui()));
    }
    Poly v = x_poly();
    ZZ qz(F.q());
    for (unsigned k = 1; k <= unsigned(d); ++k) {
        v = powmod(F, v, qz, f);
        if (std::find(checks.begin(), checks.end(), k) != checks.end()) {
            Poly g = gcd(F, sub(F, v, x_poly()), f);
            if (deg(g) != 0) return false;
        }
    }
    return sub(F, v, x_poly()).empty();
}

ZZ irreducible_count(const Fq& F, unsigned d) {
    ZZ total = 0;
    for (const ZZ& e : divisors_sorted(factorize(ZZ(d)))) {
        unsigned eu = unsigned(e.get_ui());
        int mu = 1;
        for (const auto& [pr, ex] : factorize(e).prime_powers) {
            (void)pr;
            if (ex >= 2) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu == 0) continue;
        total += mu * zz_pow(F.q(), d / eu);
    }
    return total / d;
}

std::vector<Poly> enumerate_irreducibles(const Fq& F, unsigned d, bool exclude_x) {
    if (d < 1) throw std::invalid_argument("enumerate_irreducibles: degree must be >= 1");
    ZZ count = zz_pow(F.q(), d);
    if (count > ZZ(1 << 20)) throw limit_error("enumerate_irreducibles: q^d beyond scan limit");
    std::uint64_t total = count.get_ui();
    std::vector<Poly> out;
    for (std::uint64_t v = 0; v < total; ++v) {
        if (d == 1 && exclude_x && v == 0) continue;
        Poly f(d + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = fq_t(t % F.q());
            t /= F.q();
        }
        f[d] = 1;
        if (is_irreducible(F, f)) out.push_back(std::move(f));
    }
    return out;
}

ZZ order(const Fq& F, const Poly& f) {
    if (!is_irreducible(F, f)) throw std::invalid_argument("pol::order: input must be irreducible");
    int d = deg(f);
    if (d == 1 && f[0] == 0) throw std::invalid_argument("pol::order: f = X has no unit root");
    if (d == 1) {
        fq_t root = F.neg(f[0]);
        if (root == 1) return 1;
        std::uint64_t qm1 = F.q() - 1;
        return ZZ(static_cast<unsigned long>(qm1 / std::gcd(qm1, std::uint64_t(F.log(root)))));
    }
    static std::mutex mu;
    static std::map<std::tuple<unsigned long, unsigned, unsigned>, Factorization> cache;
    Factorization fact;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(F.p(), F.e(), unsigned(d));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, factorize(zz_pow(F.q(), d) - 1)).first;
        fact = it->second;
    }
    ZZ ord = fact.value();
    Poly one = constant(1);
    for (const auto& [pr, ex] : fact.prime_powers) {
        for (unsigned i = 0; i < ex; ++i) {
            if (!mpz_divisible_p(ord.get_mpz_t(), pr.get_mpz_t())) break;
            ZZ cand = ord / pr;
            if (powmod(F, x_poly(), cand, f) != one) break;
            ord = cand;
        }
    }
    return ord;
}

namespace {

Poly pth_root(const Fq& F, const Poly& f) {
    // f has only exponents divisible by p; take the p-th root coefficientwise
    // (the root of a is a^{p^{e-1}}, the inverse Frobenius).
    unsigned long p = F.p();
    Poly r(f.size() / p + 1, 0);
    for (std::size_t i = 0; i * p < f.size(); ++i)
        r[i] = F.pow_u(f[i * p], upow(p, F.e() - 1));
    return normalized(std::move(r));
}

void sff(const Fq& F, const Poly& f, unsigned outer, std::vector<std::pair<Poly, unsigned>>& out) {
    Poly fp = derivative(F, f);
    if (is_zero(fp)) {
        sff(F, pth_root(F, f), outer * unsigned(F.p()), out);
        return;
    }
    Poly c = gcd(F, f, fp);
    Poly w = divmod(F, f, c).first;
    unsigned i = 1;
    while (deg(w) > 0) {
        Poly y = gcd(F, w, c);
        Poly z = divmod(F, w, y).first;
        if (deg(z) > 0) out.emplace_back(monic(F, z), i * outer);
        c = divmod(F, c, y).first;
        w = std::move(y);
        ++i;
    }
    if (deg(c) > 0) sff(F, pth_root(F, c), outer * unsigned(F.p()), out);
}

std::vector<std::pair<Poly, unsigned>> ddf(const Fq& F, Poly g) {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly v = x_poly();
    unsigned k = 1;
    ZZ qz(F.q());
    while (deg(g) >= int(2 * k)) {
        v = powmod(F, v, qz, g);
        Poly d = gcd(F, sub(F, v, x_poly()), g);
        if (deg(d) > 0) {
            out.emplace_back(d, k);
            g = divmod(F, g, d).first;
            v = mod(F, v, g);
        }
        ++k;
    }
    if (deg(g) > 0) out.emplace_back(g, unsigned(deg(g)));
    return out;
}

void edf(const Fq& F, const Poly& h, unsigned k, Rng& rng, std::vector<Poly>& out) {
    unsigned r = unsigned(deg(h)) / k;
    if (r == 1) {
        out.push_back(h);
        return;
    }
    for (;;) {
        Poly t(deg(h), 0);
        for (auto& c : t) c = fq_t(rng.below(F.q()));
        t = normalized(std::move(t));
        if (deg(t) < 1) continue;
        Poly s;
        if (F.p() == 2) {
            // Trace map t + t^2 + ... + t^{2^{ek-1}} splits the roots.
            unsigned bits = F.e() * k;
            Poly acc = mod(F, t, h), cur = acc;
            for (unsigned i = 1; i < bits; ++i) {
                cur = mod(F, mul(F, cur, cur), h);
                acc = add(F, acc, cur);
            }
            s = acc;
        } else {
            ZZ expo = (zz_pow(F.q(), k) - 1) / 2;
            s = sub(F, powmod(F, t, expo, h), constant(1));
        }
        Poly d = gcd(F, s, h);
        if (deg(d) > 0 && deg(d) < deg(h)) {
            edf(F, d, k, rng, out);
            edf(F, divmod(F, h, d).first, k, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Fq& F, const Poly& f) {
    if (is_zero(f)) throw std::invalid_argument("pol::factor: zero polynomial");
    Poly m = monic(F, f);
    std::vector<std::pair<Poly, unsigned>> out;
    if (deg(m) == 0) return out;
    std::vector<std::pair<Poly, unsigned>> parts;
    sff(F, m, 1, parts);
    Rng rng(0x5eedf00dULL + F.q());
    for (const auto& [g, mult] : parts) {
        for (const auto& [h, k] : ddf(F, g)) {
            std::vector<Poly> irr;
            edf(F, h, k, rng, irr);
            for (auto& piece : irr) out.emplace_back(std::move(piece), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return less(a.first, b.first); });
    return out;
}

std::string to_string(const Fq& F, const Poly& f) {
    (void)F;
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (!f[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i] << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace pol

// ---------------------------------------------------------------------------
// ExtField

const ExtField& ExtField::get(const Fq& base, unsigned d) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned long, unsigned, unsigned>, std::unique_ptr<ExtField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base.p(), base.e(), d);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<ExtField>(new ExtField(base, d))).first;
    return *it->second;
}

ExtField::ExtField(const Fq& base, unsigned d) : base_(&base), d_(d) {
    if (d < 1) throw std::invalid_argument("ExtField: degree must be >= 1");
    ZZ cz = zz_pow(base.q(), d);
    if (cz > ZZ(static_cast<unsigned long>(Fq::kMaxCard)))
        throw limit_error("ExtField: field size exceeds table limit");
    card_ = static_cast<std::uint32_t>(cz.get_ui());

    std::uint64_t q = base.q();
    for (std::uint64_t v = 0;; ++v) {
        Poly f(d_ + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < d_; ++i) {
            f[i] = fq_t(t % q);
            t /= q;
        }
        f[d_] = 1;
        if (pol::is_irreducible(base, f)) {
            modulus_ = f;
            break;
        }
    }

    auto decode = [&](fq_t a) {
        std::vector<fq_t> c(d_);
        for (unsigned i = 0; i < d_; ++i) {
            c[i] = fq_t(a % q);
            a = fq_t(a / q);
        }
        return c;
    };
    auto encode = [&](const std::vector<fq_t>& c) {
        std::uint64_t v = 0, m = 1;
        for (unsigned i = 0; i < d_; ++i) {
            v += std::uint64_t(c[i]) * m;
            m *= q;
        }
        return fq_t(v);
    };
    auto mul_slow = [&](fq_t a, fq_t b) -> fq_t {
        auto ca = decode(a), cb = decode(b);
        std::vector<fq_t> v(2 * d_ - 1, 0);
        for (unsigned i = 0; i < d_; ++i) {
            if (!ca[i]) continue;
            for (unsigned j = 0; j < d_; ++j)
                if (cb[j]) v[i + j] = base.add(v[i + j], base.mul(ca[i], cb[j]));
        }
        for (unsigned i = 2 * d_ - 2; i >= d_ && i < 2 * d_; --i) {
            fq_t c = v[i];
            if (!c) continue;
            v[i] = 0;
            for (unsigned j = 0; j < d_; ++j)
                v[i - d_ + j] = base.add(v[i - d_ + j], base.mul(base.neg(modulus_[j]), c));
        }
        v.resize(d_);
        return encode(v);
    };
    auto pow_slow = [&](fq_t a, std::uint64_t k) {
        fq_t r = 1;
        while (k) {
            if (k & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            k >>= 1;
        }
        return r;
    };

    exp_.assign(card_ - 1, 1);
    log_.assign(card_, 0);
    if (card_ == 2) {
        gen_ = 1;
        return;
    }
    Factorization fo = factorize(ZZ(card_ - 1));
    for (fq_t cand = 2;; ++cand) {
        bool ok = true;
        for (const auto& [pr, ex] : fo.prime_powers) {
            (void)ex;
            if (pow_slow(cand, (card_ - 1) / pr.get_ui()) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = cand;
            break;
        }
    }
    for (std::uint32_t k = 1; k < card_ - 1; ++k) exp_[k] = mul_slow(exp_[k - 1], gen_);
    for (std::uint32_t k = 0; k < card_ - 1; ++k) log_[exp_[k]] = k;
}

fq_t ExtField::add(fq_t a, fq_t b) const {
    if (base_->p() == 2) return a ^ b;
    std::uint64_t q = base_->q();
    fq_t r = 0, m = 1;
    while (a || b) {
        r += base_->add(fq_t(a % q), fq_t(b % q)) * m;
        a = fq_t(a / q);
        b = fq_t(b / q);
        m = fq_t(m * q);
    }
    return r;
}

fq_t ExtField::neg(fq_t a) const {
    if (base_->p() == 2) return a;
    std::uint64_t q = base_->q();
    fq_t r = 0, m = 1;
    while (a) {
        r += base_->neg(fq_t(a % q)) * m;
        a = fq_t(a / q);
        m = fq_t(m * q);
    }
    return r;
}

fq_t ExtField::mul(fq_t a, fq_t b) const {
    if (!a || !b) return 0;
    return exp_[(std::uint64_t(log_[a]) + log_[b]) % (card_ - 1)];
}

fq_t ExtField::inv(fq_t a) const {
    if (!a) throw std::invalid_argument("ExtField::inv: zero has no inverse");
    return exp_[(card_ - 1 - log_[a]) % (card_ - 1)];
}

fq_t ExtField::pow_u(fq_t a, std::uint64_t k) const {
    if (!a) return k == 0 ? 1 : 0;
    return exp_[std::uint64_t(log_[a]) * (k % (card_ - 1)) % (card_ - 1)];
}

fq_t ExtField::pow(fq_t a, const ZZ& k) const {
    if (k < 0) throw std::invalid_argument("ExtField::pow: negative exponent");
    if (!a) return k == 0 ? 1 : 0;
    ZZ r = k % (card_ - 1);
    return pow_u(a, r.get_ui());
}

std::uint32_t ExtField::log(fq_t a) const {
    if (!a) throw std::invalid_argument("ExtField::log: zero");
    return log_[a];
}

std::vector<fq_t> ExtField::coords(fq_t x) const {
    std::vector<fq_t> c(d_);
    for (unsigned i = 0; i < d_; ++i) {
        c[i] = fq_t(x % base_->q());
        x = fq_t(x / base_->q());
    }
    return c;
}

fq_t ExtField::from_coords(const std::vector<fq_t>& c) const {
    std::uint64_t v = 0, m = 1;
    for (unsigned i = 0; i < d_; ++i) {
        v += std::uint64_t(i < c.size() ? c[i] : 0) * m;
        m *= base_->q();
    }
    return fq_t(v);
}

fq_t ExtField::frobenius_q(fq_t x) const {
    if (!x) return 0;
    return exp_[std::uint64_t(log_[x]) * (base_->q() % (card_ - 1)) % (card_ - 1)];
}

fq_t ExtField::norm_to_base(fq_t x) const {
    if (!x) return 0;
    std::uint64_t k = std::uint64_t(card_ - 1) / (base_->q() - 1);
    fq_t y = exp_[std::uint64_t(log_[x]) * (k % (card_ - 1)) % (card_ - 1)];
    if (!in_base(y)) throw std::logic_error("ExtField::norm_to_base: norm not in base field");
    return y;
}

fq_t ExtField::trace_to_base(fq_t x) const {
    fq_t acc = 0, xi = x;
    for (unsigned i = 0; i < d_; ++i) {
        acc = add(acc, xi);
        xi = frobenius_q(xi);
    }
    if (!in_base(acc)) throw std::logic_error("ExtField::trace_to_base: trace not in base field");
    return acc;
}

unsigned long ExtField::abs_trace(fq_t x) const { return base_->trace_to_prime(trace_to_base(x)); }

unsigned ExtField::element_degree(fq_t x) const {
    if (!x) return 1;
    fq_t y = x;
    for (unsigned k = 1;; ++k) {
        y = frobenius_q(y);
        if (y == x) return k;
    }
}

Poly ExtField::min_poly(fq_t x) const {
    unsigned k = element_degree(x);
    std::vector<fq_t> prod{1}; // coefficients in this field, ascending
    fq_t xi = x;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<fq_t> next(prod.size() + 1, 0);
        for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] = add(next[j + 1], prod[j]);
            next[j] = add(next[j], mul(neg(xi), prod[j]));
        }
        prod = std::move(next);
        xi = frobenius_q(xi);
    }
    Poly out(prod.size());
    for (std::size_t j = 0; j < prod.size(); ++j) {
        if (!in_base(prod[j]))
            throw std::logic_error("ExtField::min_poly: coefficient not in base field");
        out[j] = prod[j];
    }
    return pol::normalized(std::move(out));
}

} // namespace slgen
