#include "slgen/matgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace slgen {

bool Mat::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Mat::is_scalar() const {
    fq_t c = at(0, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? c : 0u)) return false;
    return true;
}

Mat Mat::identity(const Fq& F, int n) {
    Mat m(F, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::scalar(const Fq& F, int n, fq_t c) {
    Mat m(F, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
}

Mat Mat::companion(const Fq& F, const Poly& f) {
    if (!pol::is_monic(f) || pol::deg(f) < 1)
        throw std::invalid_argument("Mat::companion: monic polynomial of degree >= 1 required");
    int n = pol::deg(f);
    Mat m(F, n);
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = F.neg(f[i]);
    return m;
}

Mat Mat::block_diag(const Mat& A, const Mat& B) {
    if (A.F != B.F) throw std::invalid_argument("Mat::block_diag: mismatched fields");
    Mat m(*A.F, A.n + B.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) m.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) m.at(A.n + i, A.n + j) = B.at(i, j);
    return m;
}

std::uint64_t Mat::encode() const {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * F->q() + a[i];
    return v;
}

Mat mul(const Mat& A, const Mat& B) {
    const Fq& F = *A.F;
    if (A.n != B.n || A.F != B.F) throw std::invalid_argument("mul: mismatched matrices");
    Mat C(F, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            fq_t aik = A.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < A.n; ++j) {
                fq_t b = B.at(k, j);
                if (b) C.at(i, j) = F.add(C.at(i, j), F.mul(aik, b));
            }
        }
    return C;
}

Mat mat_pow(const Mat& A, const ZZ& k) {
    if (k < 0) throw std::invalid_argument("mat_pow: negative exponent");
    Mat r = Mat::identity(*A.F, A.n);
    if (k == 0) return r;
    std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul(r, r);
        if (mpz_tstbit(k.get_mpz_t(), i)) r = mul(r, A);
    }
    return r;
}

namespace {

// Gaussian elimination; returns (rank, det). Destroys m.
std::pair<int, fq_t> echelon(const Fq& F, std::vector<fq_t>& m, int n) {
    fq_t d = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[std::size_t(r) * n + col]) {
                piv = r;
                break;
            }
        if (piv < 0) {
            d = 0;
            continue;
        }
        if (piv != rank) {
            for (int j = 0; j < n; ++j)
                std::swap(m[std::size_t(piv) * n + j], m[std::size_t(rank) * n + j]);
            d = F.neg(d);
        }
        fq_t lead = m[std::size_t(rank) * n + col];
        d = F.mul(d, lead);
        fq_t linv = F.inv(lead);
        for (int j = 0; j < n; ++j)
            m[std::size_t(rank) * n + j] = F.mul(linv, m[std::size_t(rank) * n + j]);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            fq_t c = m[std::size_t(r) * n + col];
            if (!c) continue;
            for (int j = 0; j < n; ++j)
                m[std::size_t(r) * n + j] =
                    F.sub(m[std::size_t(r) * n + j], F.mul(c, m[std::size_t(rank) * n + j]));
        }
        ++rank;
    }
    if (rank < n) d = 0;
    return {rank, d};
}

} // namespace

fq_t det(const Mat& A) {
    std::vector<fq_t> m = A.a;
    return echelon(*A.F, m, A.n).second;
}

int rank(const Mat& A) {
    std::vector<fq_t> m = A.a;
    return echelon(*A.F, m, A.n).first;
}

bool invertible(const Mat& A) { return det(A) != 0; }

Mat inverse(const Mat& A) {
    const Fq& F = *A.F;
    int n = A.n;
    std::vector<fq_t> m(std::size_t(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[std::size_t(i) * 2 * n + j] = A.at(i, j);
        m[std::size_t(i) * 2 * n + n + i] = 1;
    }
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[std::size_t(r) * 2 * n + col]) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
        if (piv != rank)
            for (int j = 0; j < 2 * n; ++j)
                std::swap(m[std::size_t(piv) * 2 * n + j], m[std::size_t(rank) * 2 * n + j]);
        fq_t linv = F.inv(m[std::size_t(rank) * 2 * n + col]);
        for (int j = 0; j < 2 * n; ++j)
            m[std::size_t(rank) * 2 * n + j] = F.mul(linv, m[std::size_t(rank) * 2 * n + j]);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            fq_t c = m[std::size_t(r) * 2 * n + col];
            if (!c) continue;
            for (int j = 0; j < 2 * n; ++j)
                m[std::size_t(r) * 2 * n + j] =
                    F.sub(m[std::size_t(r) * 2 * n + j], F.mul(c, m[std::size_t(rank) * 2 * n + j]));
        }
        ++rank;
    }
    Mat inv(F, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = m[std::size_t(i) * 2 * n + n + j];
    return inv;
}

Poly char_poly(const Mat& A) {
    const Fq& F = *A.F;
    int n = A.n;
    // Relative Krylov spinning: for each seed vector outside the current
    // A-invariant subspace, spin until dependence; the dependence polynomials
    // multiply to det(XI - A). Rows keep their first nonzero position as
    // pivot (normalized to 1), so forward elimination by leading position is
    // a valid span-membership test.
    struct Row {
        std::vector<fq_t> v;
        Poly tag;     // expression of v as tag(A)*seed modulo older rows
        bool current; // belongs to the seed being spun
    };
    std::vector<Row> rows;
    std::vector<int> pivot_row(std::size_t(n), -1); // position -> row index
    Poly cp = pol::constant(1);

    // Eliminates v by leading position; returns the pivot of the reduced
    // vector, or -1 when v lies in the current span.
    auto reduce = [&](std::vector<fq_t>& v, Poly& tag) -> int {
        for (int j = 0; j < n; ++j) {
            fq_t c = v[std::size_t(j)];
            if (!c) continue;
            int ri = pivot_row[std::size_t(j)];
            if (ri < 0) return j;
            const Row& r = rows[std::size_t(ri)];
            for (int t = j; t < n; ++t)
                v[std::size_t(t)] = F.sub(v[std::size_t(t)], F.mul(c, r.v[std::size_t(t)]));
            if (r.current) tag = pol::sub(F, tag, pol::scalar_mul(F, c, r.tag));
        }
        return -1;
    };

    for (int seed = 0; seed < n && int(rows.size()) < n; ++seed) {
        std::vector<fq_t> v(std::size_t(n), 0);
        v[std::size_t(seed)] = 1;
        Poly tag = pol::constant(1);
        for (;;) {
            int piv = reduce(v, tag);
            if (piv < 0) {
                // dependence: tag annihilates the seed modulo older rows
                if (pol::deg(tag) > 0) cp = pol::mul(F, cp, pol::monic(F, tag));
                break;
            }
            fq_t linv = F.inv(v[std::size_t(piv)]);
            for (int j = piv; j < n; ++j) v[std::size_t(j)] = F.mul(linv, v[std::size_t(j)]);
            tag = pol::scalar_mul(F, linv, tag);
            pivot_row[std::size_t(piv)] = int(rows.size());
            rows.push_back({v, tag, true});
            // next Krylov vector: A * v
            std::vector<fq_t> w(std::size_t(n), 0);
            for (int i = 0; i < n; ++i) {
                fq_t acc = 0;
                for (int j = 0; j < n; ++j) acc = F.add(acc, F.mul(A.at(i, j), v[std::size_t(j)]));
                w[std::size_t(i)] = acc;
            }
            v = std::move(w);
            tag = pol::mul(F, tag, pol::x_poly());
        }
        for (Row& r : rows) r.current = false;
    }
    return cp;
}

namespace {

Mat eval_at_matrix(const Fq& F, const Poly& f, const Mat& A) {
    Mat r(F, A.n);
    for (std::size_t i = f.size(); i-- > 0;) {
        r = mul(r, A);
        if (f[i])
            for (int d = 0; d < A.n; ++d) r.at(d, d) = F.add(r.at(d, d), f[i]);
    }
    return r;
}

} // namespace

ElementaryDivisors invariant_factors(const Mat& A) {
    const Fq& F = *A.F;
    int n = A.n;
    ElementaryDivisors out;
    Poly cp = char_poly(A);
    for (const auto& [f, mult] : pol::factor(F, cp)) {
        int d = pol::deg(f);
        if (mult == 1) {
            out.divs.emplace_back(f, 1);
            continue;
        }
        // Jordan-type structure from kernel dimensions of f(A)^j.
        Mat B = eval_at_matrix(F, f, A);
        std::vector<int> ker{0};
        Mat P = Mat::identity(F, n);
        while (ker.back() < int(mult) * d) {
            P = mul(P, B);
            ker.push_back(n - rank(P));
        }
        std::vector<unsigned> blocks_ge; // blocks_ge[j] = #divisors f^m with m >= j+1
        for (std::size_t j = 1; j < ker.size(); ++j)
            blocks_ge.push_back(unsigned((ker[j] - ker[j - 1]) / d));
        for (std::size_t m = blocks_ge.size(); m-- > 0;) {
            unsigned cnt = blocks_ge[m] - (m + 1 < blocks_ge.size() ? blocks_ge[m + 1] : 0);
            for (unsigned c = 0; c < cnt; ++c) out.divs.emplace_back(f, unsigned(m + 1));
        }
    }
    std::sort(out.divs.begin(), out.divs.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return pol::less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

ZZ element_order_formula(const ElementaryDivisors& ed, const Fq& F) {
    ZZ L = 1;
    unsigned maxm = 0;
    for (const auto& [f, m] : ed.divs) {
        if (pol::deg(f) == 1 && f[0] == 0)
            throw std::invalid_argument("element_order_formula: factor X (singular matrix)");
        L = lcm(L, pol::order(F, f));
        maxm = std::max(maxm, m);
    }
    ZZ pt = 1;
    while (pt < maxm) pt *= F.p();
    return L * pt;
}

std::pair<ZZ, Factorization> gl_exponent(const Fq& F, int n) {
    static std::mutex mu;
    static std::map<std::tuple<unsigned long, unsigned, int>, std::pair<ZZ, Factorization>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(F.p(), F.e(), n);
    auto it = cache.find(key);
    if (it == cache.end()) {
        ZZ e = 1;
        for (int d = 1; d <= n; ++d) e = lcm(e, zz_pow(F.q(), unsigned(d)) - 1);
        ZZ pt = 1;
        while (pt < n) pt *= F.p();
        e *= pt;
        it = cache.emplace(key, std::make_pair(e, factorize(e))).first;
    }
    return it->second;
}

ZZ element_order_direct(const Mat& A) {
    if (!invertible(A)) throw std::invalid_argument("element_order_direct: singular matrix");
    auto [e, fact] = gl_exponent(*A.F, A.n);
    ZZ ord = e;
    for (const auto& [pr, ex] : fact.prime_powers) {
        for (unsigned i = 0; i < ex; ++i) {
            if (!mpz_divisible_p(ord.get_mpz_t(), pr.get_mpz_t())) break;
            ZZ cand = ord / pr;
            if (!mat_pow(A, cand).is_identity()) break;
            ord = cand;
        }
    }
    return ord;
}

int support(const Mat& A) {
    ElementaryDivisors ed = invariant_factors(A);
    // Geometric multiplicity of an eigenvalue with minimal polynomial f is
    // the number of parts of the partition attached to f.
    std::map<Poly, int> parts;
    for (const auto& [f, m] : ed.divs) {
        (void)m;
        parts[f] += 1;
    }
    int best = 0;
    for (const auto& [f, cnt] : parts) {
        (void)f;
        best = std::max(best, cnt);
    }
    return A.n - best;
}

ZZ projective_order(const Mat& A) {
    ZZ ord = element_order_direct(A);
    for (const ZZ& d : divisors_sorted(factorize(ord)))
        if (mat_pow(A, d).is_scalar()) return d;
    return ord; // unreachable: A^ord = 1 is scalar
}

ZZ group_order(GroupKind kind, int n, unsigned long q) {
    if (n < 1) throw std::invalid_argument("group_order: n must be >= 1");
    ZZ qn = zz_pow(q, unsigned(n));
    ZZ gl = 1;
    ZZ qi = 1;
    for (int i = 0; i < n; ++i) {
        gl *= qn - qi;
        qi *= q;
    }
    switch (kind) {
        case GroupKind::GL: return gl;
        case GroupKind::SL: return gl / (q - 1);
        case GroupKind::PGL: return gl / (q - 1);
        case GroupKind::PSL: return gl / (q - 1) / gcd(ZZ(n), ZZ(q - 1));
    }
    throw std::logic_error("group_order: bad kind");
}

Mat random_gl(const Fq& F, int n, Rng& rng) {
    for (;;) {
        Mat m(F, n);
        for (auto& x : m.a) x = fq_t(rng.below(F.q()));
        if (invertible(m)) return m;
    }
}

Mat random_sl(const Fq& F, int n, Rng& rng) {
    Mat m = random_gl(F, n, rng);
    fq_t dinv = F.inv(det(m));
    for (int j = 0; j < n; ++j) m.at(0, j) = F.mul(dinv, m.at(0, j));
    return m;
}

namespace {

std::uint32_t point_add(const Fq& F, std::uint32_t a, std::uint32_t b, int n) {
    std::uint32_t r = 0, m = 1;
    for (int i = 0; i < n; ++i) {
        r += F.add(fq_t(a % F.q()), fq_t(b % F.q())) * m;
        a /= F.q();
        b /= F.q();
        m *= F.q();
    }
    return r;
}

std::uint32_t point_scale(const Fq& F, fq_t c, std::uint32_t a, int n) {
    std::uint32_t r = 0, m = 1;
    for (int i = 0; i < n; ++i) {
        r += F.mul(c, fq_t(a % F.q())) * m;
        a /= F.q();
        m *= F.q();
    }
    return r;
}

void gl_rec(const Fq& F, int n, int k, std::uint64_t npoints, std::vector<std::uint32_t>& rows,
            std::vector<char>& in_span, const std::function<void(const Mat&)>& fn) {
    if (k == n) {
        Mat m(F, n);
        for (int i = 0; i < n; ++i) {
            std::uint32_t v = rows[std::size_t(i)];
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = fq_t(v % F.q());
                v /= F.q();
            }
        }
        fn(m);
        return;
    }
    std::vector<std::uint32_t> span_points;
    span_points.reserve(std::size_t(1) << k);
    for (std::uint32_t s = 0; s < npoints; ++s)
        if (in_span[s]) span_points.push_back(s);
    for (std::uint32_t v = 1; v < npoints; ++v) {
        if (in_span[v]) continue;
        std::vector<std::uint32_t> added;
        for (std::uint32_t s : span_points)
            for (fq_t c = 1; c < F.q(); ++c) {
                std::uint32_t t = point_add(F, s, point_scale(F, c, v, n), n);
                if (!in_span[t]) {
                    in_span[t] = 1;
                    added.push_back(t);
                }
            }
        rows.push_back(v);
        gl_rec(F, n, k + 1, npoints, rows, in_span, fn);
        rows.pop_back();
        for (std::uint32_t t : added) in_span[t] = 0;
    }
}

} // namespace

void for_each_gl(const Fq& F, int n, const std::function<void(const Mat&)>& fn,
                 std::uint64_t max_elements) {
    if (group_order(GroupKind::GL, n, F.q()) > ZZ(static_cast<unsigned long>(max_elements)))
        throw limit_error("for_each_gl: group too large for exhaustive enumeration");
    std::uint64_t npoints = 1;
    for (int i = 0; i < n; ++i) npoints *= F.q();
    std::vector<std::uint32_t> rows;
    std::vector<char> in_span(npoints, 0);
    in_span[0] = 1;
    gl_rec(F, n, 0, npoints, rows, in_span, fn);
}

void for_each_sl(const Fq& F, int n, const std::function<void(const Mat&)>& fn,
                 std::uint64_t max_elements) {
    for_each_gl(
        F, n,
        [&](const Mat& m) {
            if (det(m) == 1) fn(m);
        },
        max_elements);
}

std::uint32_t apply_to_point(const Mat& A, std::uint32_t v) {
    const Fq& F = *A.F;
    std::vector<fq_t> x(std::size_t(A.n));
    for (int i = 0; i < A.n; ++i) {
        x[std::size_t(i)] = fq_t(v % F.q());
        v /= F.q();
    }
    std::uint32_t r = 0, m = 1;
    for (int i = 0; i < A.n; ++i) {
        fq_t acc = 0;
        for (int j = 0; j < A.n; ++j) acc = F.add(acc, F.mul(A.at(i, j), x[std::size_t(j)]));
        r += acc * m;
        m *= F.q();
    }
    return r;
}

std::uint32_t schreier_sims_point_limit() {
    if (const char* env = std::getenv("SLGEN_MAX_POINTS")) {
        long v = std::atol(env);
        if (v > 0) return std::uint32_t(v);
    }
    return 100000;
}

namespace {

// Stabilizer chain on the nonzero vectors of F_q^n with matrices as group
// elements. Orbits and generator lists are append-only; every
// (orbit point, generator) pair is processed once, and sift residues are
// inserted as new strong generators until no pair yields a residue.
class StabChain {
  public:
    StabChain(const std::vector<Mat>& gens, std::uint32_t max_points) {
        if (gens.empty()) return;
        F_ = gens[0].F;
        n_ = gens[0].n;
        std::uint64_t np = 1;
        for (int i = 0; i < n_; ++i) np *= F_->q();
        if (np - 1 > max_points)
            throw limit_error("generated_group_order: point set exceeds limit");
        for (const Mat& g : gens) {
            if (g.F != F_ || g.n != n_)
                throw std::invalid_argument("generated_group_order: mixed generators");
            if (!invertible(g))
                throw std::invalid_argument("generated_group_order: singular generator");
            insert(g);
        }
        run();
    }

    ZZ order() const {
        ZZ o = 1;
        for (const auto& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
        return o;
    }

  private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<std::size_t> gen_idx;
        std::vector<std::uint32_t> orbit;
        std::unordered_map<std::uint32_t, std::pair<Mat, Mat>> trans; // point -> (u, u^{-1})
        std::size_t done_orbit = 0, done_gens = 0;   // verified rectangle
        std::size_t closed_orbit = 0, closed_gens = 0; // orbit-closure rectangle
    };

    const Fq* F_ = nullptr;
    int n_ = 0;
    std::vector<Mat> strong_;
    std::vector<Level> levels_;

    void close_orbit(Level& lv) {
        for (;;) {
            std::size_t o = lv.orbit.size(), g = lv.gen_idx.size();
            if (lv.closed_orbit == o && lv.closed_gens == g) break;
            for (std::size_t i = 0; i < o; ++i)
                for (std::size_t k = 0; k < g; ++k) {
                    if (i < lv.closed_orbit && k < lv.closed_gens) continue;
                    const Mat& s = strong_[lv.gen_idx[k]];
                    std::uint32_t p = lv.orbit[i];
                    std::uint32_t p2 = apply_to_point(s, p);
                    if (lv.trans.count(p2)) continue;
                    Mat u = mul(s, lv.trans.at(p).first);
                    Mat uinv = inverse(u);
                    lv.trans.emplace(p2, std::make_pair(std::move(u), std::move(uinv)));
                    lv.orbit.push_back(p2);
                }
            lv.closed_orbit = o;
            lv.closed_gens = g;
        }
    }

    // Returns false with (drop, residue) when sifting gets stuck.
    bool sift(std::size_t start, Mat g, std::size_t& drop, Mat& residue) {
        for (std::size_t k = start; k < levels_.size(); ++k) {
            std::uint32_t p = apply_to_point(g, levels_[k].base);
            if (p == levels_[k].base) continue;
            auto it = levels_[k].trans.find(p);
            if (it == levels_[k].trans.end()) {
                drop = k;
                residue = std::move(g);
                return false;
            }
            g = mul(it->second.second, g);
        }
        if (g.is_identity()) return true;
        drop = levels_.size();
        residue = std::move(g);
        return false;
    }

    void add_level(const Mat& mover) {
        std::uint32_t base = 0;
        for (int t = 0; t < n_; ++t) {
            std::uint32_t pt = 1;
            for (int i = 0; i < t; ++i) pt *= F_->q();
            if (apply_to_point(mover, pt) != pt) {
                base = pt;
                break;
            }
        }
        if (base == 0) throw std::logic_error("StabChain: residue moves no basis vector");
        Level lv;
        lv.base = base;
        lv.orbit.push_back(base);
        lv.trans.emplace(base, std::make_pair(Mat::identity(*F_, n_), Mat::identity(*F_, n_)));
        levels_.push_back(std::move(lv));
    }

    void insert(const Mat& g) {
        std::size_t drop;
        Mat residue;
        if (sift(0, g, drop, residue)) return;
        if (drop == levels_.size()) add_level(residue);
        strong_.push_back(std::move(residue));
        std::size_t idx = strong_.size() - 1;
        for (std::size_t k = 0; k <= drop && k < levels_.size(); ++k) {
            levels_[k].gen_idx.push_back(idx);
            close_orbit(levels_[k]);
        }
    }

    void run() {
        // levels_ may grow during processing, so access is index-based.
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t k = levels_.size(); k-- > 0;) {
                while (levels_[k].done_orbit < levels_[k].orbit.size() ||
                       levels_[k].done_gens < levels_[k].gen_idx.size()) {
                    progress = true;
                    std::size_t o = levels_[k].orbit.size(), g = levels_[k].gen_idx.size();
                    for (std::size_t i = 0; i < o; ++i)
                        for (std::size_t s = 0; s < g; ++s) {
                            if (i < levels_[k].done_orbit && s < levels_[k].done_gens) continue;
                            std::uint32_t p = levels_[k].orbit[i];
                            Mat gen = strong_[levels_[k].gen_idx[s]];
                            std::uint32_t p2 = apply_to_point(gen, p);
                            Mat h = mul(levels_[k].trans.at(p2).second,
                                        mul(gen, levels_[k].trans.at(p).first));
                            if (h.is_identity()) continue;
                            std::size_t drop;
                            Mat residue;
                            if (sift(k + 1, h, drop, residue)) continue;
                            if (drop == levels_.size()) add_level(residue);
                            strong_.push_back(std::move(residue));
                            std::size_t idx = strong_.size() - 1;
                            for (std::size_t t = 0; t <= drop && t < levels_.size(); ++t) {
                                levels_[t].gen_idx.push_back(idx);
                                close_orbit(levels_[t]);
                            }
                        }
                    levels_[k].done_orbit = o;
                    levels_[k].done_gens = g;
                }
            }
        }
    }
};

} // namespace

ZZ generated_group_order(const std::vector<Mat>& gens, std::uint32_t max_points) {
    if (max_points == 0) max_points = schreier_sims_point_limit();
    StabChain chain(gens, max_points);
    return chain.order();
}

std::vector<Mat> sl_transvection_generators(const Fq& F, int n) {
    std::vector<Mat> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (fq_t c = 1; c < F.q(); ++c) {
                Mat m = Mat::identity(F, n);
                m.at(i, j) = c;
                out.push_back(std::move(m));
            }
        }
    return out;
}

std::vector<std::vector<Mat>> conjugacy_classes_brute(const Fq& F, int n, bool sl_only,
                                                      std::uint64_t max_elements) {
    ZZ qnn = zz_pow(F.q(), unsigned(n) * unsigned(n));
    if (qnn > ZZ("4611686018427387904")) // 2^62: element encoding must fit
        throw limit_error("conjugacy_classes_brute: encoding overflow");
    std::vector<Mat> elems;
    std::unordered_map<std::uint64_t, std::size_t> index;
    auto collect = [&](const Mat& m) {
        index.emplace(m.encode(), elems.size());
        elems.push_back(m);
    };
    if (sl_only)
        for_each_sl(F, n, collect, max_elements);
    else
        for_each_gl(F, n, collect, max_elements);

    // Conjugating generators: transvections, plus a dilation for GL.
    std::vector<Mat> gens = sl_transvection_generators(F, n);
    if (!sl_only && F.q() > 2) {
        Mat d = Mat::identity(F, n);
        d.at(0, 0) = F.generator();
        gens.push_back(d);
    }
    std::vector<std::pair<Mat, Mat>> conj;
    conj.reserve(gens.size());
    for (const Mat& g : gens) conj.emplace_back(g, inverse(g));

    std::vector<char> seen(elems.size(), 0);
    std::vector<std::vector<Mat>> classes;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit{i};
        seen[i] = 1;
        for (std::size_t w = 0; w < orbit.size(); ++w)
            for (const auto& [g, ginv] : conj) {
                Mat x = mul(g, mul(elems[orbit[w]], ginv));
                std::size_t xi = index.at(x.encode());
                if (!seen[xi]) {
                    seen[xi] = 1;
                    orbit.push_back(xi);
                }
            }
        std::vector<Mat> cls;
        cls.reserve(orbit.size());
        for (std::size_t idx : orbit) cls.push_back(elems[idx]);
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace slgen
