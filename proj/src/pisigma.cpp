#include "slgen/pisigma.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "slgen/classes.hpp"

namespace slgen {

void SmallGroup::finalize() {
    std::size_t n = n_;
    if (n == 0) throw std::invalid_argument("SmallGroup: empty");
    // identity and inverse laws
    for (std::size_t a = 0; a < n; ++a) {
        if (mul(0, int(a)) != int(a) || mul(int(a), 0) != int(a))
            throw std::logic_error("SmallGroup: index 0 is not an identity");
    }
    inv_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (mul(int(a), int(b)) == 0 && mul(int(b), int(a)) == 0) {
                inv_[a] = int(b);
                break;
            }
        if (inv_[a] < 0) throw std::logic_error("SmallGroup: missing inverse");
    }
    // associativity spot check
    Rng rng(0xa550c ^ n);
    for (int t = 0; t < 2000; ++t) {
        int a = int(rng.below(n)), b = int(rng.below(n)), c = int(rng.below(n));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::logic_error("SmallGroup: associativity violated");
    }
    ord_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        long k = 1;
        int x = int(a);
        while (x != 0) {
            x = mul(x, int(a));
            ++k;
        }
        ord_[a] = k;
    }
    // conjugacy classes
    cls_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        if (cls_[a] >= 0) continue;
        int id = int(classes_.size());
        std::vector<int> orbit{int(a)};
        cls_[a] = id;
        for (std::size_t w = 0; w < orbit.size(); ++w)
            for (std::size_t g = 0; g < n; ++g) {
                int y = mul(mul(int(g), orbit[w]), inv_[g]);
                if (cls_[std::size_t(y)] < 0) {
                    cls_[std::size_t(y)] = id;
                    orbit.push_back(y);
                }
            }
        classes_.push_back(std::move(orbit));
    }
}

SmallGroup SmallGroup::cyclic(unsigned m) {
    if (m < 1) throw std::invalid_argument("SmallGroup::cyclic: order must be >= 1");
    SmallGroup g;
    g.n_ = m;
    g.mul_.resize(std::size_t(m) * m);
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < m; ++b) g.mul_[std::size_t(a) * m + b] = int((a + b) % m);
    std::ostringstream os;
    os << "C" << m;
    g.name_ = os.str();
    g.finalize();
    return g;
}

SmallGroup SmallGroup::dihedral(unsigned m) {
    if (m < 1) throw std::invalid_argument("SmallGroup::dihedral: m must be >= 1");
    unsigned n = 2 * m;
    SmallGroup g;
    g.n_ = n;
    g.mul_.resize(std::size_t(n) * n);
    // element a + m*b = r^a s^b
    auto idx = [m](unsigned a, unsigned b) { return int(a + m * b); };
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b < 2; ++b)
            for (unsigned c = 0; c < m; ++c)
                for (unsigned d = 0; d < 2; ++d) {
                    unsigned ra = b == 0 ? (a + c) % m : (a + m - c % m) % m;
                    g.mul_[std::size_t(idx(a, b)) * n + std::size_t(idx(c, d))] =
                        idx(ra, (b + d) % 2);
                }
    std::ostringstream os;
    os << "D" << m;
    g.name_ = os.str();
    g.finalize();
    return g;
}

SmallGroup SmallGroup::from_matrix_group(const Fq& F, int n, bool sl, std::uint64_t max_order) {
    std::vector<Mat> mats;
    auto visit = [&](const Mat& m) { mats.push_back(m); };
    if (sl)
        for_each_sl(F, n, visit, max_order);
    else
        for_each_gl(F, n, visit, max_order);
    // identity first
    for (std::size_t i = 0; i < mats.size(); ++i)
        if (mats[i].is_identity()) {
            std::swap(mats[0], mats[i]);
            break;
        }
    std::unordered_map<std::uint64_t, int> index;
    for (std::size_t i = 0; i < mats.size(); ++i) index.emplace(mats[i].encode(), int(i));
    SmallGroup g;
    g.n_ = mats.size();
    g.mul_.resize(g.n_ * g.n_);
    for (std::size_t a = 0; a < g.n_; ++a)
        for (std::size_t b = 0; b < g.n_; ++b)
            g.mul_[a * g.n_ + b] = index.at(slgen::mul(mats[a], mats[b]).encode());
    g.mats_ = std::move(mats);
    std::ostringstream os;
    os << (sl ? "SL" : "GL") << "(" << n << "," << F.q() << ")";
    g.name_ = os.str();
    g.finalize();
    return g;
}

SmallGroup SmallGroup::quotient(const SmallGroup& G, const std::vector<int>& normal) {
    std::size_t n = std::size_t(G.order());
    std::vector<char> in_n(n, 0);
    for (int x : normal) in_n[std::size_t(x)] = 1;
    if (normal.empty() || !in_n[0])
        throw std::invalid_argument("SmallGroup::quotient: subgroup must contain the identity");
    for (int x : normal)
        for (int y : normal)
            if (!in_n[std::size_t(G.mul(x, y))])
                throw std::invalid_argument("SmallGroup::quotient: set not closed");
    for (int x : normal)
        for (std::size_t g = 0; g < n; ++g)
            if (!in_n[std::size_t(G.mul(G.mul(int(g), x), G.inv(int(g))))])
                throw std::invalid_argument("SmallGroup::quotient: subgroup not normal");
    // cosets, identity coset first (element 0 is scanned first)
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (std::size_t g = 0; g < n; ++g) {
        if (coset_of[g] >= 0) continue;
        int id = int(reps.size());
        reps.push_back(int(g));
        for (int x : normal) coset_of[std::size_t(G.mul(int(g), x))] = id;
    }
    SmallGroup q;
    q.n_ = reps.size();
    q.mul_.resize(q.n_ * q.n_);
    for (std::size_t a = 0; a < q.n_; ++a)
        for (std::size_t b = 0; b < q.n_; ++b)
            q.mul_[a * q.n_ + b] = coset_of[std::size_t(G.mul(reps[a], reps[b]))];
    q.name_ = G.name() + "/N";
    q.finalize();
    return q;
}

QQ SmallGroup::eta() const {
    QQ s = 0;
    for (std::size_t a = 0; a < n_; ++a) s += make_q(1, ZZ(ord_[a]));
    return s / QQ(static_cast<unsigned long>(n_));
}

std::vector<QQ> eta_class_function(const SmallGroup& G) {
    std::size_t n = std::size_t(G.order());
    std::vector<QQ> eta(n, QQ(0));
    for (std::size_t s = 0; s < n; ++s) {
        QQ w = make_q(1, ZZ(G.elem_order(int(s))));
        int x = 0;
        do {
            eta[std::size_t(x)] += w;
            x = G.mul(x, int(s));
        } while (x != 0);
    }
    return eta;
}

long power_count(const SmallGroup& G, unsigned long i, int x) {
    long count = 0;
    for (int s = 0; s < G.order(); ++s) {
        unsigned long r = i % static_cast<unsigned long>(G.elem_order(s));
        int y = 0;
        for (unsigned long k = 0; k < r; ++k) y = G.mul(y, s);
        if (y == x) ++count;
    }
    return count;
}

WeightedPowerSum weighted_power_sum_check(const SmallGroup& G, int x, unsigned long N) {
    if (N < 1) throw std::invalid_argument("weighted_power_sum_check: N must be >= 1");
    // Accumulate per sigma, stepping through its cycle.
    ZZ total = 0;
    for (int s = 0; s < G.order(); ++s) {
        long ord = G.elem_order(s);
        int y = 0;
        for (unsigned long i = 1; i <= N; ++i) {
            y = G.mul(y, s);
            if (y == x) total += 2 * (ZZ(N) - i);
        }
        (void)ord;
    }
    std::vector<QQ> eta = eta_class_function(G);
    QQ n2eta = QQ(ZZ(N) * ZZ(N)) * eta[std::size_t(x)];
    QQ gap = QQ(total) - n2eta;
    if (gap < 0) gap = -gap;
    return {QQ(total), n2eta, gap};
}

std::size_t PairClosures::pair_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    std::size_t ua = std::size_t(a), ub = std::size_t(b);
    return ub * (ub + 1) / 2 + ua;
}

PairClosures::PairClosures(const SmallGroup& G) : G_(&G) {
    std::size_t n = std::size_t(G.order());
    words_ = (n + 63) / 64;
    std::size_t npairs = n * (n + 1) / 2;
    bits_.assign(npairs * words_, 0);
    std::vector<int> elems;
    for (int a = 0; a < int(n); ++a)
        for (int b = a; b < int(n); ++b) {
            std::uint64_t* bs = &bits_[pair_index(a, b) * words_];
            auto test = [&](int x) {
                return (bs[std::size_t(x) / 64] >> (std::size_t(x) % 64)) & 1;
            };
            auto set = [&](int x) { bs[std::size_t(x) / 64] |= 1ull << (std::size_t(x) % 64); };
            elems.clear();
            set(a);
            elems.push_back(a);
            if (!test(b)) {
                set(b);
                elems.push_back(b);
            }
            for (std::size_t w = 0; w < elems.size(); ++w) {
                for (int g : {a, b}) {
                    int u = G.mul(elems[w], g);
                    if (!test(u)) {
                        set(u);
                        elems.push_back(u);
                    }
                    int v = G.mul(g, elems[w]);
                    if (!test(v)) {
                        set(v);
                        elems.push_back(v);
                    }
                }
            }
        }
}

QQ PairClosures::miss_probability(const std::vector<char>& in_c) const {
    std::size_t n = std::size_t(G_->order());
    std::vector<std::uint64_t> cmask(words_, 0);
    for (std::size_t x = 0; x < n; ++x)
        if (in_c[x]) cmask[x / 64] |= 1ull << (x % 64);
    ZZ miss = 0;
    for (int a = 0; a < int(n); ++a)
        for (int b = a; b < int(n); ++b) {
            const std::uint64_t* bs = &bits_[pair_index(a, b) * words_];
            bool hit = false;
            for (std::size_t w = 0; w < words_; ++w)
                if (bs[w] & cmask[w]) {
                    hit = true;
                    break;
                }
            if (!hit) miss += (a == b) ? 1 : 2;
        }
    return make_q(miss, ZZ(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n));
}

QQ PairClosures::generation_probability() const {
    std::size_t n = std::size_t(G_->order());
    ZZ gen = 0;
    for (int a = 0; a < int(n); ++a)
        for (int b = a; b < int(n); ++b) {
            const std::uint64_t* bs = &bits_[pair_index(a, b) * words_];
            std::size_t pop = 0;
            for (std::size_t w = 0; w < words_; ++w)
                pop += std::size_t(__builtin_popcountll(bs[w]));
            if (pop == n) gen += (a == b) ? 1 : 2;
        }
    return make_q(gen, ZZ(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n));
}

namespace {

void check_conj_invariant(const SmallGroup& G, const std::vector<char>& in_c) {
    if (in_c.size() != std::size_t(G.order()))
        throw std::invalid_argument("subset size does not match group order");
    for (const auto& cls : G.classes()) {
        char v = in_c[std::size_t(cls[0])];
        for (int x : cls)
            if (in_c[std::size_t(x)] != v)
                throw std::invalid_argument("subset is not conjugation-invariant");
    }
}

} // namespace

QQ second_moment_limit(const SmallGroup& G, const std::vector<char>& in_c) {
    check_conj_invariant(G, in_c);
    std::size_t n = std::size_t(G.order());
    ZZ csize = 0;
    for (char v : in_c) csize += v ? 1 : 0;
    if (csize == 0) throw std::invalid_argument("second_moment_limit: empty subset");
    std::vector<QQ> eta = eta_class_function(G);
    QQ sum = 0;
    for (int pi = 0; pi < int(n); ++pi) {
        if (!in_c[std::size_t(pi)]) continue;
        int pinv = G.inv(pi);
        for (int g = 0; g < int(n); ++g)
            if (in_c[std::size_t(g)]) sum += eta[std::size_t(G.mul(pinv, g))];
    }
    return sum / QQ(csize * csize) - 1;
}

QQ miss_probability(const SmallGroup& G, const std::vector<char>& in_c) {
    check_conj_invariant(G, in_c);
    ZZ csize = 0;
    for (char v : in_c) csize += v ? 1 : 0;
    if (csize == 0) throw std::invalid_argument("miss_probability: empty subset");
    PairClosures pc(G);
    return pc.miss_probability(in_c);
}

} // namespace slgen
