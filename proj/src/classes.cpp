#include "slgen/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slgen {

IrredTable::IrredTable(const Fq& field, unsigned maxdeg) : F(&field) {
    polys.resize(maxdeg + 1);
    orders.resize(maxdeg + 1);
    for (unsigned d = 1; d <= maxdeg; ++d) {
        polys[d] = pol::enumerate_irreducibles(field, d, /*exclude_x=*/true);
        orders[d].reserve(polys[d].size());
        for (const Poly& f : polys[d]) orders[d].push_back(pol::order(field, f));
    }
}

namespace {

// partitions[s] = all partitions of s, parts descending, largest part first.
std::vector<std::vector<std::vector<unsigned>>> partitions_up_to(unsigned n) {
    std::vector<std::vector<std::vector<unsigned>>> out(n + 1);
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned total, unsigned left,
                                                                unsigned maxpart) {
        if (left == 0) {
            out[total].push_back(cur);
            return;
        }
        for (unsigned k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(total, left - k, k);
            cur.pop_back();
        }
    };
    for (unsigned s = 1; s <= n; ++s) rec(s, s, s);
    return out;
}

struct LabelEnum {
    const IrredTable& table;
    const std::vector<std::vector<std::vector<unsigned>>>& parts;
    const std::function<void(const ClassLabel&)>& fn;
    ClassLabel cur;
    int n;

    void rec(unsigned d, std::size_t j, unsigned budget) {
        if (budget == 0) {
            fn(cur);
            return;
        }
        if (d > budget) return;
        const auto& ps = table.polys[d];
        if (j >= ps.size()) {
            rec(d + 1, 0, budget);
            return;
        }
        rec(d, j + 1, budget); // poly j unused
        for (unsigned s = 1; s * d <= budget; ++s)
            for (const auto& lam : parts[s]) {
                cur.nu.emplace_back(ps[j], lam);
                rec(d, j + 1, budget - s * d);
                cur.nu.pop_back();
            }
    }
};

} // namespace

void enumerate_class_labels(const Fq& F, int n, const std::function<void(const ClassLabel&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_class_labels: n must be >= 1");
    IrredTable table(F, unsigned(n));
    auto parts = partitions_up_to(unsigned(n));
    LabelEnum e{table, parts, fn, {}, n};
    e.rec(1, 0, unsigned(n));
}

std::vector<ClassLabel> class_labels(const Fq& F, int n) {
    std::vector<ClassLabel> out;
    enumerate_class_labels(F, n, [&](const ClassLabel& l) { out.push_back(l); });
    return out;
}

ClassLabel label_of(const Mat& g) {
    if (!invertible(g)) throw std::invalid_argument("label_of: singular matrix");
    ElementaryDivisors ed = invariant_factors(g);
    std::map<Poly, std::vector<unsigned>, bool (*)(const Poly&, const Poly&)> grouped(pol::less);
    for (const auto& [f, m] : ed.divs) grouped[f].push_back(m);
    ClassLabel label;
    for (auto& [f, ms] : grouped) {
        std::sort(ms.begin(), ms.end(), std::greater<unsigned>());
        label.nu.emplace_back(f, ms);
    }
    return label;
}

ZZ centralizer_order(const ClassLabel& label, const Fq& F) {
    // Product over polynomials of the standard q_f-analog factor
    // q_f^{sum (lambda'_i)^2} * prod_i prod_{j<=m_i} (1 - q_f^{-j}),
    // with q_f = q^{deg f} and m_i the multiplicity of part i.
    QQ total = 1;
    for (const auto& [f, lam] : label.nu) {
        ZZ qf = zz_pow(F.q(), unsigned(pol::deg(f)));
        unsigned largest = lam.empty() ? 0 : lam[0];
        ZZ sum_conj_sq = 0;
        for (unsigned k = 1; k <= largest; ++k) {
            unsigned conj = 0;
            for (unsigned part : lam)
                if (part >= k) ++conj;
            sum_conj_sq += ZZ(conj) * conj;
        }
        QQ cf = QQ(zz_pow(qf, sum_conj_sq.get_ui()));
        std::map<unsigned, unsigned> mult;
        for (unsigned part : lam) mult[part] += 1;
        for (const auto& [part, m] : mult) {
            (void)part;
            for (unsigned j = 1; j <= m; ++j)
                cf *= make_q(zz_pow(qf, j) - 1, zz_pow(qf, j));
        }
        total *= cf;
    }
    if (total.get_den() != 1)
        throw std::logic_error("centralizer_order: non-integer result");
    return total.get_num();
}

ZZ class_order(const ClassLabel& label, const Fq& F) {
    ZZ L = 1;
    unsigned maxpart = 0;
    for (const auto& [f, lam] : label.nu) {
        L = lcm(L, pol::order(F, f));
        for (unsigned part : lam) maxpart = std::max(maxpart, part);
    }
    ZZ pt = 1;
    while (pt < maxpart) pt *= F.p();
    return L * pt;
}

namespace {

struct Eta1Enum {
    const IrredTable& table;
    QQ acc = 0;

    void rec(unsigned d, std::size_t j, unsigned budget, const ZZ& l) {
        if (budget == 0) {
            acc += make_q(1, l);
            return;
        }
        if (d > budget) return;
        const auto& ps = table.polys[d];
        if (j >= ps.size()) {
            rec(d + 1, 0, budget, l);
            return;
        }
        rec(d, j + 1, budget, l);
        rec(d, j, budget - d, lcm(l, table.orders[d][j])); // take another copy
    }
};

} // namespace

QQ eta1_exact(int n, const Fq& F) {
    if (n < 1) throw std::invalid_argument("eta1_exact: n must be >= 1");
    IrredTable table(F, unsigned(n));
    Eta1Enum e{table};
    e.rec(1, 0, unsigned(n), ZZ(1));
    return e.acc;
}

namespace {

// Truncated power series with ZZ coefficients.
using Series = std::vector<ZZ>;

Series series_mul(const Series& a, const Series& b, unsigned n) {
    Series r(n + 1, ZZ(0));
    for (unsigned i = 0; i <= n && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= n && j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series series_pow(Series base, ZZ e, unsigned n) {
    Series r(n + 1, ZZ(0));
    r[0] = 1;
    while (e > 0) {
        if (mpz_tstbit(e.get_mpz_t(), 0)) r = series_mul(r, base, n);
        e >>= 1;
        if (e > 0) base = series_mul(base, base, n);
    }
    return r;
}

} // namespace

ZZ eta2_exact(int n, const Fq& F) {
    if (n < 1) throw std::invalid_argument("eta2_exact: n must be >= 1");
    unsigned un = unsigned(n);
    // partitions into parts >= 2
    std::vector<ZZ> p2(un + 1, ZZ(0));
    p2[0] = 1;
    for (unsigned part = 2; part <= un; ++part)
        for (unsigned s = part; s <= un; ++s) p2[s] += p2[s - part];
    Series total(un + 1, ZZ(0));
    total[0] = 1;
    for (unsigned d = 1; 2 * d <= un; ++d) {
        ZZ nd = pol::irreducible_count(F, d);
        if (d == 1) nd -= 1; // exclude X
        Series ad(un + 1, ZZ(0));
        for (unsigned k = 0; k * d <= un; ++k)
            if (k == 0 || k >= 2) ad[k * d] = p2[k];
        // per-polynomial generating function, raised to the polynomial count
        total = series_mul(total, series_pow(ad, nd, un), un);
    }
    return total[un];
}

LowerBoundContribution lower_bound_contribution(int n, const Fq& F, int d) {
    if (d < 1 || n < 1 || n % d != 0)
        throw std::invalid_argument("lower_bound_contribution: d must divide n");
    unsigned r = unsigned(n / d);
    IrredTable table(F, unsigned(d));
    const auto& ps = table.polys[unsigned(d)];
    LowerBoundContribution out;
    out.exact = 0;
    // all r-subsets of distinct degree-d irreducibles
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (idx.size() == r) {
            ClassLabel label;
            for (std::size_t i : idx) label.nu.emplace_back(ps[i], std::vector<unsigned>{1});
            out.exact += make_q(1, centralizer_order(label, F) * class_order(label, F));
            return;
        }
        for (std::size_t i = from; i < ps.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    ZZ binom;
    mpz_bin_uiui(binom.get_mpz_t(), ps.size(), r);
    ZZ qd1 = zz_pow(F.q(), unsigned(d)) - 1;
    out.closed_form = make_q(binom, zz_pow(qd1, r) * qd1);
    return out;
}

} // namespace slgen
