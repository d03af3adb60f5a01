#include "slgen/normmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slgen {

namespace {

constexpr long double kTau = 6.283185307179586476925286766559L;

// Echelon form over the base field of coordinate vectors; returns rank.
unsigned coord_rank(const ExtField& E, const std::vector<fq_t>& elems) {
    const Fq& F = E.base();
    unsigned n = E.degree();
    std::vector<std::vector<fq_t>> rows;
    for (fq_t x : elems) rows.push_back(E.coords(x));
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
        unsigned piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        fq_t linv = F.inv(rows[rank][col]);
        for (unsigned j = 0; j < n; ++j) rows[rank][j] = F.mul(linv, rows[rank][j]);
        for (unsigned r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            fq_t c = rows[r][col];
            for (unsigned j = 0; j < n; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

// Reduce a set of elements to an independent basis (first independent ones).
std::vector<fq_t> extract_basis(const ExtField& E, const std::vector<fq_t>& elems) {
    std::vector<fq_t> basis;
    for (fq_t x : elems) {
        if (!x) continue;
        basis.push_back(x);
        if (coord_rank(E, basis) < basis.size()) basis.pop_back();
    }
    return basis;
}

} // namespace

Subspace make_subspace(const ExtField& E, std::vector<fq_t> basis) {
    if (coord_rank(E, basis) != basis.size())
        throw std::invalid_argument("make_subspace: basis not independent");
    return {&E, std::move(basis)};
}

Subspace full_subspace(const ExtField& E) {
    std::vector<fq_t> basis;
    for (unsigned i = 0; i < E.degree(); ++i) {
        std::vector<fq_t> c(E.degree(), 0);
        c[i] = 1;
        basis.push_back(E.from_coords(c));
    }
    return {&E, std::move(basis)};
}

Subspace subfield_subspace(const ExtField& E, unsigned k) {
    if (k < 1 || E.degree() % k != 0)
        throw std::invalid_argument("subfield_subspace: k must divide the extension degree");
    std::vector<fq_t> members;
    for (std::uint32_t x = 0; x < E.card(); ++x) {
        fq_t y = fq_t(x);
        for (unsigned i = 0; i < k; ++i) y = E.frobenius_q(y);
        if (y == fq_t(x)) members.push_back(fq_t(x));
    }
    Subspace w{&E, extract_basis(E, members)};
    if (w.dim() != k) throw std::logic_error("subfield_subspace: unexpected dimension");
    return w;
}

std::vector<Subspace> enumerate_hyperplanes(const ExtField& E) {
    const Fq& F = E.base();
    unsigned n = E.degree();
    if (n < 2) throw std::invalid_argument("enumerate_hyperplanes: extension degree must be >= 2");
    std::uint64_t reps = (E.card() - 1) / (F.q() - 1);
    std::vector<Subspace> out;
    out.reserve(reps);
    for (std::uint64_t k = 0; k < reps; ++k) {
        fq_t a = E.exp_log(k);
        // functional x -> Tr(a x) has coefficients t_i = Tr(a Y^i)
        std::vector<fq_t> t(n);
        std::vector<fq_t> coord(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            std::fill(coord.begin(), coord.end(), 0);
            coord[i] = 1;
            t[i] = E.trace_to_base(E.mul(a, E.from_coords(coord)));
        }
        unsigned pivot = 0;
        while (pivot < n && t[pivot] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("enumerate_hyperplanes: zero functional");
        std::vector<fq_t> basis;
        for (unsigned i = 0; i < n; ++i) {
            if (i == pivot) continue;
            std::fill(coord.begin(), coord.end(), 0);
            coord[i] = 1;
            coord[pivot] = F.neg(F.div(t[i], t[pivot]));
            basis.push_back(E.from_coords(coord));
        }
        out.push_back({&E, std::move(basis)});
    }
    return out;
}

Subspace random_subspace(const ExtField& E, unsigned dim, Rng& rng) {
    if (dim > E.degree()) throw std::invalid_argument("random_subspace: dimension too large");
    std::vector<fq_t> basis;
    while (basis.size() < dim) {
        fq_t x = fq_t(rng.below(E.card()));
        if (!x) continue;
        basis.push_back(x);
        if (coord_rank(E, basis) < basis.size()) basis.pop_back();
    }
    return {&E, std::move(basis)};
}

std::vector<fq_t> subspace_elements(const Subspace& W) {
    const ExtField& E = *W.E;
    const Fq& F = E.base();
    std::vector<fq_t> out;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < W.dim(); ++i) total *= F.q();
    out.reserve(total);
    std::vector<fq_t> coeff(W.dim(), 0);
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t t = v;
        fq_t acc = 0;
        for (unsigned i = 0; i < W.dim(); ++i) {
            fq_t c = fq_t(t % F.q());
            t /= F.q();
            if (c) acc = E.add(acc, E.scalar_mul(c, W.basis[i]));
        }
        out.push_back(acc);
    }
    return out;
}

fq_t norm(const ExtField& E, fq_t x) { return E.norm_to_base(x); }

std::vector<fq_t> norm_image_on(const Subspace& W) {
    std::vector<char> hit(W.E->base().q(), 0);
    for (fq_t x : subspace_elements(W)) hit[norm(*W.E, x)] = 1;
    std::vector<fq_t> out;
    for (fq_t v = 0; v < W.E->base().q(); ++v)
        if (hit[v]) out.push_back(v);
    return out;
}

bool norm_surjective_on(const Subspace& W) {
    return norm_image_on(W).size() == W.E->base().q();
}

unsigned MultChar::order() const {
    unsigned qm1 = F->q() - 1;
    return qm1 / std::gcd(t % qm1 == 0 ? qm1 : t % qm1, qm1);
}

Cplx MultChar::value(fq_t x, ZeroConvention conv) const {
    if (x == 0) {
        if (conv == ZeroConvention::one && trivial()) return Cplx(1, 0);
        return Cplx(0, 0);
    }
    unsigned qm1 = F->q() - 1;
    long double ang = kTau * ((unsigned long long)(t % qm1) * F->log(x) % qm1) / qm1;
    return Cplx(std::cos(ang), std::sin(ang));
}

MultChar mult_char_of_order(const Fq& F, unsigned r) {
    if (r < 1 || (F.q() - 1) % r != 0)
        throw std::invalid_argument("mult_char_of_order: order must divide q-1");
    return {&F, (F.q() - 1) / r};
}

std::vector<MultChar> all_mult_chars(const Fq& F) {
    std::vector<MultChar> out;
    for (unsigned t = 0; t < F.q() - 1; ++t) out.push_back({&F, t});
    return out;
}

Cplx AddChar::value(fq_t x) const {
    unsigned long tr = E->abs_trace(E->mul(b, x));
    long double ang = kTau * tr / (long double)E->base().p();
    return Cplx(std::cos(ang), std::sin(ang));
}

namespace {

struct KahanSum {
    long double re = 0, re_c = 0, im = 0, im_c = 0;
    void add(const Cplx& v) {
        long double y = v.real() - re_c, t = re + y;
        re_c = (t - re) - y;
        re = t;
        y = v.imag() - im_c;
        t = im + y;
        im_c = (t - im) - y;
        im = t;
    }
    Cplx value() const { return Cplx(re, im); }
};

} // namespace

Cplx character_sum_on_subspace(const Subspace& W, const MultChar& chi, ZeroConvention conv) {
    KahanSum s;
    for (fq_t x : subspace_elements(W)) s.add(chi.value(norm(*W.E, x), conv));
    return s.value();
}

long double gauss_sum_magnitude(const ExtField& E, const MultChar& chi, const AddChar& theta) {
    if (chi.trivial())
        throw std::invalid_argument("gauss_sum_magnitude: trivial multiplicative character");
    if (theta.trivial())
        throw std::invalid_argument("gauss_sum_magnitude: trivial additive character");
    KahanSum s;
    for (std::uint32_t x = 0; x < E.card(); ++x)
        s.add(theta.value(fq_t(x)) * chi.value(norm(E, fq_t(x))));
    return std::abs(s.value());
}

long count_by_norm(const Subspace& W, fq_t a) {
    if (a == 0 || a >= W.E->base().q())
        throw std::invalid_argument("count_by_norm: a must be a nonzero base-field element");
    long count = 0;
    for (fq_t x : subspace_elements(W))
        if (norm(*W.E, x) == a) ++count;
    return count;
}

long double count_by_norm_character_formula(const Subspace& W, fq_t a) {
    if (a == 0 || a >= W.E->base().q())
        throw std::invalid_argument("count_by_norm_character_formula: bad norm value");
    const Fq& F = W.E->base();
    KahanSum s;
    for (const MultChar& chi : all_mult_chars(F)) {
        Cplx inner = character_sum_on_subspace(W, chi, ZeroConvention::zero);
        s.add(inner * std::conj(chi.value(a)));
    }
    return s.value().real() / (long double)(F.q() - 1);
}

} // namespace slgen
