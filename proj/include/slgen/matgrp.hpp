#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "slgen/ff.hpp"
#include "slgen/util.hpp"

namespace slgen {

// Square matrix over GF(q), row-major. Matrices are immutable values in
// practice; the field reference must outlive the matrix (Fq::get caches
// fields for the program lifetime).
struct Mat {
    const Fq* F = nullptr;
    int n = 0;
    std::vector<fq_t> a;

    Mat() = default;
    Mat(const Fq& field, int dim) : F(&field), n(dim), a(std::size_t(dim) * dim, 0) {}

    fq_t& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    fq_t at(int i, int j) const { return a[std::size_t(i) * n + j]; }
    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_identity() const;
    bool is_scalar() const;

    static Mat identity(const Fq& F, int n);
    static Mat scalar(const Fq& F, int n, fq_t c);
    static Mat companion(const Fq& F, const Poly& monic_poly);
    static Mat block_diag(const Mat& A, const Mat& B);

    // Row-major base-q integer encoding; requires q^(n^2) < 2^63.
    std::uint64_t encode() const;
};

Mat mul(const Mat& A, const Mat& B);
Mat mat_pow(const Mat& A, const ZZ& k);
fq_t det(const Mat& A);
int rank(const Mat& A);
bool invertible(const Mat& A);
Mat inverse(const Mat& A); // throws std::invalid_argument if singular

// Characteristic polynomial (monic, degree n) by relative Krylov spinning.
Poly char_poly(const Mat& A);

// Elementary divisors (f_i, m_i): the primary rational canonical form data.
struct ElementaryDivisors {
    std::vector<std::pair<Poly, unsigned>> divs; // canonical order
};
ElementaryDivisors invariant_factors(const Mat& A);

// lcm(ord f_1, ..., ord f_l) * p^t with p^t the least power >= max m_i.
// Rejects labels containing the factor X (singular matrices).
ZZ element_order_formula(const ElementaryDivisors& ed, const Fq& F);

// Least k >= 1 with A^k = 1, by reducing the exponent of GL(n,q).
ZZ element_order_direct(const Mat& A);

// Codimension of the largest eigenspace over the algebraic closure.
int support(const Mat& A);

// Least k >= 1 with A^k scalar.
ZZ projective_order(const Mat& A);

enum class GroupKind { GL, SL, PGL, PSL };
ZZ group_order(GroupKind kind, int n, unsigned long q);

// Exponent of GL(n,q) and its factorization (cached per (q,n)).
std::pair<ZZ, Factorization> gl_exponent(const Fq& F, int n);

// Exactly uniform samples: GL by rejection, SL by dividing row 0 of a
// uniform GL sample by its determinant.
Mat random_gl(const Fq& F, int n, Rng& rng);
Mat random_sl(const Fq& F, int n, Rng& rng);

// Enumerate GL(n,q) (or its det=1 subset) without rejection, building rows
// that avoid the span of the previous rows.
void for_each_gl(const Fq& F, int n, const std::function<void(const Mat&)>& fn,
                 std::uint64_t max_elements = 20000000);
void for_each_sl(const Fq& F, int n, const std::function<void(const Mat&)>& fn,
                 std::uint64_t max_elements = 20000000);

// Nonzero vectors of F_q^n encoded as base-q integers in [1, q^n).
std::uint32_t apply_to_point(const Mat& A, std::uint32_t v);

// Desk-scale cap on the point set for the stabilizer chain; the default of
// 100000 can be overridden with the SLGEN_MAX_POINTS environment variable.
std::uint32_t schreier_sims_point_limit();

// Exact order of <gens> via a stabilizer chain on nonzero vectors.
// max_points = 0 uses schreier_sims_point_limit().
ZZ generated_group_order(const std::vector<Mat>& gens, std::uint32_t max_points = 0);

// All elementary transvections I + c*E_ij, i != j, c != 0. They generate
// SL(n,q) for n >= 2.
std::vector<Mat> sl_transvection_generators(const Fq& F, int n);

// Brute-force conjugacy classes of GL(n,q) or SL(n,q) as element lists.
std::vector<std::vector<Mat>> conjugacy_classes_brute(const Fq& F, int n, bool sl_only,
                                                      std::uint64_t max_elements = 30000);

} // namespace slgen
