#include "slgen/harmonic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slgen {

namespace {

std::string group_name(GroupKind kind, int n, unsigned long q) {
    const char* k = kind == GroupKind::GL    ? "GL"
                    : kind == GroupKind::SL  ? "SL"
                    : kind == GroupKind::PGL ? "PGL"
                                             : "PSL";
    std::ostringstream os;
    os << k << "(" << n << "," << q << ")";
    return os.str();
}

} // namespace

QQ eta_cyclic(const ZZ& n) {
    if (n < 1) throw std::invalid_argument("eta_cyclic: n must be >= 1");
    Factorization fact = factorize(n);
    std::vector<std::pair<ZZ, ZZ>> divs{{ZZ(1), ZZ(1)}}; // (d, phi(d))
    for (const auto& [p, e] : fact.prime_powers) {
        std::size_t base = divs.size();
        ZZ pk = 1, phik = 1;
        for (unsigned i = 1; i <= e; ++i) {
            phik = (i == 1) ? ZZ(p - 1) : phik * p;
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.emplace_back(divs[j].first * pk, divs[j].second * phik);
        }
    }
    QQ s = 0;
    for (const auto& [d, phi] : divs) s += make_q(phi, d);
    return s / QQ(n);
}

EtaReport eta_bruteforce(GroupKind kind, int n, const Fq& F, std::uint64_t max_elements) {
    if (kind != GroupKind::GL && kind != GroupKind::SL)
        throw std::invalid_argument("eta_bruteforce: kind must be GL or SL");
    QQ sum = 0;
    std::uint64_t count = 0;
    auto visit = [&](const Mat& g) {
        sum += make_q(1, element_order_direct(g));
        ++count;
    };
    if (kind == GroupKind::GL)
        for_each_gl(F, n, visit, max_elements);
    else
        for_each_sl(F, n, visit, max_elements);
    return {group_name(kind, n, F.q()), kind,    n, F.q(), sum / QQ(ZZ(count)),
            "brute",                    ZZ(count)};
}

EtaReport eta_classbased(int n, const Fq& F) {
    QQ sum = 0;
    ZZ nlabels = 0;
    enumerate_class_labels(F, n, [&](const ClassLabel& label) {
        sum += make_q(1, centralizer_order(label, F) * class_order(label, F));
        ++nlabels;
    });
    return {group_name(GroupKind::GL, n, F.q()),
            GroupKind::GL,
            n,
            F.q(),
            sum,
            "class-based",
            group_order(GroupKind::GL, n, F.q())};
}

EtaReport eta_projective_bruteforce(GroupKind kind, int n, const Fq& F,
                                    std::uint64_t max_elements) {
    if (kind != GroupKind::PGL && kind != GroupKind::PSL)
        throw std::invalid_argument("eta_projective_bruteforce: kind must be PGL or PSL");
    QQ sum = 0;
    std::uint64_t count = 0;
    auto visit = [&](const Mat& g) {
        sum += make_q(1, projective_order(g));
        ++count;
    };
    if (kind == GroupKind::PGL)
        for_each_gl(F, n, visit, max_elements);
    else
        for_each_sl(F, n, visit, max_elements);
    return {group_name(kind, n, F.q()), kind, n, F.q(), sum / QQ(ZZ(count)), "projective-brute",
            ZZ(count)};
}

std::vector<BoundCurveRow> bound_curve(int n_min, int n_max, const Fq& F) {
    std::vector<BoundCurveRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        QQ eta = eta_classbased(n, F).eta;
        double ev = mpq_get_d(eta.get_mpq_t());
        double mle = -std::log(ev);
        double thr = 2.0 * std::sqrt(double(n) * std::log(double(n)) * std::log(double(F.q())));
        rows.push_back({n, F.q(), eta, mle, thr, thr > 0 ? mle / thr : 0.0});
    }
    return rows;
}

} // namespace slgen
