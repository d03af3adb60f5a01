#pragma once

#include <string>
#include <vector>

#include "slgen/classes.hpp"

namespace slgen {

struct EtaReport {
    std::string group; // e.g. "GL(3,2)"
    GroupKind kind;
    int n;
    unsigned long q;
    QQ eta;
    std::string method; // brute | class-based | projective-brute | cyclic-formula
    ZZ element_count;
};

// eta of the cyclic group C_n: (1/n) sum_{d|n} phi(d)/d.
QQ eta_cyclic(const ZZ& n);

EtaReport eta_bruteforce(GroupKind kind, int n, const Fq& F,
                         std::uint64_t max_elements = 20000000);
EtaReport eta_classbased(int n, const Fq& F);
// kind PGL averages 1/ord_PGL over GL; kind PSL averages over SL. Quotient
// fibers are equinumerous, so this equals eta of the quotient group.
EtaReport eta_projective_bruteforce(GroupKind kind, int n, const Fq& F,
                                    std::uint64_t max_elements = 20000000);

struct BoundCurveRow {
    int n;
    unsigned long q;
    QQ eta;
    double minus_log_eta;
    double threshold; // 2 sqrt(n log n log q)
    double ratio;     // minus_log_eta / threshold (0 when threshold is 0)
};
std::vector<BoundCurveRow> bound_curve(int n_min, int n_max, const Fq& F);

} // namespace slgen
