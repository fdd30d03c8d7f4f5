#ifndef QCA_POINTED_HPP
#define QCA_POINTED_HPP

#include <map>
#include <optional>
#include <string>

#include "qca/seed.hpp"
#include "qca/torus.hpp"

namespace qca {

enum class Tri { False = 0, True = 1, Unknown = 2 };

/**
 * A pointed element together with its certificate: the dominance-maximal
 * degree g (coefficient exactly 1) and the tail map n -> c_n over strictly
 * positive n, where the term at g + b n carries coefficient c_n.
 */
struct PointedElement {
    TorusElement elem;
    ExpVec degree;
    std::map<UfVec, QCoeff> tail;
};

// g1 strictly below g2 in the dominance order of the given exchange matrix:
// g1 = g2 + b n for some n >= 0, n != 0.  Exact when b has full column rank;
// otherwise decided by enumeration up to |n| <= bound, Unknown beyond it.
Tri dominance_lt_core(const IntMat& b, const ExpVec& g1, const ExpVec& g2,
                      long long bound = 64);

// Dominance in the chart of seed t.
Tri dominance_lt(const Seed& t, const ExpVec& g1, const ExpVec& g2,
                 long long bound = 64);

// Pointedness against an explicit exchange matrix (used for copointedness
// via the negated matrix).  Requires unit coefficient at the degree.
std::optional<PointedElement> try_pointed_core(const TorusElement& a,
                                               const IntMat& b,
                                               long long bound = 64);

std::optional<PointedElement> try_pointed(const TorusElement& a,
                                          long long bound = 64);

// As try_pointed but throws NotPointedError with a reason.
PointedElement as_pointed(const TorusElement& a);

// Scales a by v^-k so the coefficient at its dominance-maximal exponent
// becomes 1; that exponent must carry a single power of v.
PointedElement normalize_pointed(const TorusElement& a);

// Scales a by v^-k so the coefficient at the given exponent g becomes 1.
TorusElement normalize_at(const TorusElement& a, const ExpVec& g);

// Copointedness: pointedness with the exchange matrix negated.
std::optional<PointedElement> copointed(const TorusElement& a);

struct SignCoherenceReport {
    bool ok = true;
    IntMat degree_matrix;  // row per unfrozen coordinate, column per unfrozen variable
    int witness_coord = -1;
    std::string detail;
};

// Degrees of the target seed's unfrozen variables (in the home chart), with
// a row-wise sign coherence check: each unfrozen coordinate must carry the
// same sign across all of the seed's unfrozen variables.
SignCoherenceReport check_sign_coherence(const Seed& target);

}  // namespace qca

#endif
