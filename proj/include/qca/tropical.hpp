#ifndef QCA_TROPICAL_HPP
#define QCA_TROPICAL_HPP

#include <string>
#include <vector>

#include "qca/pointed.hpp"
#include "qca/seed.hpp"

namespace qca {

// Exchange-matrix mutation alone (no variables), for walking charts cheaply.
IntMat mutate_b(const IntMat& b, const std::vector<int>& unfrozen, int k);

/**
 * Piecewise-linear transport of a degree vector from the chart of t to the
 * chart of mu_k(t):
 *
 *   g'[k] = -g[k]
 *   g'[i] = g[i] + [ b[i][k]]_+ * g[k]   when g[k] >= 0
 *   g'[i] = g[i] + [-b[i][k]]_+ * g[k]   when g[k] <  0
 *
 * The sign convention is pinned by the degree oracle: transported degrees of
 * cluster monomials must match degrees computed directly in the target
 * chart (compatibly_pointed cross-checks this on every walk).
 */
ExpVec phi_step(const Seed& t, int k, const ExpVec& g);

// Composite transport along a mutation word (leftmost letter first).
ExpVec phi_path(const Seed& t, const std::vector<int>& word, const ExpVec& g);

/**
 * Rewrites z, expressed in the chart of the root seed, as an element of the
 * chart of mu_k(root).  Multiplies by a power of the new variable to clear
 * its inverse powers, peels leading terms against the adjacent chart's
 * monomials, then shifts the power back.  Throws DivisionError when z is
 * not a Laurent polynomial in the target chart.
 */
TorusElement rechart_adjacent(const TorusElement& z, const Seed& root, int k);

struct TransportReport {
    bool ok = true;
    std::vector<ExpVec> degrees;  // degree of z in each chart along the word
    std::string detail;
};

// Walks z through the charts along the word, recording its degree at every
// seed and cross-checking each step against phi_step.  z must be exact.
TransportReport compatibly_pointed(const TorusElement& z, const Seed& root,
                                   const std::vector<int>& word);

}  // namespace qca

#endif
