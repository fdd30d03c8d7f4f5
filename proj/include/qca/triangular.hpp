#ifndef QCA_TRIANGULAR_HPP
#define QCA_TRIANGULAR_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qca/pointed.hpp"
#include "qca/seed.hpp"

namespace qca {

/**
 * The companion chart t[1] of a root seed: a mutation word reaching it, the
 * column permutation sigma matching root vertices to t[1] vertices, and for
 * every unfrozen column c the element I_c := X_sigma(c)(t[1]) expanded in the
 * root chart.  I_c is pointed with unfrozen degree -e_c.
 */
struct InjectiveReach {
    std::vector<int> word;
    std::vector<int> sigma;           // uf column c -> vertex of t[1]
    Seed t1;                          // reached seed, same engine as the root
    std::vector<PointedElement> inj;  // per uf column
};

// Breadth-first search (shortest word, vertices in ascending order) for a
// seed whose unfrozen variables have unfrozen degrees {-e_c}, up to
// max_depth mutations.
std::optional<InjectiveReach> find_t1(const Seed& root, int max_depth = 8);

// The distinguished pointed function of degree g: frozen shift times
// X^([g]_+ on unfrozen) times prod_c I_c^([-g_c]_+), normalized.
PointedElement distinguished(const Seed& root, const InjectiveReach& reach,
                             const ExpVec& g);

// Looks up the family member pointed at a degree; null when absent.
using FamilyLookup = std::function<const PointedElement*(const ExpVec&)>;

struct DecompResult {
    std::map<ExpVec, QCoeff> coeff;  // degree -> coefficient
    bool exact = true;               // false when terms were dropped at the bound
};

/**
 * Greedy decomposition of z over a pointed family: repeatedly subtracts
 * coeff * family(g') at a dominance-maximal degree g' of the remainder.
 * Terms of tail order >= order_bound against z's degree are dropped (and
 * the result marked inexact).  Throws DecompositionError when the family
 * lacks a needed degree.
 */
DecompResult pointed_decompose(const PointedElement& z,
                               const FamilyLookup& family,
                               long long order_bound);

struct TriFunction {
    PointedElement f;
    std::map<UfVec, QCoeff> corrections;  // n -> c_n, n != 0, c_n in m
    bool exact = true;                    // certified complete, not truncated
};

/**
 * The triangular function of degree g by the truncated bar-recursion over
 * the distinguished family on the window {g + b n : |n| < order}: processes
 * n by increasing |n|, solves c_n - bar(c_n) = h_n in the ideal m, and
 * assembles f_g = sum c_n inj_{g+bn}.  When the assembled element is exactly
 * bar-invariant and pointed it is certified complete; otherwise it is
 * truncated at the order.  Every call recomputes at twice the order and
 * requires agreement on the common window.  alt_order only permutes the
 * processing of equal |n| (the result must not depend on it).
 */
TriFunction kl_triangular(const Seed& root, const InjectiveReach& reach,
                          const ExpVec& g, long long order,
                          bool alt_order = false);

struct TriFamily {
    std::vector<ExpVec> window;
    long long order = 0;
    std::map<ExpVec, TriFunction> fns;
    InjectiveReach reach;
};

TriFamily build_family(const Seed& root, const InjectiveReach& reach,
                       const std::vector<ExpVec>& window, long long order);

// All g with every |g_i| <= radius, ascending lex.
std::vector<ExpVec> box_window(int n, long long radius);

struct CheckReport {
    bool ok = true;
    int checked = 0;
    int skipped = 0;
    std::string detail;  // first failure witness
};

// Axioms on the family: (a) bar-invariance of every member, (b) expansions
// of X_i * f_g over the family have unit lead and lower coefficients in m,
// (c) localized cluster monomials of the root chart and of t[1] whose degree
// lies in the window coincide with the family member of that degree.
CheckReport verify_triangular_basis(const Seed& root, const TriFamily& fam);

// Powers of the adjacent-chart variables X_k(t')^d and I_k(t')^d (d <= dmax)
// whose degrees land in the window must be family members.
CheckReport verify_admissible(const Seed& root, const TriFamily& fam, int k,
                              int dmax = 3, int depth = 8);

// Rewrites every certified family member into the chart of mu_k(root),
// checks its degree there against the tropical rule, and decomposes it over
// the distinguished family of that chart: unit lead, rest in m.
CheckReport verify_compatibility(const Seed& root, const TriFamily& fam,
                                 int k, long long order, int depth = 8);

// z must be pointed and copointed like X_k(mu_k root)^d, supported on the
// exchange segment {g + j b e_k : 0 <= j <= d} with matching coefficients.
CheckReport verify_copointed_rigidity(const TorusElement& z, const Seed& root,
                                      int k, int d);

/**
 * Coefficient transfer between similar seeds: tau maps source unfrozen
 * columns to target unfrozen vertices so the principal exchange blocks
 * match.  Each family member's tail coefficients are copied verbatim onto
 * the target's monomials; results are checked bar-invariant and pointed.
 */
std::map<ExpVec, TorusElement> transfer_similar(const TriFamily& fam,
                                                const Seed& source_root,
                                                const Seed& target_root,
                                                const std::vector<int>& tau);

}  // namespace qca

#endif
