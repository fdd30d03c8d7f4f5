#ifndef QCA_SEED_HPP
#define QCA_SEED_HPP

#include <string>
#include <vector>

#include "qca/torus.hpp"

namespace qca {

/**
 * A seed: vertex set with frozen/unfrozen split, exchange matrix b
 * (I x I_uf), compatible skew form lambda, and one cluster variable per
 * vertex.  The matrices describe this seed's own chart; the variables are
 * stored as expansions in the torus of the root seed the engine started
 * from (the `home` context).  Seeds are labeled by the mutation word that
 * produced them; no isomorphism detection is attempted.
 */
struct Seed {
    std::vector<std::string> names;
    std::vector<int> unfrozen;  // ascending vertex indices
    IntMat b;
    IntMat lambda;
    CtxPtr home;
    std::vector<TorusElement> vars;
    std::vector<int> word;

    int nvert() const { return static_cast<int>(names.size()); }
    int nuf() const { return static_cast<int>(unfrozen.size()); }
    bool is_unfrozen(int v) const { return uf_col(v) >= 0; }
    // Column of vertex v in b, or -1 if frozen.
    int uf_col(int v) const;
    int vertex_by_name(const std::string& name) const;  // -1 if absent
};

// Checks the compatible-pair condition sum_i b_ik lambda_ij = delta_kj d_k
// and returns the positive diagonal d (one entry per unfrozen vertex).
// Throws SeedError naming the first failing (k, j) pair.
std::vector<long long> compatibility_diag(const IntMat& b, const IntMat& lambda,
                                          const std::vector<int>& unfrozen);
std::vector<long long> validate(const Seed& t);

// Finds an integer skew-symmetric lambda compatible with b, if one exists
// (requires b of full column rank).  Deterministic small-coefficient search
// over the integer kernel of the linear compatibility constraints.
IntMat quantize(const IntMat& b, const std::vector<int>& unfrozen);

Seed make_root_seed(std::vector<std::string> names, std::vector<int> unfrozen,
                    IntMat b, IntMat lambda);

// Exchange-matrix mutation at unfrozen vertex k, without touching variables.
IntMat mutate_b(const IntMat& b, const std::vector<int>& unfrozen, int k);

// Fresh root seed on this seed's chart matrices (variables become the unit
// monomials of a new engine rooted here).
Seed as_root(const Seed& t);

// Seed mutation at unfrozen vertex k: exchange matrix by the standard rule,
// lambda conjugated by the elementary matrix for both sign choices (asserted
// equal), the k-th variable replaced via the exchange relation.
Seed mutate(const Seed& t, int k);

// Applies the letters first to last: apply_sequence(t, {1,2}) mutates at
// vertex 1 first, then at vertex 2.
Seed apply_sequence(const Seed& t, const std::vector<int>& word);

// Normalized product of the seed's variables with exponents m (localized:
// frozen entries may be negative, unfrozen must be >= 0).
TorusElement cluster_monomial(const Seed& t, const ExpVec& m);

// Content equality ignoring the word label.
bool same_seed_content(const Seed& a, const Seed& b);

// Serialization of the full seed content, used as a dedup key in searches.
std::string seed_key(const Seed& t);

}  // namespace qca

#endif
