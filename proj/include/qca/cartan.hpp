#ifndef QCA_CARTAN_HPP
#define QCA_CARTAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qca/seed.hpp"

namespace qca {

// A symmetrizable generalized Cartan matrix with a chosen minimal positive
// integer symmetrizer: d[i] * a[i][j] == d[j] * a[j][i].
struct CartanData {
    IntMat a;
    std::vector<long long> d;

    int rank() const { return a.rows; }
};

// Validates the matrix (2 on the diagonal, nonpositive off it, zeros paired)
// and computes a symmetrizer, throwing InputError when none exists.
CartanData make_cartan(IntMat a);

// Built-in matrices: "A1", "A2", "A3", "B2", "C2", "G2".
CartanData cartan_named(const std::string& name);

// Number of positive roots when the root system closes up within the cap;
// nullopt for infinite (or too large) type.
std::optional<int> finite_positive_roots(const CartanData& c, int cap = 400);

// Coxeter length of the word's product, counted by inverted positive roots.
// Requires finite type.
int weyl_length(const CartanData& c, const std::vector<int>& word);

// True when the word (1-based letters) is a reduced expression.
bool validate_reduced(const CartanData& c, const std::vector<int>& word);

/**
 * Seed attached to a reduced word i_1..i_r: one vertex per position, a
 * position frozen when its letter never repeats later, exchange entries from
 * the successor and interleaving rules, and a compatible lambda found by
 * quantize().  Vertex names are the 1-based positions "1".."r".
 */
Seed seed_from_word(const CartanData& c, const std::vector<int>& word);

}  // namespace qca

#endif
