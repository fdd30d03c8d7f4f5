#ifndef QCA_TESTS_UTIL_HPP
#define QCA_TESTS_UTIL_HPP

#include <map>
#include <random>
#include <vector>

#include "qca/error.hpp"
#include "qca/seed.hpp"

namespace qca::testing {

inline IntMat grid(std::vector<std::vector<long long>> rows) {
    IntMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Rank-one seed with two frozen vertices: B = (0,1,-1)^T, d = (1).
inline Seed sl3_seed() {
    return make_root_seed({"1", "2", "3"}, {0}, grid({{0}, {1}, {-1}}),
                          grid({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
}

// Rank-two seed without frozen vertices: B = [[0,1],[-1,0]], d = (1,1).
inline Seed a2_seed() {
    return make_root_seed({"1", "2"}, {0, 1}, grid({{0, 1}, {-1, 0}}),
                          grid({{0, 1}, {-1, 0}}));
}

// Random compatible seed: skew principal block, arbitrary frozen rows,
// lambda found by quantize().  Retries until the search succeeds.
inline Seed random_seed(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(2, 4);
    std::uniform_int_distribution<long long> entry(-2, 2);
    for (;;) {
        int n = nv(rng);
        std::uniform_int_distribution<int> nu(1, n);
        int nuf = nu(rng);
        std::vector<int> unfrozen;
        for (int i = 0; i < nuf; ++i) unfrozen.push_back(i);
        IntMat b(n, nuf);
        for (int c = 0; c < nuf; ++c)
            for (int r = c + 1; r < nuf; ++r) {
                long long x = entry(rng);
                b.at(r, c) = x;
                b.at(c, r) = -x;
            }
        for (int r = nuf; r < n; ++r)
            for (int c = 0; c < nuf; ++c) b.at(r, c) = entry(rng);
        if (!full_column_rank(b)) continue;
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
        try {
            IntMat lambda = quantize(b, unfrozen);
            return make_root_seed(names, unfrozen, b, lambda);
        } catch (const SeedError&) {
            continue;
        } catch (const InputError&) {
            continue;
        }
    }
}

// Coefficients at v = 1 (the classical specialization).
inline std::map<ExpVec, Zint> classical(const TorusElement& a) {
    std::map<ExpVec, Zint> out;
    for (const auto& [m, c] : a.terms()) {
        Zint z = c.at_one();
        if (z != 0) out[m] = z;
    }
    return out;
}

}  // namespace qca::testing

#endif
