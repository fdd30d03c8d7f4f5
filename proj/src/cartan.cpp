#include "qca/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "qca/error.hpp"

namespace qca {

namespace {

using RootVec = std::vector<long long>;

// s_i(beta) = beta - (sum_j a_ij beta_j) alpha_i on simple-root coordinates.
RootVec reflect(const IntMat& a, int i, const RootVec& beta) {
    long long pair = 0;
    for (int j = 0; j < a.cols; ++j) pair += a.at(i, j) * beta[j];
    RootVec r = beta;
    r[i] -= pair;
    return r;
}

bool is_negative_root(const RootVec& b) {
    for (long long x : b)
        if (x < 0) return true;
    return false;
}

// All roots when the closure stabilizes within the cap, empty otherwise.
std::vector<RootVec> root_closure(const CartanData& c, int cap) {
    int r = c.rank();
    std::set<RootVec> roots;
    std::vector<RootVec> frontier;
    for (int i = 0; i < r; ++i) {
        RootVec a(r, 0), na(r, 0);
        a[i] = 1;
        na[i] = -1;
        roots.insert(a);
        roots.insert(na);
        frontier.push_back(a);
        frontier.push_back(na);
    }
    while (!frontier.empty()) {
        if ((int)roots.size() > 2 * cap) return {};
        std::vector<RootVec> next;
        for (const RootVec& b : frontier)
            for (int i = 0; i < r; ++i) {
                RootVec g = reflect(c.a, i, b);
                if (roots.insert(g).second) next.push_back(g);
            }
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};
}

}  // namespace

CartanData make_cartan(IntMat a) {
    if (a.rows != a.cols || a.rows == 0)
        throw InputError("Cartan matrix must be square and nonempty");
    int r = a.rows;
    for (int i = 0; i < r; ++i) {
        if (a.at(i, i) != 2)
            throw InputError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (a.at(i, j) > 0)
                throw InputError("off-diagonal Cartan entries must be <= 0");
            if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
                throw InputError("Cartan zeros must come in symmetric pairs");
        }
    }

    // Weights along the graph satisfy d_j = d_i * a_ij / a_ji; propagate per
    // component and check consistency on every edge.
    std::vector<mpq_class> w(r, 0);
    std::vector<int> comp(r, -1);
    int ncomp = 0;
    for (int start = 0; start < r; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = ncomp;
        w[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < r; ++j) {
                if (i == j || a.at(i, j) == 0) continue;
                mpq_class wj = w[i] * static_cast<long>(a.at(i, j)) /
                               static_cast<long>(a.at(j, i));
                if (comp[j] < 0) {
                    comp[j] = ncomp;
                    w[j] = wj;
                    stack.push_back(j);
                } else if (w[j] != wj) {
                    throw InputError("Cartan matrix is not symmetrizable");
                }
            }
        }
        ++ncomp;
    }
    // Scale each component to coprime positive integers.
    for (int cpt = 0; cpt < ncomp; ++cpt) {
        mpz_class l = 1;
        for (int i = 0; i < r; ++i)
            if (comp[i] == cpt) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        w[i].get_den().get_mpz_t());
        mpz_class g = 0;
        for (int i = 0; i < r; ++i)
            if (comp[i] == cpt) {
                w[i] *= l;
                w[i].canonicalize();
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_num().get_mpz_t());
            }
        for (int i = 0; i < r; ++i)
            if (comp[i] == cpt) w[i] /= g;
    }
    CartanData c;
    c.a = std::move(a);
    c.d.resize(r);
    for (int i = 0; i < r; ++i) {
        if (w[i] <= 0 || w[i].get_den() != 1)
            throw InternalError("symmetrizer scaling failed");
        c.d[i] = (long long)w[i].get_num().get_si();
    }
    return c;
}

CartanData cartan_named(const std::string& name) {
    auto grid = [](std::vector<std::vector<long long>> rows) {
        IntMat m((int)rows.size(), (int)rows[0].size());
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
        return m;
    };
    if (name == "A1") return make_cartan(grid({{2}}));
    if (name == "A2") return make_cartan(grid({{2, -1}, {-1, 2}}));
    if (name == "A3")
        return make_cartan(grid({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    if (name == "B2") return make_cartan(grid({{2, -1}, {-2, 2}}));
    if (name == "C2") return make_cartan(grid({{2, -2}, {-1, 2}}));
    if (name == "G2") return make_cartan(grid({{2, -1}, {-3, 2}}));
    throw InputError("unknown Cartan matrix name: " + name);
}

std::optional<int> finite_positive_roots(const CartanData& c, int cap) {
    std::vector<RootVec> roots = root_closure(c, cap);
    if (roots.empty()) return std::nullopt;
    int pos = 0;
    for (const RootVec& b : roots)
        if (!is_negative_root(b)) ++pos;
    return pos;
}

int weyl_length(const CartanData& c, const std::vector<int>& word) {
    for (int l : word)
        if (l < 1 || l > c.rank())
            throw InputError("word letter out of range");
    std::vector<RootVec> roots = root_closure(c, 400);
    if (roots.empty())
        throw InputError("length counting needs a finite root system");
    int len = 0;
    for (const RootVec& b : roots) {
        if (is_negative_root(b)) continue;
        RootVec img = b;
        for (int p = (int)word.size() - 1; p >= 0; --p)
            img = reflect(c.a, word[p] - 1, img);
        if (is_negative_root(img)) ++len;
    }
    return len;
}

bool validate_reduced(const CartanData& c, const std::vector<int>& word) {
    return weyl_length(c, word) == (int)word.size();
}

Seed seed_from_word(const CartanData& c, const std::vector<int>& word) {
    if (word.empty()) throw InputError("empty word");
    if (!validate_reduced(c, word)) throw InputError("word is not reduced");
    int r = (int)word.size();

    // succ[p]: next position with the same letter, r as the infinity sentinel.
    std::vector<int> succ(r, r);
    for (int p = 0; p < r; ++p)
        for (int l = p + 1; l < r; ++l)
            if (word[l] == word[p]) {
                succ[p] = l;
                break;
            }

    std::vector<int> unfrozen;
    std::vector<std::string> names;
    for (int p = 0; p < r; ++p) {
        if (succ[p] < r) unfrozen.push_back(p);
        names.push_back(std::to_string(p + 1));
    }
    if (unfrozen.empty())
        throw InputError("word yields no unfrozen vertices");

    IntMat b(r, (int)unfrozen.size());
    for (int ct = 0; ct < (int)unfrozen.size(); ++ct) {
        int t = unfrozen[ct];
        for (int s = 0; s < r; ++s) {
            if (s == t) continue;
            long long e = 0;
            if (word[s] == word[t]) {
                if (succ[s] == t)
                    e = 1;
                else if (succ[t] == s)
                    e = -1;
            } else {
                long long ast = c.a.at(word[s] - 1, word[t] - 1);
                if (s < t && t < succ[s] && succ[s] <= succ[t])
                    e = ast;
                else if (t < s && s < succ[t] && succ[t] <= succ[s])
                    e = -ast;
            }
            b.at(s, ct) = e;
        }
    }

    IntMat lambda = quantize(b, unfrozen);
    return make_root_seed(std::move(names), std::move(unfrozen), std::move(b),
                          std::move(lambda));
}

}  // namespace qca
