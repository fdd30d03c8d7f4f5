#include "qca/seed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qca/error.hpp"
#include "qca/pointed.hpp"

namespace qca {

int Seed::uf_col(int v) const {
    for (size_t c = 0; c < unfrozen.size(); ++c)
        if (unfrozen[c] == v) return static_cast<int>(c);
    return -1;
}

int Seed::vertex_by_name(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<long long> compatibility_diag(const IntMat& b, const IntMat& lambda,
                                          const std::vector<int>& unfrozen) {
    if (b.rows != lambda.rows || lambda.rows != lambda.cols)
        throw SeedError("shape mismatch between B and Lambda");
    if (b.cols != static_cast<int>(unfrozen.size()))
        throw SeedError("B must have one column per unfrozen vertex");
    IntMat p = b.transposed() * lambda;  // I_uf x I
    std::vector<long long> d(unfrozen.size());
    for (int k = 0; k < p.rows; ++k) {
        for (int j = 0; j < p.cols; ++j) {
            if (j == unfrozen[k]) continue;
            if (p.at(k, j) != 0) {
                std::ostringstream os;
                os << "compatibility fails at unfrozen vertex " << unfrozen[k]
                   << ", column " << j << ": got " << p.at(k, j) << ", expected 0";
                throw SeedError(os.str());
            }
        }
        d[k] = p.at(k, unfrozen[k]);
        if (d[k] <= 0) {
            std::ostringstream os;
            os << "compatibility fails at unfrozen vertex " << unfrozen[k]
               << ": diagonal entry " << d[k] << " is not positive";
            throw SeedError(os.str());
        }
    }
    return d;
}

std::vector<long long> validate(const Seed& t) {
    return compatibility_diag(t.b, t.lambda, t.unfrozen);
}

IntMat quantize(const IntMat& b, const std::vector<int>& unfrozen) {
    int n = b.rows;
    int nuf = b.cols;
    if (nuf != static_cast<int>(unfrozen.size()))
        throw InputError("quantize: B must have one column per unfrozen vertex");
    if (nuf == 0) return IntMat(n, n);

    // Unknowns: lambda_ij for i<j (skew fills the rest), then d_k.
    int npairs = n * (n - 1) / 2;
    auto pair_index = [n](int i, int j) {
        // i < j
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    IntMat A(nuf * n, npairs + nuf);
    for (int k = 0; k < nuf; ++k) {
        for (int j = 0; j < n; ++j) {
            long long* row = &A.at(k * n + j, 0);
            for (int i = 0; i < n; ++i) {
                long long bik = b.at(i, k);
                if (bik == 0 || i == j) continue;
                if (i < j)
                    row[pair_index(i, j)] += bik;
                else
                    row[pair_index(j, i)] -= bik;
            }
            if (j == unfrozen[k]) row[npairs + k] -= 1;
        }
    }
    auto basis = kernel_basis_integer(A);
    int dim = static_cast<int>(basis.size());
    if (dim == 0) throw SeedError("quantize: no compatible Lambda exists");

    auto build = [&](const std::vector<long long>& sol) {
        IntMat lambda(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                lambda.at(i, j) = sol[pair_index(i, j)];
                lambda.at(j, i) = -sol[pair_index(i, j)];
            }
        return lambda;
    };

    // Deterministic search for a combination with all d_k positive, smallest
    // coefficient shells first.
    std::vector<long long> combo(dim, 0);
    std::vector<long long> sol(npairs + nuf, 0);
    std::function<bool(int, long long)> search = [&](int pos, long long cap) {
        if (pos == dim) {
            for (int j = 0; j < npairs + nuf; ++j) {
                sol[j] = 0;
                for (int i = 0; i < dim; ++i) sol[j] += combo[i] * basis[i][j];
            }
            for (int k = 0; k < nuf; ++k)
                if (sol[npairs + k] < 1) return false;
            return true;
        }
        for (long long c = -cap; c <= cap; ++c) {
            combo[pos] = c;
            if (search(pos + 1, cap)) return true;
        }
        combo[pos] = 0;
        return false;
    };
    bool found = false;
    for (long long cap = 1; cap <= 6 && !found; ++cap) found = search(0, cap);
    if (!found)
        throw SeedError("quantize: no compatible Lambda found "
                        "(B may not have full column rank)");

    long long g = 0;
    for (long long x : sol) g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : sol) x /= g;
    IntMat lambda = build(sol);
    compatibility_diag(b, lambda, unfrozen);
    return lambda;
}

Seed make_root_seed(std::vector<std::string> names, std::vector<int> unfrozen,
                    IntMat b, IntMat lambda) {
    int n = static_cast<int>(names.size());
    if (b.rows != n || lambda.rows != n)
        throw InputError("seed matrices do not match the vertex count");
    if (!std::is_sorted(unfrozen.begin(), unfrozen.end()))
        throw InputError("unfrozen indices must be ascending");
    compatibility_diag(b, lambda, unfrozen);
    Seed t;
    t.names = std::move(names);
    t.unfrozen = std::move(unfrozen);
    t.b = b;
    t.lambda = lambda;
    t.home = make_context(std::move(lambda), std::move(b), t.unfrozen);
    t.vars.reserve(n);
    for (int i = 0; i < n; ++i) {
        ExpVec f(n, 0);
        f[i] = 1;
        t.vars.push_back(TorusElement::monomial(t.home, std::move(f)));
    }
    return t;
}

Seed as_root(const Seed& t) {
    return make_root_seed(t.names, t.unfrozen, t.b, t.lambda);
}

namespace {
long long pos_part(long long x) { return x > 0 ? x : 0; }

IntMat mutation_sign_matrix(const Seed& t, int k, int kc, int eps) {
    IntMat e = IntMat::identity(t.nvert());
    for (int i = 0; i < t.nvert(); ++i)
        e.at(i, k) = (i == k) ? -1 : pos_part(-eps * t.b.at(i, kc));
    return e;
}
}  // namespace

IntMat mutate_b(const IntMat& b, const std::vector<int>& unfrozen, int k) {
    int kc = -1;
    for (int c = 0; c < (int)unfrozen.size(); ++c)
        if (unfrozen[c] == k) kc = c;
    if (kc < 0) throw InputError("mutation at frozen or unknown vertex");
    IntMat r(b.rows, b.cols);
    for (int i = 0; i < b.rows; ++i)
        for (int jc = 0; jc < b.cols; ++jc) {
            long long bij = b.at(i, jc);
            if (i == k || unfrozen[jc] == k)
                r.at(i, jc) = -bij;
            else
                r.at(i, jc) = bij + pos_part(b.at(i, kc)) * b.at(k, jc) +
                              b.at(i, kc) * pos_part(-b.at(k, jc));
        }
    return r;
}

Seed mutate(const Seed& t, int k) {
    int kc = t.uf_col(k);
    if (kc < 0) throw InputError("mutation at frozen or unknown vertex");
    int n = t.nvert();

    Seed s;
    s.names = t.names;
    s.unfrozen = t.unfrozen;
    s.home = t.home;
    s.word = t.word;
    s.word.push_back(k);

    s.b = mutate_b(t.b, t.unfrozen, k);

    IntMat ep = mutation_sign_matrix(t, k, kc, +1);
    IntMat em = mutation_sign_matrix(t, k, kc, -1);
    IntMat lp = ep.transposed() * t.lambda * ep;
    IntMat lm = em.transposed() * t.lambda * em;
    if (!(lp == lm))
        throw InternalError("Lambda mutation disagrees between sign choices");
    s.lambda = lp;

    // Exchange relation.  The two exchange exponents A and C carry -1 at k;
    // neither one is Laurent in the home torus on its own, so the engine
    // forms the correctly twisted sum of the positive parts and divides by
    // X_k(t) afterwards.
    ExpVec ek(n, 0), fa(n, 0), fc(n, 0);
    ek[k] = 1;
    for (int i = 0; i < n; ++i) {
        fa[i] = pos_part(t.b.at(i, kc));
        fc[i] = pos_part(-t.b.at(i, kc));
    }
    ExpVec a = sub_vec(fa, ek), c = sub_vec(fc, ek);
    TorusElement p1 = cluster_monomial(t, fa);
    TorusElement p2 = cluster_monomial(t, fc);
    TorusElement dividend =
        p1.scaled(QCoeff::v_pow(lambda_form(t.lambda, ek, a))) +
        p2.scaled(QCoeff::v_pow(lambda_form(t.lambda, ek, c)));
    TorusElement fresh = exact_divide(dividend, t.vars[k]);
    if (!fresh.bar_invariant())
        throw InternalError("exchange produced a non-bar-invariant variable");

    s.vars = t.vars;
    s.vars[k] = std::move(fresh);
    return s;
}

Seed apply_sequence(const Seed& t, const std::vector<int>& word) {
    Seed s = t;
    for (int k : word) s = mutate(s, k);
    return s;
}

TorusElement cluster_monomial(const Seed& t, const ExpVec& m) {
    if (static_cast<int>(m.size()) != t.nvert())
        throw InputError("cluster_monomial: exponent length mismatch");
    TorusElement acc = TorusElement::monomial(t.home, ExpVec(t.nvert(), 0));
    for (int i = 0; i < t.nvert(); ++i) {
        if (m[i] == 0) continue;
        if (m[i] < 0) {
            if (t.is_unfrozen(i))
                throw InputError("cluster_monomial: negative unfrozen exponent");
            ExpVec f(t.nvert(), 0);
            f[i] = m[i];
            acc = acc * TorusElement::monomial(t.home, std::move(f));
        } else {
            acc = acc * t.vars[i].pow(m[i]);
        }
    }
    return normalize_pointed(acc).elem;
}

bool same_seed_content(const Seed& a, const Seed& b) {
    return a.names == b.names && a.unfrozen == b.unfrozen && a.b == b.b &&
           a.lambda == b.lambda && a.vars == b.vars;
}

std::string seed_key(const Seed& t) {
    std::ostringstream os;
    os << t.b.str() << "|" << t.lambda.str();
    for (auto& v : t.vars) os << "|" << v.str();
    return os.str();
}

}  // namespace qca
