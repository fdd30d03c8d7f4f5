#include "qca/tropical.hpp"

#include <algorithm>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

long long pos_part(long long x) { return x > 0 ? x : 0; }

std::string vec_str(const ExpVec& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

ExpVec phi_step_core(const IntMat& b, const std::vector<int>& unfrozen, int k,
                     const ExpVec& g) {
    if ((int)g.size() != b.rows)
        throw InputError("degree vector has wrong length");
    int kc = -1;
    for (int c = 0; c < (int)unfrozen.size(); ++c)
        if (unfrozen[c] == k) kc = c;
    if (kc < 0) throw InputError("tropical step at frozen or unknown vertex");
    ExpVec r = g;
    long long gk = g[k];
    r[k] = -gk;
    for (int i = 0; i < b.rows; ++i) {
        if (i == k) continue;
        r[i] += (gk >= 0 ? pos_part(b.at(i, kc)) : pos_part(-b.at(i, kc))) * gk;
    }
    return r;
}

}  // namespace

ExpVec phi_step(const Seed& t, int k, const ExpVec& g) {
    return phi_step_core(t.b, t.unfrozen, k, g);
}

ExpVec phi_path(const Seed& t, const std::vector<int>& word, const ExpVec& g) {
    IntMat b = t.b;
    ExpVec cur = g;
    for (int k : word) {
        cur = phi_step_core(b, t.unfrozen, k, cur);
        b = mutate_b(b, t.unfrozen, k);
    }
    return cur;
}

TorusElement rechart_adjacent(const TorusElement& z, const Seed& root, int k) {
    if (z.trunc()) throw TruncationError("rechart requires an exact element");
    const CtxPtr& home = root.home;
    if (!z.ctx() || !(*z.ctx() == *home))
        throw InputError("element is not expressed in the root's chart");

    Seed s1 = mutate(root, k);
    CtxPtr target = make_context(s1.lambda, s1.b, s1.unfrozen);
    int n = root.nvert();
    TorusElement out(target);
    if (z.is_zero()) return out;

    // Clear inverse powers of the new variable u = X_k(mu_k root), peel the
    // shifted element against the target chart's normalized monomials, then
    // undo the shift.  A zero remainder is the membership proof.
    const TorusElement& u = s1.vars[k];
    long long dshift = 0;
    for (const auto& [e, c] : z.terms()) dshift = std::max(dshift, e[k]);

    TorusElement w = u.pow(dshift) * z;
    ExpVec lu = u.lex_max();
    ExpVec ek(n, 0);
    ek[k] = 1;

    std::map<ExpVec, QCoeff> peeled;
    long long guard = 0;
    while (!w.is_zero()) {
        if (++guard > 200000)
            throw DivisionError("element is not Laurent in the adjacent chart");
        ExpVec e = w.lex_max();
        long long mk = -e[k];
        if (mk < 0)
            throw InternalError("positive new-variable exponent after shift");
        ExpVec m(n, 0), rest(n, 0);
        m[k] = mk;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            m[i] = e[i] - mk * lu[i];
            rest[i] = m[i];
        }
        TorusElement em = TorusElement::monomial(home, rest);
        if (mk > 0) em = normalize_pointed(em * u.pow(mk)).elem;
        if (em.lex_max() != e)
            throw InternalError("adjacent-chart monomial misses the leading term");
        auto s = em.coeff(e).unit_v_power();
        if (!s)
            throw InternalError("non-unit leading coefficient in chart monomial");
        QCoeff c = w.coeff(e) * QCoeff::v_pow(-*s);
        if (peeled.count(m))
            throw InternalError("repeated exponent while peeling");
        peeled[m] = c;
        w -= em.scaled(c);
    }

    for (const auto& [m, c] : peeled) {
        ExpVec shifted = m;
        shifted[k] -= dshift;
        long long tw = -dshift * lambda_form(s1.lambda, ek, m);
        out += TorusElement::monomial(target, shifted, c * QCoeff::v_pow(tw));
    }
    return out;
}

TransportReport compatibly_pointed(const TorusElement& z, const Seed& root,
                                   const std::vector<int>& word) {
    if (z.trunc()) throw TruncationError("transport requires an exact element");
    TransportReport rep;
    Seed cur = as_root(root);
    auto p = try_pointed(z);
    if (!p) {
        rep.ok = false;
        rep.detail = "element is not pointed in the starting chart";
        return rep;
    }
    rep.degrees.push_back(p->degree);
    TorusElement zc = z;
    for (size_t i = 0; i < word.size(); ++i) {
        int k = word[i];
        ExpVec predicted = phi_step(cur, k, rep.degrees.back());
        TorusElement zn = rechart_adjacent(zc, cur, k);
        Seed next = as_root(mutate(cur, k));
        auto pn = try_pointed(zn);
        if (!pn) {
            rep.ok = false;
            rep.detail =
                "element is not pointed after step " + std::to_string(i + 1);
            return rep;
        }
        if (pn->degree != predicted) {
            rep.ok = false;
            rep.detail = "tropical transport mismatch at step " +
                         std::to_string(i + 1) + ": phi gives " +
                         vec_str(predicted) + ", direct degree is " +
                         vec_str(pn->degree);
            return rep;
        }
        rep.degrees.push_back(pn->degree);
        zc = std::move(zn);
        cur = std::move(next);
    }
    return rep;
}

}  // namespace qca
