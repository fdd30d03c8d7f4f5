#include "qca/triangular.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qca/error.hpp"
#include "qca/tropical.hpp"

namespace qca {

namespace {

long long pos_part(long long x) { return x > 0 ? x : 0; }

std::string vec_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

ExpVec b_shift(const IntMat& b, const ExpVec& g, const UfVec& n) {
    ExpVec r = g;
    for (int i = 0; i < b.rows; ++i)
        for (int c = 0; c < b.cols; ++c) r[i] += b.at(i, c) * n[c];
    return r;
}

// All n >= 0 with |n| == total, ascending lex.
std::vector<UfVec> level_vectors(int dim, long long total) {
    std::vector<UfVec> out;
    if (dim == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    UfVec cur(dim, 0);
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
        if (pos == dim - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (long long x = 0; x <= left; ++x) {
            cur[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    rec(0, total);
    return out;
}

// sigma[c] = unfrozen vertex of s whose variable has unfrozen degree -e_c in
// the root chart, if that matching is complete.
std::optional<std::vector<int>> match_injective(const Seed& root, const Seed& s) {
    int nuf = root.nuf();
    std::vector<int> sigma(nuf, -1);
    std::vector<std::optional<ExpVec>> degs(nuf);
    for (int cu = 0; cu < nuf; ++cu) {
        auto p = try_pointed(s.vars[s.unfrozen[cu]]);
        if (p) degs[cu] = p->degree;
    }
    for (int c = 0; c < nuf; ++c) {
        bool found = false;
        for (int cu = 0; cu < nuf && !found; ++cu) {
            if (!degs[cu]) continue;
            bool match = true;
            for (int c2 = 0; c2 < nuf; ++c2) {
                long long want = (c2 == c) ? -1 : 0;
                if ((*degs[cu])[root.unfrozen[c2]] != want) {
                    match = false;
                    break;
                }
            }
            if (match) {
                sigma[c] = s.unfrozen[cu];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return sigma;
}

}  // namespace

std::optional<InjectiveReach> find_t1(const Seed& root, int max_depth) {
    std::deque<std::pair<Seed, std::vector<int>>> queue;
    std::set<std::string> seen;
    queue.emplace_back(root, std::vector<int>{});
    seen.insert(seed_key(root));
    while (!queue.empty()) {
        auto [s, w] = std::move(queue.front());
        queue.pop_front();
        if (auto sigma = match_injective(root, s)) {
            InjectiveReach r;
            r.word = w;
            r.sigma = *sigma;
            for (int c = 0; c < root.nuf(); ++c)
                r.inj.push_back(as_pointed(s.vars[(*sigma)[c]]));
            r.t1 = std::move(s);
            return r;
        }
        if ((int)w.size() >= max_depth) continue;
        for (int k : root.unfrozen) {
            Seed nx = mutate(s, k);
            if (!seen.insert(seed_key(nx)).second) continue;
            std::vector<int> w2 = w;
            w2.push_back(k);
            queue.emplace_back(std::move(nx), std::move(w2));
        }
    }
    return std::nullopt;
}

PointedElement distinguished(const Seed& root, const InjectiveReach& reach,
                             const ExpVec& g) {
    int n = root.nvert();
    if ((int)g.size() != n) throw InputError("degree vector has wrong length");
    TorusElement acc = TorusElement::monomial(root.home, ExpVec(n, 0));
    for (int c = 0; c < root.nuf(); ++c) {
        long long e = pos_part(g[root.unfrozen[c]]);
        if (e) acc = acc * root.vars[root.unfrozen[c]].pow(e);
    }
    for (int c = 0; c < root.nuf(); ++c) {
        long long e = pos_part(-g[root.unfrozen[c]]);
        if (e) acc = acc * reach.inj[c].elem.pow(e);
    }
    PointedElement q = normalize_pointed(acc);
    ExpVec shift = sub_vec(g, q.degree);
    for (int c = 0; c < root.nuf(); ++c)
        if (shift[root.unfrozen[c]] != 0)
            throw InternalError("distinguished element has wrong unfrozen degree");
    if (abs_sum(shift) != 0)
        q = normalize_pointed(TorusElement::monomial(root.home, shift) * q.elem);
    if (q.degree != g) throw InternalError("distinguished degree mismatch");
    return q;
}

DecompResult pointed_decompose(const PointedElement& z,
                               const FamilyLookup& family,
                               long long order_bound) {
    const IntMat& b = z.elem.ctx()->b;
    const ExpVec& base = z.degree;
    DecompResult out;
    long long bound = order_bound;
    if (z.elem.trunc() && *z.elem.trunc() < bound) {
        bound = *z.elem.trunc();
        out.exact = false;
    }
    TorusElement rem = z.elem;
    rem.set_trunc(std::nullopt);

    long long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 100000)
            throw DecompositionError("decomposition does not terminate");
        // Live terms: support within the order band against the base degree.
        std::vector<std::pair<ExpVec, long long>> live;
        bool dropped = false;
        for (const auto& [e, c] : rem.terms()) {
            bool undecided = false;
            auto cert = tail_certificate(b, base, e, 64, &undecided);
            if (undecided)
                throw DecompositionError("tail certificate undecided for " +
                                         vec_str(e));
            if (!cert)
                throw DecompositionError("remainder leaves the cone below " +
                                         vec_str(base));
            long long ord = 0;
            for (long long x : *cert) ord += x;
            if (ord >= bound) {
                dropped = true;
                continue;
            }
            live.emplace_back(e, ord);
        }
        if (live.empty()) {
            if (dropped) out.exact = false;
            break;
        }
        // Dominance-maximal candidate, lex-max among maximal ones.
        const ExpVec* pick = nullptr;
        for (const auto& [e1, o1] : live) {
            bool below = false;
            for (const auto& [e2, o2] : live) {
                if (e1 == e2) continue;
                Tri lt = dominance_lt_core(b, e1, e2);
                if (lt == Tri::Unknown)
                    throw DecompositionError("dominance comparison undecided");
                if (lt == Tri::True) {
                    below = true;
                    break;
                }
            }
            if (!below && (!pick || *pick < e1)) pick = &e1;
        }
        if (!pick) throw InternalError("no dominance-maximal term");
        ExpVec gp = *pick;
        long long ordgp = 0;
        for (const auto& [e, o] : live)
            if (e == gp) ordgp = o;

        QCoeff c = rem.coeff(gp);
        const PointedElement* f = family(gp);
        if (!f)
            throw DecompositionError("family has no member pointed at " +
                                     vec_str(gp));
        if (f->degree != gp)
            throw InternalError("family member pointed at the wrong degree");
        if (f->elem.trunc() && *f->elem.trunc() < bound - ordgp)
            out.exact = false;
        TorusElement sub = f->elem;
        sub.set_trunc(std::nullopt);
        rem -= sub.scaled(c);
        if (out.coeff.count(gp))
            throw InternalError("degree peeled twice during decomposition");
        out.coeff[gp] = c;
    }
    return out;
}

namespace {

struct KlRun {
    std::map<UfVec, QCoeff> corr;  // n -> c_n, n = 0 included with 1
    TorusElement f;                // untruncated assembly
    bool exact = false;
};

KlRun kl_run(const Seed& root, const InjectiveReach& reach, const ExpVec& g,
             long long order, bool alt_order) {
    int duf = root.nuf();
    std::vector<UfVec> ks;
    for (long long lev = 0; lev < order; ++lev) {
        std::vector<UfVec> vs = level_vectors(duf, lev);
        if (alt_order) std::reverse(vs.begin(), vs.end());
        ks.insert(ks.end(), vs.begin(), vs.end());
    }

    std::map<ExpVec, PointedElement> cache;
    auto inj_at = [&](const ExpVec& h) -> const PointedElement* {
        auto it = cache.find(h);
        if (it == cache.end())
            it = cache.emplace(h, distinguished(root, reach, h)).first;
        return &it->second;
    };
    auto deg_of = [&](const UfVec& n) { return b_shift(root.b, g, n); };

    // Bar-transition rows: bar(inj_n') over the family, indexed back by n.
    std::map<UfVec, std::map<UfVec, QCoeff>> rows;
    for (const UfVec& np : ks) {
        ExpVec gn = deg_of(np);
        TorusElement bn = inj_at(gn)->elem.bar();
        long long here = order - abs_sum(np);
        DecompResult dr = pointed_decompose(as_pointed(bn), inj_at, here);
        std::map<UfVec, QCoeff> row;
        for (const auto& [hdeg, c] : dr.coeff) {
            auto cert = tail_certificate(root.b, g, hdeg);
            if (!cert) throw InternalError("bar transition outside the window");
            row[*cert] = c;
        }
        rows[np] = std::move(row);
    }

    KlRun run;
    std::vector<UfVec> processed;
    for (const UfVec& n : ks) {
        if (abs_sum(n) == 0) {
            run.corr[n] = QCoeff(1);
            processed.push_back(n);
            continue;
        }
        QCoeff h;
        for (const UfVec& np : processed) {
            auto it = rows[np].find(n);
            if (it == rows[np].end()) continue;
            h += run.corr[np].bar() * it->second;
        }
        if (!(h.bar() == -h))
            throw InternalError("bar transition is not antisymmetric");
        run.corr[n] = solve_kl(h);
        processed.push_back(n);
    }

    TorusElement f(root.home);
    for (const auto& [n, c] : run.corr) {
        if (c.is_zero()) continue;
        f += inj_at(deg_of(n))->elem.scaled(c);
    }
    run.f = std::move(f);
    // A finite bar-invariant assembly pointed at g is the triangular
    // function itself; nothing was cut off.
    run.exact = run.f.bar_invariant();
    if (run.exact) {
        auto p = try_pointed(run.f);
        if (!p || p->degree != g)
            throw InternalError("exact assembly is not pointed at its degree");
    }
    return run;
}

}  // namespace

TriFunction kl_triangular(const Seed& root, const InjectiveReach& reach,
                          const ExpVec& g, long long order, bool alt_order) {
    if (order < 1) throw InputError("order must be positive");
    KlRun r1 = kl_run(root, reach, g, order, alt_order);
    KlRun r2 = kl_run(root, reach, g, 2 * order, alt_order);
    for (const auto& [n, c] : r1.corr) {
        auto it = r2.corr.find(n);
        if (it == r2.corr.end() || !(it->second == c))
            throw TruncationError("corrections unstable under order doubling at " +
                                  vec_str(n));
    }
    for (const auto& [n, c] : r2.corr) {
        if (abs_sum(n) < order && !r1.corr.count(n))
            throw TruncationError("corrections unstable under order doubling at " +
                                  vec_str(n));
    }

    TriFunction out;
    if (r2.exact) {
        out.f = as_pointed(r2.f);
        for (const auto& [n, c] : r2.corr)
            if (abs_sum(n) > 0 && !c.is_zero()) out.corrections[n] = c;
        out.exact = true;
        return out;
    }
    out.f = as_pointed(truncate(r2.f, g, order));
    for (const auto& [n, c] : r1.corr)
        if (abs_sum(n) > 0 && !c.is_zero()) out.corrections[n] = c;
    out.exact = false;
    return out;
}

TriFamily build_family(const Seed& root, const InjectiveReach& reach,
                       const std::vector<ExpVec>& window, long long order) {
    TriFamily fam;
    fam.window = window;
    fam.order = order;
    fam.reach = reach;
    for (const ExpVec& g : window)
        fam.fns.emplace(g, kl_triangular(root, reach, g, order));
    return fam;
}

std::vector<ExpVec> box_window(int n, long long radius) {
    std::vector<ExpVec> out;
    ExpVec cur(n, -radius);
    while (true) {
        out.push_back(cur);
        int p = n - 1;
        while (p >= 0 && cur[p] == radius) {
            cur[p] = -radius;
            --p;
        }
        if (p < 0) break;
        ++cur[p];
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Band comparison: an exact reference element must match the member term by
// term, below the member's truncation order when it has one.
bool member_matches(const TriFunction& tf, const TorusElement& ref,
                    const ExpVec& g, long long order) {
    if (tf.exact) return tf.f.elem.terms() == ref.terms();
    TorusElement cut = truncate(ref, g, order);
    return tf.f.elem.terms() == cut.terms();
}

struct FamilyProbe {
    const TriFamily* fam;
    bool missing = false;
    const PointedElement* operator()(const ExpVec& h) {
        auto it = fam->fns.find(h);
        if (it == fam->fns.end()) {
            missing = true;
            return nullptr;
        }
        return &it->second.f;
    }
};

void fail(CheckReport& rep, const std::string& msg) {
    if (rep.ok) {
        rep.ok = false;
        rep.detail = msg;
    }
}

}  // namespace

CheckReport verify_triangular_basis(const Seed& root, const TriFamily& fam) {
    CheckReport rep;
    int n = root.nvert();

    // (a) bar-invariance, degree, corrections in m.
    for (const auto& [g, tf] : fam.fns) {
        ++rep.checked;
        if (tf.f.degree != g) {
            fail(rep, "member at " + vec_str(g) + " pointed elsewhere");
            continue;
        }
        if (!tf.f.elem.bar_invariant()) {
            fail(rep, "member at " + vec_str(g) + " is not bar-invariant");
            continue;
        }
        for (const auto& [nn, c] : tf.corrections)
            if (!c.in_m()) {
                fail(rep, "correction outside m at " + vec_str(g) + " n=" +
                              vec_str(nn));
                break;
            }
    }

    // (b) unit lead and lower coefficients in m for X_i * f_g.
    for (int i = 0; i < n; ++i) {
        ExpVec fi(n, 0);
        fi[i] = 1;
        for (const auto& [g, tf] : fam.fns) {
            ExpVec gt = add_vec(g, fi);
            if (!fam.fns.count(gt)) {
                ++rep.skipped;
                continue;
            }
            TorusElement prod = root.vars[i] * tf.f.elem;
            TorusElement norm = normalize_at(prod, gt);
            FamilyProbe probe{&fam};
            DecompResult dec;
            try {
                dec = pointed_decompose(as_pointed(norm), std::ref(probe),
                                        fam.order);
            } catch (const DecompositionError& e) {
                if (probe.missing) {
                    ++rep.skipped;
                    continue;
                }
                throw;
            }
            ++rep.checked;
            auto lead = dec.coeff.find(gt);
            if (lead == dec.coeff.end() || !lead->second.is_one()) {
                fail(rep, "expansion of X_" + root.names[i] + " * f_" +
                              vec_str(g) + " lacks unit lead");
                continue;
            }
            for (const auto& [h, c] : dec.coeff) {
                if (h == gt) continue;
                if (!c.in_m()) {
                    fail(rep, "expansion of X_" + root.names[i] + " * f_" +
                                  vec_str(g) + " has coefficient outside m at " +
                                  vec_str(h));
                    break;
                }
            }
        }
    }

    // (c) localized cluster monomials of the root chart and of t[1].
    for (const auto& [g, tf] : fam.fns) {
        bool nonneg = true, nonpos = true;
        for (int c = 0; c < root.nuf(); ++c) {
            long long x = g[root.unfrozen[c]];
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        if (nonneg) {
            TorusElement cm = cluster_monomial(root, g);
            ++rep.checked;
            if (!member_matches(tf, cm, g, fam.order))
                fail(rep, "member at " + vec_str(g) +
                              " differs from the root cluster monomial");
        }
        if (nonpos) {
            ExpVec m0(n, 0);
            for (int c = 0; c < root.nuf(); ++c)
                m0[fam.reach.sigma[c]] = -g[root.unfrozen[c]];
            TorusElement z0 = cluster_monomial(fam.reach.t1, m0);
            PointedElement p0 = as_pointed(z0);
            ExpVec delta = sub_vec(g, p0.degree);
            bool frozen_only = true;
            for (int c = 0; c < root.nuf(); ++c)
                if (delta[root.unfrozen[c]] != 0) frozen_only = false;
            if (!frozen_only)
                throw InternalError("companion monomial has wrong unfrozen degree");
            ExpVec m = add_vec(m0, delta);
            TorusElement z = cluster_monomial(fam.reach.t1, m);
            ++rep.checked;
            if (!member_matches(tf, z, g, fam.order))
                fail(rep, "member at " + vec_str(g) +
                              " differs from the companion cluster monomial");
        }
    }
    return rep;
}

CheckReport verify_admissible(const Seed& root, const TriFamily& fam, int k,
                              int dmax, int depth) {
    CheckReport rep;
    int n = root.nvert();
    Seed tp = mutate(root, k);

    for (int d = 1; d <= dmax; ++d) {
        ExpVec me(n, 0);
        me[k] = d;
        TorusElement z = cluster_monomial(tp, me);
        PointedElement p = as_pointed(z);
        auto it = fam.fns.find(p.degree);
        if (it == fam.fns.end()) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!member_matches(it->second, z, p.degree, fam.order))
            fail(rep, "X_" + root.names[k] + "(t')^" + std::to_string(d) +
                          " is not the family member at " + vec_str(p.degree));
    }

    Seed tproot = as_root(tp);
    auto reach2 = find_t1(tproot, depth);
    if (!reach2) {
        fail(rep, "companion chart of the adjacent seed not found");
        return rep;
    }
    Seed tp1 = apply_sequence(tp, reach2->word);
    int kc = root.uf_col(k);
    int vtx = reach2->sigma[kc];
    for (int d = 1; d <= dmax; ++d) {
        ExpVec me(n, 0);
        me[vtx] = d;
        TorusElement z = cluster_monomial(tp1, me);
        PointedElement p = as_pointed(z);
        auto it = fam.fns.find(p.degree);
        if (it == fam.fns.end()) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (!member_matches(it->second, z, p.degree, fam.order))
            fail(rep, "I_" + root.names[k] + "(t')^" + std::to_string(d) +
                          " is not the family member at " + vec_str(p.degree));
    }
    return rep;
}

CheckReport verify_compatibility(const Seed& root, const TriFamily& fam,
                                 int k, long long order, int depth) {
    CheckReport rep;
    Seed tp = mutate(root, k);
    Seed tproot = as_root(tp);
    auto reach2 = find_t1(tproot, depth);
    if (!reach2) {
        fail(rep, "companion chart of the adjacent seed not found");
        return rep;
    }
    std::map<ExpVec, PointedElement> cache;
    auto lookup = [&](const ExpVec& h) -> const PointedElement* {
        auto it = cache.find(h);
        if (it == cache.end())
            it = cache.emplace(h, distinguished(tproot, *reach2, h)).first;
        return &it->second;
    };

    for (const auto& [g, tf] : fam.fns) {
        if (!tf.exact) {
            ++rep.skipped;
            continue;
        }
        TorusElement zp = rechart_adjacent(tf.f.elem, root, k);
        ExpVec want = phi_step(root, k, g);
        auto p = try_pointed(zp);
        if (!p) {
            fail(rep, "rewritten member at " + vec_str(g) +
                          " is not pointed in the adjacent chart");
            continue;
        }
        if (p->degree != want) {
            fail(rep, "rewritten member at " + vec_str(g) + " has degree " +
                          vec_str(p->degree) + ", tropical rule gives " +
                          vec_str(want));
            continue;
        }
        DecompResult dec = pointed_decompose(*p, lookup, order);
        ++rep.checked;
        auto lead = dec.coeff.find(want);
        if (lead == dec.coeff.end() || !lead->second.is_one()) {
            fail(rep, "adjacent expansion at " + vec_str(g) + " lacks unit lead");
            continue;
        }
        for (const auto& [h, c] : dec.coeff) {
            if (h == want) continue;
            if (!c.in_m()) {
                fail(rep, "adjacent expansion at " + vec_str(g) +
                              " has coefficient outside m at " + vec_str(h));
                break;
            }
        }
    }
    return rep;
}

CheckReport verify_copointed_rigidity(const TorusElement& z, const Seed& root,
                                      int k, int d) {
    CheckReport rep;
    if (z.trunc()) throw TruncationError("rigidity needs an exact element");
    int n = root.nvert();
    int kc = root.uf_col(k);
    if (kc < 0) throw InputError("rigidity at frozen or unknown vertex");

    Seed tp = mutate(root, k);
    ExpVec me(n, 0);
    me[k] = d;
    TorusElement w = cluster_monomial(tp, me);
    PointedElement pw = as_pointed(w);
    const ExpVec& g = pw.degree;

    auto pz = try_pointed(z);
    if (!pz) {
        fail(rep, "element is not pointed");
        return rep;
    }
    if (pz->degree != g) {
        fail(rep, "pointed degree " + vec_str(pz->degree) + ", expected " +
                      vec_str(g));
        return rep;
    }
    auto cz = copointed(z);
    auto cw = copointed(w);
    if (!cw) throw InternalError("reference power is not copointed");
    if (!cz) {
        fail(rep, "element is not copointed");
        return rep;
    }
    if (cz->degree != cw->degree) {
        fail(rep, "copointed degree " + vec_str(cz->degree) + ", expected " +
                      vec_str(cw->degree));
        return rep;
    }

    ExpVec bek(n, 0);
    for (int i = 0; i < n; ++i) bek[i] = root.b.at(i, kc);
    for (const auto& [e, c] : z.terms()) {
        ExpVec diff = sub_vec(e, g);
        long long j = -1;
        for (int i = 0; i < n && j < 0; ++i)
            if (bek[i] != 0) j = diff[i] / bek[i];
        ExpVec expect = g;
        for (int i = 0; i < n; ++i) expect[i] += j * bek[i];
        if (j < 0 || j > d || expect != e) {
            fail(rep, "support leaves the exchange segment at " + vec_str(e));
            return rep;
        }
    }
    for (long long j = 0; j <= d; ++j) {
        ExpVec e = g;
        for (int i = 0; i < n; ++i) e[i] += j * bek[i];
        ++rep.checked;
        if (!(z.coeff(e) == w.coeff(e))) {
            fail(rep, "coefficient differs at segment step " + std::to_string(j) +
                          ": " + z.coeff(e).str() + " vs " + w.coeff(e).str());
            return rep;
        }
    }
    return rep;
}

std::map<ExpVec, TorusElement> transfer_similar(const TriFamily& fam,
                                                const Seed& source_root,
                                                const Seed& target_root,
                                                const std::vector<int>& tau) {
    int nuf = source_root.nuf();
    if (target_root.nuf() != nuf || (int)tau.size() != nuf)
        throw InputError("tau must match the unfrozen columns");
    std::vector<int> tcol(nuf);
    for (int c = 0; c < nuf; ++c) {
        tcol[c] = target_root.uf_col(tau[c]);
        if (tcol[c] < 0) throw InputError("tau hits a frozen target vertex");
    }
    for (int c1 = 0; c1 < nuf; ++c1)
        for (int c2 = 0; c2 < nuf; ++c2)
            if (source_root.b.at(source_root.unfrozen[c1], c2) !=
                target_root.b.at(tau[c1], tcol[c2]))
                throw InputError("principal exchange blocks differ under tau");

    bool same_count = source_root.nvert() == target_root.nvert();
    std::vector<int> sfro, tfro;
    for (int i = 0; i < source_root.nvert(); ++i)
        if (!source_root.is_unfrozen(i)) sfro.push_back(i);
    for (int i = 0; i < target_root.nvert(); ++i)
        if (!target_root.is_unfrozen(i)) tfro.push_back(i);

    std::map<ExpVec, TorusElement> out;
    for (const auto& [g, tf] : fam.fns) {
        ExpVec gg(target_root.nvert(), 0);
        for (int c = 0; c < nuf; ++c)
            gg[tau[c]] = g[source_root.unfrozen[c]];
        if (same_count)
            for (size_t j = 0; j < sfro.size(); ++j)
                gg[tfro[j]] = g[sfro[j]];

        TorusElement el(target_root.home);
        el.set_coeff(gg, QCoeff(1));
        for (const auto& [nn, c] : tf.f.tail) {
            UfVec tn(nuf, 0);
            for (int c2 = 0; c2 < nuf; ++c2) tn[tcol[c2]] = nn[c2];
            el.set_coeff(b_shift(target_root.b, gg, tn), c);
        }
        el.set_trunc(tf.f.elem.trunc());
        if (!el.bar_invariant())
            throw InputError("transfer produced a non-bar-invariant element");
        auto p = try_pointed(el);
        if (!p || p->degree != gg)
            throw InputError("transfer produced a non-pointed element");
        out.emplace(gg, std::move(el));
    }
    return out;
}

}  // namespace qca
