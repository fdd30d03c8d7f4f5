#include "qca/pointed.hpp"

#include <sstream>

#include "qca/error.hpp"

namespace qca {

Tri dominance_lt_core(const IntMat& b, const ExpVec& g1, const ExpVec& g2,
                      long long bound) {
    bool undecided = false;
    auto n = tail_certificate(b, g2, g1, bound, &undecided);
    if (n && abs_sum(*n) > 0) return Tri::True;
    if (n) return Tri::False;  // n = 0 means equal, not strictly below
    return undecided ? Tri::Unknown : Tri::False;
}

Tri dominance_lt(const Seed& t, const ExpVec& g1, const ExpVec& g2,
                 long long bound) {
    return dominance_lt_core(t.b, g1, g2, bound);
}

namespace {

struct PointedScan {
    std::optional<PointedElement> result;
    std::string reason;
};

PointedScan scan_pointed(const TorusElement& a, const IntMat& b, long long bound,
                         bool require_unit) {
    PointedScan out;
    if (!a.ctx()) throw InternalError("pointedness of element without context");
    if (a.is_zero()) {
        out.reason = "zero element";
        return out;
    }
    bool hit_bound = false;
    for (auto& [cand, ccoeff] : a.terms()) {
        std::map<UfVec, QCoeff> tail;
        bool ok = true;
        for (auto& [e, c] : a.terms()) {
            if (e == cand) continue;
            bool undecided = false;
            auto n = tail_certificate(b, cand, e, bound, &undecided);
            if (undecided) hit_bound = true;
            if (!n || abs_sum(*n) == 0) {
                ok = false;
                break;
            }
            tail.emplace(*n, c);
        }
        if (!ok) continue;
        if (require_unit && !ccoeff.is_one()) {
            out.reason = "dominant exponent has coefficient " + ccoeff.str() +
                         ", expected 1";
            return out;
        }
        PointedElement p;
        p.elem = a;
        p.degree = cand;
        p.tail = std::move(tail);
        out.result = std::move(p);
        return out;
    }
    out.reason = hit_bound
                     ? "no dominant exponent certified within enumeration bound"
                     : "no exponent dominates the whole support";
    return out;
}

}  // namespace

std::optional<PointedElement> try_pointed_core(const TorusElement& a,
                                               const IntMat& b, long long bound) {
    return scan_pointed(a, b, bound, true).result;
}

std::optional<PointedElement> try_pointed(const TorusElement& a, long long bound) {
    return try_pointed_core(a, a.ctx()->b, bound);
}

PointedElement as_pointed(const TorusElement& a) {
    PointedScan s = scan_pointed(a, a.ctx()->b, 64, true);
    if (!s.result)
        throw NotPointedError("not pointed: " + s.reason + " in " + a.str());
    return std::move(*s.result);
}

PointedElement normalize_pointed(const TorusElement& a) {
    PointedScan s = scan_pointed(a, a.ctx()->b, 64, false);
    if (!s.result)
        throw NotPointedError("cannot normalize: " + s.reason + " in " + a.str());
    auto unit = a.coeff(s.result->degree).unit_v_power();
    if (!unit)
        throw NotPointedError("cannot normalize: coefficient " +
                              a.coeff(s.result->degree).str() +
                              " at the dominant exponent is not a power of v");
    if (*unit == 0) return std::move(*s.result);
    return as_pointed(a.scaled(QCoeff::v_pow(-*unit)));
}

TorusElement normalize_at(const TorusElement& a, const ExpVec& g) {
    auto unit = a.coeff(g).unit_v_power();
    if (!unit)
        throw NotPointedError("normalize_at: coefficient " + a.coeff(g).str() +
                              " at the given exponent is not a power of v");
    return a.scaled(QCoeff::v_pow(-*unit));
}

std::optional<PointedElement> copointed(const TorusElement& a) {
    IntMat nb = a.ctx()->b;
    for (auto& x : nb.a) x = -x;
    return try_pointed_core(a, nb);
}

SignCoherenceReport check_sign_coherence(const Seed& target) {
    SignCoherenceReport rep;
    int nuf = target.nuf();
    rep.degree_matrix = IntMat(nuf, nuf);
    for (int c = 0; c < nuf; ++c) {
        PointedElement p = as_pointed(target.vars[target.unfrozen[c]]);
        for (int r = 0; r < nuf; ++r)
            rep.degree_matrix.at(r, c) = p.degree[target.unfrozen[r]];
    }
    for (int r = 0; r < nuf; ++r) {
        bool has_pos = false, has_neg = false;
        for (int c = 0; c < nuf; ++c) {
            if (rep.degree_matrix.at(r, c) > 0) has_pos = true;
            if (rep.degree_matrix.at(r, c) < 0) has_neg = true;
        }
        if (has_pos && has_neg) {
            rep.ok = false;
            rep.witness_coord = target.unfrozen[r];
            std::ostringstream os;
            os << "mixed signs in coordinate " << target.unfrozen[r]
               << " of the degree matrix " << rep.degree_matrix.str();
            rep.detail = os.str();
            return rep;
        }
    }
    rep.detail = "degree matrix " + rep.degree_matrix.str();
    return rep;
}

}  // namespace qca
