#include "qca/torus.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

CtxPtr make_context(IntMat lambda, IntMat b, std::vector<int> unfrozen) {
    if (lambda.rows != lambda.cols) throw InputError("Lambda must be square");
    for (int i = 0; i < lambda.rows; ++i)
        for (int j = 0; j < lambda.cols; ++j)
            if (lambda.at(i, j) != -lambda.at(j, i))
                throw InputError("Lambda must be skew-symmetric");
    if (b.rows != lambda.rows) throw InputError("B row count must match Lambda");
    if (b.cols != static_cast<int>(unfrozen.size()))
        throw InputError("B must have one column per unfrozen vertex");
    for (int u : unfrozen)
        if (u < 0 || u >= lambda.rows) throw InputError("unfrozen index out of range");
    auto ctx = std::make_shared<TorusContext>();
    ctx->lambda = std::move(lambda);
    ctx->b = std::move(b);
    ctx->unfrozen = std::move(unfrozen);
    return ctx;
}

long long lambda_form(const IntMat& lambda, const ExpVec& m, const ExpVec& n) {
    if (static_cast<int>(m.size()) != lambda.rows ||
        static_cast<int>(n.size()) != lambda.rows)
        throw InternalError("lambda_form dimension mismatch");
    long long s = 0;
    for (int i = 0; i < lambda.rows; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j < lambda.cols; ++j) s += m[i] * lambda.at(i, j) * n[j];
    }
    return s;
}

ExpVec add_vec(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw InternalError("vector size mismatch");
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec sub_vec(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw InternalError("vector size mismatch");
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

long long abs_sum(const ExpVec& a) {
    long long s = 0;
    for (long long x : a) s += x < 0 ? -x : x;
    return s;
}

TorusElement TorusElement::monomial(CtxPtr ctx, ExpVec m, QCoeff c) {
    if (!ctx) throw InternalError("monomial without context");
    if (static_cast<int>(m.size()) != ctx->size())
        throw InputError("exponent vector length mismatch");
    TorusElement r(std::move(ctx));
    if (!c.is_zero()) r.terms_.emplace(std::move(m), std::move(c));
    return r;
}

QCoeff TorusElement::coeff(const ExpVec& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QCoeff() : it->second;
}

void TorusElement::set_coeff(const ExpVec& m, QCoeff c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

void TorusElement::check_ctx(const TorusElement& rhs) const {
    if (!ctx_ || !rhs.ctx_) throw InternalError("element without context");
    if (ctx_ != rhs.ctx_ && !(*ctx_ == *rhs.ctx_))
        throw InputError("elements from different tori");
}

namespace {
std::optional<long long> combine_trunc(const std::optional<long long>& a,
                                       const std::optional<long long>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
}  // namespace

TorusElement TorusElement::operator-() const {
    TorusElement r(ctx_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    r.trunc_ = trunc_;
    return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& rhs) {
    check_ctx(rhs);
    for (auto& [m, c] : rhs.terms_) set_coeff(m, coeff(m) + c);
    trunc_ = combine_trunc(trunc_, rhs.trunc_);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& rhs) {
    check_ctx(rhs);
    for (auto& [m, c] : rhs.terms_) set_coeff(m, coeff(m) - c);
    trunc_ = combine_trunc(trunc_, rhs.trunc_);
    return *this;
}

TorusElement TorusElement::operator+(const TorusElement& rhs) const {
    TorusElement r = *this;
    r += rhs;
    return r;
}

TorusElement TorusElement::operator-(const TorusElement& rhs) const {
    TorusElement r = *this;
    r -= rhs;
    return r;
}

TorusElement TorusElement::operator*(const TorusElement& rhs) const {
    check_ctx(rhs);
    TorusElement r(ctx_);
    for (auto& [m, cm] : terms_)
        for (auto& [n, cn] : rhs.terms_) {
            ExpVec e = add_vec(m, n);
            QCoeff t = cm * cn * QCoeff::v_pow(lambda_form(ctx_->lambda, m, n));
            r.set_coeff(e, r.coeff(e) + t);
        }
    r.trunc_ = combine_trunc(trunc_, rhs.trunc_);
    return r;
}

TorusElement TorusElement::pow(long long k) const {
    if (k < 0) throw InputError("negative twisted power");
    if (!ctx_) throw InternalError("pow without context");
    TorusElement r = monomial(ctx_, ExpVec(ctx_->size(), 0));
    for (long long i = 0; i < k; ++i) r = r * *this;
    return r;
}

TorusElement TorusElement::scaled(const QCoeff& c) const {
    TorusElement r(ctx_);
    if (!c.is_zero())
        for (auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
    r.trunc_ = trunc_;
    return r;
}

TorusElement TorusElement::bar() const {
    TorusElement r(ctx_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c.bar());
    r.trunc_ = trunc_;
    return r;
}

bool TorusElement::bar_invariant() const {
    for (auto& [m, c] : terms_)
        if (!c.bar_invariant()) return false;
    return true;
}

const ExpVec& TorusElement::lex_max() const {
    if (terms_.empty()) throw InternalError("lex_max of zero element");
    return terms_.rbegin()->first;
}

bool TorusElement::operator==(const TorusElement& rhs) const {
    bool ctx_eq = (ctx_ == rhs.ctx_) || (ctx_ && rhs.ctx_ && *ctx_ == *rhs.ctx_);
    return ctx_eq && terms_ == rhs.terms_ && trunc_ == rhs.trunc_;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "X[";
        for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
        os << "] * (" << c.str() << ")";
    }
    return os.str();
}

TorusElement y_monomial(const CtxPtr& ctx, const UfVec& n) {
    if (!ctx) throw InternalError("y_monomial without context");
    if (static_cast<int>(n.size()) != ctx->b.cols)
        throw InputError("y_monomial: n length must match unfrozen count");
    return TorusElement::monomial(ctx, ctx->b.mul_vec(n));
}

namespace {

// Enumerates n >= 0 with |n| = level, invoking f until it returns true.
bool enum_level(UfVec& n, size_t pos, long long remaining,
                const std::function<bool(const UfVec&)>& f) {
    if (pos + 1 == n.size()) {
        n[pos] = remaining;
        bool hit = f(n);
        n[pos] = 0;
        return hit;
    }
    for (long long v = 0; v <= remaining; ++v) {
        n[pos] = v;
        if (enum_level(n, pos + 1, remaining - v, f)) {
            n[pos] = 0;
            return true;
        }
    }
    n[pos] = 0;
    return false;
}

}  // namespace

std::optional<UfVec> tail_certificate(const IntMat& b, const ExpVec& g,
                                      const ExpVec& e, long long bound,
                                      bool* undecided) {
    if (undecided) *undecided = false;
    ExpVec diff = sub_vec(e, g);
    if (b.cols == 0) {
        if (abs_sum(diff) == 0) return UfVec{};
        return std::nullopt;
    }
    if (full_column_rank(b)) {
        auto n = solve_unique_integer(b, diff);
        if (!n) return std::nullopt;
        for (long long x : *n)
            if (x < 0) return std::nullopt;
        return n;
    }
    // Rank-deficient exchange matrix: bounded search, smallest |n| first.
    UfVec n(b.cols, 0);
    std::optional<UfVec> found;
    auto probe = [&](const UfVec& cand) {
        if (b.mul_vec(cand) == diff) {
            found = cand;
            return true;
        }
        return false;
    };
    for (long long level = 0; level <= bound; ++level)
        if (enum_level(n, 0, level, probe)) return found;
    if (undecided) *undecided = true;
    return std::nullopt;
}

TorusElement truncate(const TorusElement& a, const ExpVec& g, long long order_bound) {
    if (!a.ctx()) throw InternalError("truncate without context");
    TorusElement r(a.ctx());
    for (auto& [e, c] : a.terms()) {
        bool undecided = false;
        auto n = tail_certificate(a.ctx()->b, g, e, 64, &undecided);
        if (undecided)
            throw TruncationError("truncate: tail certificate undecidable within bound");
        if (!n)
            throw NotPointedError("truncate: term " + TorusElement::monomial(a.ctx(), e).str() +
                                  " has no tail certificate against the base degree");
        if (abs_sum(*n) < order_bound) r.set_coeff(e, c);
    }
    long long eff = order_bound;
    if (a.trunc() && *a.trunc() < eff) eff = *a.trunc();
    r.set_trunc(eff);
    return r;
}

TorusElement exact_divide(const TorusElement& a, const TorusElement& b) {
    if (!a.ctx() || !b.ctx()) throw InternalError("exact_divide without context");
    if (a.trunc() || b.trunc())
        throw TruncationError("exact_divide requires exact (untruncated) operands");
    if (b.is_zero()) throw DivisionError("exact_divide by zero");
    TorusElement q(a.ctx());
    if (a.is_zero()) return q;

    const ExpVec& lead_b = b.lex_max();
    auto unit = b.coeff(lead_b).unit_v_power();
    std::optional<long long> neg_unit;
    if (!unit) {
        auto negated = (-b.coeff(lead_b)).unit_v_power();
        if (negated) neg_unit = negated;
    }
    if (!unit && !neg_unit)
        throw DivisionError("exact_divide: leading coefficient " + b.coeff(lead_b).str() +
                            " is not a unit");
    long long lead_e = unit ? *unit : *neg_unit;
    long long sign = unit ? 1 : -1;

    // Quotient exponents are confined to the coordinate-wise box
    // [min(a)-min(b), max(a)-max(b)]: the Newton polytope of the quotient
    // shifted by the divisor's must fit inside the dividend's.
    int dim = a.ctx()->size();
    ExpVec qlo(dim), qhi(dim);
    for (int i = 0; i < dim; ++i) {
        long long amin = 0, amax = 0, bmin = 0, bmax = 0;
        bool afirst = true, bfirst = true;
        for (auto& [e, c] : a.terms()) {
            if (afirst || e[i] < amin) amin = e[i];
            if (afirst || e[i] > amax) amax = e[i];
            afirst = false;
        }
        for (auto& [e, c] : b.terms()) {
            if (bfirst || e[i] < bmin) bmin = e[i];
            if (bfirst || e[i] > bmax) bmax = e[i];
            bfirst = false;
        }
        qlo[i] = amin - bmin;
        qhi[i] = amax - bmax;
    }

    TorusElement r = a;
    const IntMat& lambda = a.ctx()->lambda;
    while (!r.is_zero()) {
        const ExpVec e = r.lex_max();
        ExpVec delta = sub_vec(e, lead_b);
        for (int i = 0; i < dim; ++i)
            if (delta[i] < qlo[i] || delta[i] > qhi[i])
                throw DivisionError("exact_divide: no exact quotient, remainder term " +
                                    TorusElement::monomial(a.ctx(), e, r.coeff(e)).str());
        // b * (c X^delta) must cancel the leading term of r.
        QCoeff c = r.coeff(e) * QCoeff::v_pow(-lead_e - lambda_form(lambda, lead_b, delta));
        if (sign < 0) c = -c;
        q.set_coeff(delta, c);
        r -= b * TorusElement::monomial(a.ctx(), delta, c);
        if (!r.is_zero() && !(r.lex_max() < e))
            throw InternalError("exact_divide: leading term failed to cancel");
    }
    if (b * q != a) throw InternalError("exact_divide: verification failed");
    return q;
}

}  // namespace qca
