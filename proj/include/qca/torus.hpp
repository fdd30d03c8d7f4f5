#ifndef QCA_TORUS_HPP
#define QCA_TORUS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qca/linalg.hpp"
#include "qca/qcoef.hpp"

namespace qca {

// Exponent vector in Z^I, I = all vertices in file order.
using ExpVec = std::vector<long long>;

// Vector over the unfrozen vertices only (mutation-degree certificates).
using UfVec = std::vector<long long>;

/**
 * The chart data a torus element is expressed against: the skew form Lambda
 * used by the twisted product, and the exchange matrix b (I x I_uf) used for
 * dominance, tail certificates and truncation in this chart.
 *
 * Elements produced by one engine all share a context; operations on
 * elements from different contexts require the contexts to be equal.
 */
struct TorusContext {
    IntMat lambda;              // I x I, skew-symmetric
    IntMat b;                   // I x I_uf
    std::vector<int> unfrozen;  // ascending vertex indices, one per b column

    int size() const { return lambda.rows; }
    bool operator==(const TorusContext& rhs) const = default;
};

using CtxPtr = std::shared_ptr<const TorusContext>;

CtxPtr make_context(IntMat lambda, IntMat b, std::vector<int> unfrozen);

// Lambda(m, n) = sum_ij m_i Lambda_ij n_j.
long long lambda_form(const IntMat& lambda, const ExpVec& m, const ExpVec& n);

ExpVec add_vec(const ExpVec& a, const ExpVec& b);
ExpVec sub_vec(const ExpVec& a, const ExpVec& b);
long long abs_sum(const ExpVec& a);

/**
 * Element of the quantum torus over a fixed context, stored on the basis of
 * normalized monomials X^m: X^m * X^n = v^Lambda(m,n) X^(m+n), and the bar
 * involution fixes every X^m while inverting v in the coefficients.
 *
 * trunc(): when present, terms whose tail order (Y-adic order against the
 * element's pointed degree) is >= the bound are unknown rather than zero.
 * Arithmetic carries the bound along (min over operands); only truncate()
 * ever drops terms.
 */
class TorusElement {
  public:
    TorusElement() = default;
    explicit TorusElement(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static TorusElement monomial(CtxPtr ctx, ExpVec m, QCoeff c = QCoeff(1));

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const std::map<ExpVec, QCoeff>& terms() const { return terms_; }
    QCoeff coeff(const ExpVec& m) const;
    void set_coeff(const ExpVec& m, QCoeff c);

    std::optional<long long> trunc() const { return trunc_; }
    void set_trunc(std::optional<long long> t) { trunc_ = t; }

    TorusElement operator-() const;
    TorusElement operator+(const TorusElement& rhs) const;
    TorusElement operator-(const TorusElement& rhs) const;
    TorusElement& operator+=(const TorusElement& rhs);
    TorusElement& operator-=(const TorusElement& rhs);

    // Twisted product.
    TorusElement operator*(const TorusElement& rhs) const;
    TorusElement pow(long long k) const;  // k >= 0

    // Central scalar: multiplies every coefficient.
    TorusElement scaled(const QCoeff& c) const;

    TorusElement bar() const;
    bool bar_invariant() const;

    // Exponent of the lexicographically largest / smallest term.
    const ExpVec& lex_max() const;

    bool operator==(const TorusElement& rhs) const;
    bool operator!=(const TorusElement& rhs) const { return !(*this == rhs); }

    // Text form sorted ascending in the fixed monomial order, e.g.
    // "X[-1,0,1] * (1) + X[-1,1,0] * (1)".
    std::string str() const;

  private:
    CtxPtr ctx_;
    std::map<ExpVec, QCoeff> terms_;
    std::optional<long long> trunc_;

    void check_ctx(const TorusElement& rhs) const;
};

// X^(b n) for the context's own exchange matrix b and n over its unfrozen
// columns.
TorusElement y_monomial(const CtxPtr& ctx, const UfVec& n);

/**
 * Tail certificate: the n >= 0 with e = g + b n, if any.  Exact rational
 * solve when b has full column rank; otherwise bounded enumeration up to
 * |n| <= bound, returning nullopt with *undecided = true when the bound is
 * hit without a verdict.
 */
std::optional<UfVec> tail_certificate(const IntMat& b, const ExpVec& g,
                                      const ExpVec& e, long long bound = 64,
                                      bool* undecided = nullptr);

// Drops every term of Y-order >= order_bound against base degree g and marks
// the element truncated at that bound.  Every term must admit a certificate.
TorusElement truncate(const TorusElement& a, const ExpVec& g, long long order_bound);

// The unique quotient c with b * c = a (twisted product), or DivisionError.
TorusElement exact_divide(const TorusElement& a, const TorusElement& b);

}  // namespace qca

#endif
