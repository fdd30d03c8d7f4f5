#ifndef QCA_QCOEF_HPP
#define QCA_QCOEF_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qca {

using Zint = mpz_class;

/**
 * Laurent polynomial in v with arbitrary-precision integer coefficients,
 * where v^2 = q.  Only integer v-exponents occur; every q^(1/2) in a formula
 * is v^1 here.  Zero is the empty term map.
 *
 * bar() is the involution v -> v^(-1).  in_m() tests membership in the ideal
 * of strictly negative v-exponents (the "lower" coefficients of triangular
 * decompositions).
 */
class QCoeff {
  public:
    QCoeff() = default;
    QCoeff(long long c) {
        if (c != 0) terms_[0] = static_cast<long>(c);
    }
    QCoeff(const Zint& c) {
        if (c != 0) terms_[0] = c;
    }

    static QCoeff v_pow(long long e, Zint c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // The exponent e if this equals exactly +v^e, otherwise nullopt.
    std::optional<long long> unit_v_power() const;

    Zint coeff(long long e) const;
    const std::map<long long, Zint>& terms() const { return terms_; }

    QCoeff operator-() const;
    QCoeff& operator+=(const QCoeff& rhs);
    QCoeff& operator-=(const QCoeff& rhs);
    QCoeff operator+(const QCoeff& rhs) const;
    QCoeff operator-(const QCoeff& rhs) const;
    QCoeff operator*(const QCoeff& rhs) const;
    QCoeff& operator*=(const QCoeff& rhs);
    bool operator==(const QCoeff& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const QCoeff& rhs) const { return !(*this == rhs); }

    QCoeff bar() const;
    bool bar_invariant() const { return bar() == *this; }

    // True iff every exponent is strictly negative (0 counts as in m).
    bool in_m() const;

    // Terms with strictly negative exponent.
    QCoeff neg_part() const;

    // Specialization at v = 1 (classical limit).
    Zint at_one() const;

    // Text form with exponents ascending, e.g. "3*v^-2 + 1" or "v - v^-1".
    std::string str() const;

  private:
    std::map<long long, Zint> terms_;  // exponent -> nonzero coefficient
    void set(long long e, Zint c);
};

// The unique c in m with c - bar(c) = h, for bar-antisymmetric h
// (bar(h) = -h).  Throws InputError otherwise.
QCoeff solve_kl(const QCoeff& h);

}  // namespace qca

#endif
