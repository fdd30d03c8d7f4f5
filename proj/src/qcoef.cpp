#include "qca/qcoef.hpp"

#include <sstream>

#include "qca/error.hpp"

namespace qca {

QCoeff QCoeff::v_pow(long long e, Zint c) {
    QCoeff r;
    if (c != 0) r.terms_[e] = std::move(c);
    return r;
}

bool QCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 &&
           terms_.begin()->second == 1;
}

std::optional<long long> QCoeff::unit_v_power() const {
    if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
    return terms_.begin()->first;
}

Zint QCoeff::coeff(long long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Zint(0) : it->second;
}

void QCoeff::set(long long e, Zint c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

QCoeff QCoeff::operator-() const {
    QCoeff r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QCoeff& QCoeff::operator+=(const QCoeff& rhs) {
    for (auto& [e, c] : rhs.terms_) set(e, coeff(e) + c);
    return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& rhs) {
    for (auto& [e, c] : rhs.terms_) set(e, coeff(e) - c);
    return *this;
}

QCoeff QCoeff::operator+(const QCoeff& rhs) const {
    QCoeff r = *this;
    r += rhs;
    return r;
}

QCoeff QCoeff::operator-(const QCoeff& rhs) const {
    QCoeff r = *this;
    r -= rhs;
    return r;
}

QCoeff QCoeff::operator*(const QCoeff& rhs) const {
    QCoeff r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : rhs.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

QCoeff& QCoeff::operator*=(const QCoeff& rhs) {
    *this = *this * rhs;
    return *this;
}

QCoeff QCoeff::bar() const {
    QCoeff r;
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool QCoeff::in_m() const {
    return terms_.empty() || terms_.rbegin()->first < 0;
}

QCoeff QCoeff::neg_part() const {
    QCoeff r;
    for (auto& [e, c] : terms_) {
        if (e >= 0) break;
        r.terms_[e] = c;
    }
    return r;
}

Zint QCoeff::at_one() const {
    Zint s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
}

std::string QCoeff::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Zint abs_c = c < 0 ? Zint(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs_c.get_str();
        } else {
            if (abs_c != 1) os << abs_c.get_str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

QCoeff solve_kl(const QCoeff& h) {
    if (h.bar() != -h)
        throw InputError("solve_kl: input is not bar-antisymmetric: " + h.str());
    QCoeff c = h.neg_part();
    if (c - c.bar() != h)
        throw InternalError("solve_kl: residual after negative-part split");
    return c;
}

}  // namespace qca
