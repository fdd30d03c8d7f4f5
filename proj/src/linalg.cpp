#include "qca/linalg.hpp"

#include <gmpxx.h>

#include <sstream>

#include "qca/error.hpp"

namespace qca {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols != rhs.rows) throw InternalError("matrix product shape mismatch");
    IntMat p(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            long long aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) p.at(i, j) += aik * rhs.at(k, j);
        }
    return p;
}

std::vector<long long> IntMat::mul_vec(const std::vector<long long>& x) const {
    if (static_cast<int>(x.size()) != cols)
        throw InternalError("matrix-vector shape mismatch");
    std::vector<long long> y(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
    return y;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

using QMat = std::vector<std::vector<mpq_class>>;

QMat to_rational(const IntMat& A) {
    QMat m(A.rows, std::vector<mpq_class>(A.cols));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) m[i][j] = static_cast<long>(A.at(i, j));
    return m;
}

// Row-reduces m in place, returns pivot columns.  Standard fraction-exact
// Gauss-Jordan; fine at this scale.
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int nr = static_cast<int>(m.size());
    int nc = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int sel = -1;
        for (int i = row; i < nr; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        mpq_class inv = m[row][col];
        for (int j = col; j < nc; ++j) m[row][j] /= inv;
        for (int i = 0; i < nr; ++i) {
            if (i == row || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (int j = col; j < nc; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank_rational(const IntMat& A) {
    if (A.rows == 0 || A.cols == 0) return 0;
    QMat m = to_rational(A);
    return static_cast<int>(rref(m).size());
}

bool full_column_rank(const IntMat& A) { return rank_rational(A) == A.cols; }

std::optional<std::vector<long long>> solve_unique_integer(
    const IntMat& A, const std::vector<long long>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw InternalError("solve shape mismatch");
    if (A.cols == 0) {
        for (long long bi : b)
            if (bi != 0) return std::nullopt;
        return std::vector<long long>{};
    }
    // Augmented elimination: [A | b].
    QMat m(A.rows, std::vector<mpq_class>(A.cols + 1));
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m[i][j] = static_cast<long>(A.at(i, j));
        m[i][A.cols] = static_cast<long>(b[i]);
    }
    std::vector<int> pivots = rref(m);
    // Inconsistent if some pivot lands in the b column.
    for (int p : pivots)
        if (p == A.cols) return std::nullopt;
    if (static_cast<int>(pivots.size()) != A.cols)
        throw InternalError("solve_unique_integer requires full column rank");
    std::vector<long long> x(A.cols, 0);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        mpq_class val = m[r][A.cols];
        if (val.get_den() != 1) return std::nullopt;
        mpz_class num = val.get_num();
        if (!num.fits_slong_p()) throw InternalError("solution exceeds word size");
        x[pivots[r]] = num.get_si();
    }
    return x;
}

std::vector<std::vector<long long>> kernel_basis_integer(const IntMat& A) {
    std::vector<std::vector<long long>> basis;
    if (A.cols == 0) return basis;
    QMat m = to_rational(A);
    if (m.empty()) m.push_back(std::vector<mpq_class>(A.cols, 0));
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(A.cols, 0);
        v[free] = 1;
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
            v[pivots[r]] = -m[r][free];
        // Clear denominators, reduce to a primitive vector.
        mpz_class lcm = 1;
        for (auto& q : v) lcm = ::lcm(lcm, q.get_den());
        mpz_class gcd = 0;
        std::vector<mpz_class> w(A.cols);
        for (int j = 0; j < A.cols; ++j) {
            w[j] = v[j].get_num() * (lcm / v[j].get_den());
            gcd = ::gcd(gcd, w[j]);
        }
        if (gcd == 0) gcd = 1;
        int lead = -1;
        for (int j = 0; j < A.cols; ++j)
            if (w[j] != 0) { lead = j; break; }
        if (lead >= 0 && w[lead] < 0) gcd = -gcd;
        std::vector<long long> out(A.cols);
        for (int j = 0; j < A.cols; ++j) {
            mpz_class e = w[j] / gcd;
            if (!e.fits_slong_p()) throw InternalError("kernel vector exceeds word size");
            out[j] = e.get_si();
        }
        basis.push_back(std::move(out));
    }
    return basis;
}

}  // namespace qca
