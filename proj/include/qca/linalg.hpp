#ifndef QCA_LINALG_HPP
#define QCA_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qca {

// Small dense integer matrix, row-major.  Everything in this project is
// desk-scale (a handful of rows), so no attempt at sparsity or blocking.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static IntMat identity(int n);

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const = default;

    std::vector<long long> mul_vec(const std::vector<long long>& x) const;
    std::string str() const;
};

// Rank of A over the rationals.
int rank_rational(const IntMat& A);

bool full_column_rank(const IntMat& A);

// Solves A x = b exactly over Q for a matrix of full column rank.  Returns
// the solution only when it exists and is integral; nullopt otherwise.
// Callers that cannot guarantee full column rank must check it first.
std::optional<std::vector<long long>> solve_unique_integer(
    const IntMat& A, const std::vector<long long>& b);

// Basis of the rational kernel of A, each vector scaled to a primitive
// integer vector (entries coprime, first nonzero entry positive).
std::vector<std::vector<long long>> kernel_basis_integer(const IntMat& A);

}  // namespace qca

#endif
