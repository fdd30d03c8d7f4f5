#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qca/linalg.hpp"

using namespace qca;

namespace {

IntMat grid(std::vector<std::vector<long long>> rows) {
    IntMat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("matrix product and transpose") {
    IntMat a = grid({{1, 2}, {3, 4}});
    IntMat b = grid({{0, 1}, {1, 0}});
    CHECK(a * b == grid({{2, 1}, {4, 3}}));
    CHECK(a.transposed() == grid({{1, 3}, {2, 4}}));
    CHECK(IntMat::identity(2) * a == a);
    CHECK(a.mul_vec({1, 1}) == std::vector<long long>{3, 7});
}

TEST_CASE("rank") {
    CHECK(rank_rational(grid({{1, 2}, {2, 4}})) == 1);
    CHECK(rank_rational(grid({{1, 0}, {0, 1}})) == 2);
    CHECK(rank_rational(grid({{0}, {0}})) == 0);
    CHECK(full_column_rank(grid({{0}, {1}, {-1}})));
    CHECK(!full_column_rank(grid({{1, 1}, {2, 2}})));
}

TEST_CASE("unique integer solve") {
    IntMat a = grid({{0}, {1}, {-1}});
    auto x = solve_unique_integer(a, {0, 3, -3});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<long long>{3});
    CHECK(!solve_unique_integer(a, {1, 0, 0}).has_value());

    IntMat b = grid({{2, 0}, {0, 2}, {1, 1}});
    auto y = solve_unique_integer(b, {4, 6, 5});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<long long>{2, 3});
    // Rational but non-integral solutions are rejected.
    CHECK(!solve_unique_integer(b, {1, 1, 1}).has_value());
}

TEST_CASE("integer kernel basis") {
    IntMat a = grid({{1, 1, 0}, {0, 0, 1}});
    auto ker = kernel_basis_integer(a);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == std::vector<long long>{1, -1, 0});

    IntMat full = grid({{1, 0}, {0, 1}});
    CHECK(kernel_basis_integer(full).empty());

    // Primitive scaling: first nonzero entry positive, entries coprime.
    IntMat b = grid({{2, -4}});
    auto k2 = kernel_basis_integer(b);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == std::vector<long long>{2, 1});
}

TEST_CASE("random solve round trips") {
    std::mt19937 rng(7003);
    std::uniform_int_distribution<long long> entry(-4, 4);
    int done = 0;
    while (done < 100) {
        IntMat a(3, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) a.at(i, j) = entry(rng);
        if (!full_column_rank(a)) continue;
        std::vector<long long> x{entry(rng), entry(rng)};
        auto back = solve_unique_integer(a, a.mul_vec(x));
        REQUIRE(back.has_value());
        CHECK(*back == x);
        ++done;
    }
}
