#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qca/cartan.hpp"
#include "qca/error.hpp"
#include "util.hpp"

using namespace qca;
using qca::testing::grid;

TEST_CASE("named matrices and symmetrizers") {
    CHECK(cartan_named("A2").a == grid({{2, -1}, {-1, 2}}));
    CHECK(cartan_named("A2").d == std::vector<long long>{1, 1});
    CHECK(cartan_named("A3").d == std::vector<long long>{1, 1, 1});
    CHECK(cartan_named("B2").d == std::vector<long long>{2, 1});
    CHECK(cartan_named("C2").d == std::vector<long long>{1, 2});
    CHECK(cartan_named("G2").d == std::vector<long long>{3, 1});
    CHECK_THROWS_AS(cartan_named("E8"), InputError);
}

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(make_cartan(grid({{1, -1}, {-1, 2}})), InputError);
    CHECK_THROWS_AS(make_cartan(grid({{2, 1}, {-1, 2}})), InputError);
    // Zeros must pair up.
    CHECK_THROWS_AS(make_cartan(grid({{2, 0}, {-1, 2}})), InputError);
    CHECK_THROWS_AS(make_cartan(grid({{2, -1, 0}, {-1, 2, -1}})), InputError);
    // A cyclically inconsistent matrix has no symmetrizer.
    IntMat bad = grid({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}});
    CHECK_THROWS_AS(make_cartan(bad), InputError);
    // Disconnected components get independent scales.
    auto c = make_cartan(grid({{2, 0}, {0, 2}}));
    CHECK(c.d == std::vector<long long>{1, 1});
}

TEST_CASE("positive root counts") {
    CHECK(finite_positive_roots(cartan_named("A1")) == 1);
    CHECK(finite_positive_roots(cartan_named("A2")) == 3);
    CHECK(finite_positive_roots(cartan_named("A3")) == 6);
    CHECK(finite_positive_roots(cartan_named("B2")) == 4);
    CHECK(finite_positive_roots(cartan_named("C2")) == 4);
    CHECK(finite_positive_roots(cartan_named("G2")) == 6);
    auto affine = make_cartan(grid({{2, -2}, {-2, 2}}));
    CHECK(!finite_positive_roots(affine).has_value());
}

TEST_CASE("word length by inverted roots") {
    auto a2 = cartan_named("A2");
    CHECK(weyl_length(a2, {}) == 0);
    CHECK(weyl_length(a2, {1}) == 1);
    CHECK(weyl_length(a2, {1, 2}) == 2);
    CHECK(weyl_length(a2, {1, 2, 1}) == 3);
    CHECK(weyl_length(a2, {1, 1}) == 0);
    CHECK(weyl_length(a2, {1, 2, 1, 2}) == 2);
    CHECK(weyl_length(a2, {2, 1, 2}) == 3);
    auto b2 = cartan_named("B2");
    CHECK(weyl_length(b2, {1, 2, 1, 2}) == 4);
    CHECK(weyl_length(b2, {1, 2, 1, 2, 1}) == 3);
    CHECK_THROWS_AS(weyl_length(a2, {3}), InputError);
}

TEST_CASE("reduced words") {
    auto a2 = cartan_named("A2");
    CHECK(validate_reduced(a2, {1, 2, 1}));
    CHECK(validate_reduced(a2, {2, 1, 2}));
    CHECK(validate_reduced(a2, {}));
    CHECK(!validate_reduced(a2, {1, 1}));
    CHECK(!validate_reduced(a2, {1, 2, 1, 2}));
    auto g2 = cartan_named("G2");
    CHECK(validate_reduced(g2, {1, 2, 1, 2, 1, 2}));
    CHECK(!validate_reduced(g2, {1, 2, 1, 2, 1, 2, 1}));
}

TEST_CASE("seed from a short reduced word") {
    auto a2 = cartan_named("A2");
    Seed t = seed_from_word(a2, {1, 2, 1});
    CHECK(t.names == std::vector<std::string>{"1", "2", "3"});
    CHECK(t.unfrozen == std::vector<int>{0});
    CHECK(t.b == grid({{0}, {1}, {-1}}));
    auto d = validate(t);
    CHECK(d.size() == 1);
    CHECK(d[0] > 0);
}

TEST_CASE("seed from a rank-three word") {
    auto a3 = cartan_named("A3");
    Seed t = seed_from_word(a3, {1, 2, 1, 3, 2, 1});
    CHECK(t.nvert() == 6);
    CHECK(t.unfrozen == std::vector<int>{0, 1, 2});
    CHECK(t.b == grid({{0, -1, 1},
                       {1, 0, -1},
                       {-1, 1, 0},
                       {0, 1, 0},
                       {0, -1, 1},
                       {0, 0, -1}}));
    auto d = validate(t);
    for (long long x : d) CHECK(x > 0);
}

TEST_CASE("seed from word rejects non-reduced input") {
    auto a2 = cartan_named("A2");
    CHECK_THROWS_AS(seed_from_word(a2, {1, 1}), InputError);
    CHECK_THROWS_AS(seed_from_word(a2, {1, 2, 1, 2}), InputError);
    CHECK_THROWS_AS(seed_from_word(a2, {0}), InputError);
}
